#include "ldo/disk_machine.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace ldo {

Disk make_variable_disk(uint32_t k, uint64_t resolution) {
    if (resolution == 0 || (resolution & (resolution - 1)) != 0)
        throw std::invalid_argument("disk resolution must be a power of two");
    TruthMask pattern = var_mask_direct(k, TruthMask(resolution).var_count());
    return Disk{std::move(pattern), false, VarId{k}, {}};
}

Disk flip_disk(const Disk& d) {
    Disk out = d;
    out.blackness = reverse_mask(d.blackness);
    return out;
}

void WorkingArea::push(Disk d) {
    composite = or_mask(composite, d.blackness);
    stack.push_back(std::move(d));
}

void WorkingArea::recompute_composite(uint64_t resolution) {
    composite = TruthMask(resolution);
    for (const Disk& d : stack) composite = or_mask(composite, d.blackness);
}

bool is_known_rule_tag(const std::string& tag) {
    static const std::set<std::string> kTags = {"7a", "7b", "7c", "7d", "7e", "7f", "i", "ii",
                                                "iii", "iv", "v", "g0", "g1", "g2", "g3"};
    return kTags.count(tag) > 0;
}

std::string TraceEvent::line() const {
    std::ostringstream os;
    os << "step=" << step << " token=" << token << " rule=" << rule << " mu=" << after.mu
       << " nu=" << after.nu << " s=" << after.s << " field_ops+=" << field_ops_delta;
    return os.str();
}

double CostLedger::min_field_angle() const {
    return 2.0 * std::numbers::pi / static_cast<double>(resolution);
}

DiskMachine::DiskMachine(uint32_t var_count, MachineConfig config)
    : config_(config), wa1_(1), wa2_(1) {
    if (var_count > config_.n_max || var_count >= 64)
        throw std::length_error("machine over " + std::to_string(var_count) +
                                " variables exceeds the configured cap of " +
                                std::to_string(std::min<uint32_t>(config_.n_max, 63)));
    resolution_ = uint64_t{1} << var_count;
    wa1_ = WorkingArea(resolution_);
    wa2_ = WorkingArea(resolution_);
    for (uint32_t k = 1; k <= var_count; ++k) {
        sa_patterns_.emplace(k, var_mask_direct(k, var_count));
        sa_copies_[k] = 1;
    }
    created_count_ = var_count;
    ledger_.resolution = resolution_;
    ledger_.disks_created = var_count;
    refresh_storage_snapshot();
}

DiskMachine::DiskMachine(SelfAssembling, MachineConfig config)
    : config_(config), wa1_(2), wa2_(2), resolution_(2), self_assembling_(true) {
    ledger_.resolution = resolution_;
}

int DiskMachine::photocell(const WorkingArea& area) {
    return area.composite.all_ones() ? 0 : 1;
}

TruthMask DiskMachine::exposure_pattern(const WorkingArea& area) const {
    return not_mask(area.composite);
}

void DiskMachine::take_blank(bool for_assembly) {
    if (config_.bss_capacity && ledger_.blanks_consumed >= *config_.bss_capacity)
        throw std::runtime_error("blank disk supply exhausted");
    ++ledger_.blanks_consumed;
    if (for_assembly) ++ledger_.blanks_for_assembly;
}

uint64_t DiskMachine::storage_census() const {
    uint64_t census = 0;
    for (const auto& [index, copies] : sa_copies_)
        census += copies > 0 ? static_cast<uint64_t>(copies) : 0;
    return census + sa_offcuts_.size();
}

void DiskMachine::draw_variable_disk(uint32_t slot) {
    ++ledger_.variable_disk_draws;
    if (config_.return_disks) --sa_copies_[slot];
    refresh_storage_snapshot();
}

void DiskMachine::return_wa1_to_storage() {
    if (config_.return_disks) {
        for (const Disk& d : wa1_.stack)
            if (d.var) ++sa_copies_[storage_key(*d.var)];
    }
    wa1_.stack.clear();
    wa1_.composite = TruthMask(resolution_);
    refresh_storage_snapshot();
}

void DiskMachine::push_literal(const Literal& lit) {
    if (state_.halted) throw std::logic_error("push_literal on a halted machine");
    auto it = sa_patterns_.find(storage_key(lit.var));
    if (it == sa_patterns_.end())
        throw std::invalid_argument("no disk for a" + std::to_string(lit.var.index) +
                                    " in storage");
    Disk d{it->second, false, lit.var, {}};
    if (lit.negated) d = flip_disk(d);
    draw_variable_disk(storage_key(lit.var));
    wa1_.push(std::move(d));
    charge_fields(resolution_);
    ++state_.mu;
    ++ledger_.machine_steps;
}

Disk DiskMachine::expose_clause_negative() {
    if (state_.halted) throw std::logic_error("expose on a halted machine");
    take_blank(false);
    TruthMask blackened = exposure_pattern(wa1_);
    charge_fields(resolution_);
    return Disk{std::move(blackened), false, std::nullopt,
                "~C" + std::to_string(state_.nu + 1)};
}

void DiskMachine::finish_clause() {
    const bool expand = config_.expand_commands_in_trace;
    auto command = [&](const std::string& tag, const MachineState& before, uint64_t fo_before) {
        ++ledger_.machine_steps;
        if (expand) emit("-", tag, before, fo_before);
    };

    // (i) blank onto WA1, illuminate: the blank blackens where light passes.
    MachineState before = state_;
    uint64_t fo = ledger_.field_ops;
    Disk negative = expose_clause_negative();
    command("i", before, fo);

    // (ii) move the exposed disk onto WA2.
    before = state_;
    fo = ledger_.field_ops;
    if (config_.guard == NegationGuard::FixOnMove) negative.fixed = true;
    wa2_.push(std::move(negative));
    charge_fields(resolution_);
    ++state_.nu;
    command("ii", before, fo);

    // (iii) clear WA1 back to storage.
    before = state_;
    fo = ledger_.field_ops;
    return_wa1_to_storage();
    state_.mu = 0;
    command("iii", before, fo);

    // (iv) photocell test over WA2.
    before = state_;
    fo = ledger_.field_ops;
    int signal = photocell(wa2_);
    charge_fields(config_.photocell == PhotocellMode::Scan ? resolution_ : 1);
    command("iv", before, fo);

    // (v) satisfiability bit follows the test.
    before = state_;
    fo = ledger_.field_ops;
    state_.s = signal;
    command("v", before, fo);
}

void DiskMachine::emit(const std::string& token, const std::string& rule,
                       const MachineState& before, uint64_t field_ops_before) {
    TraceEvent ev;
    ev.step = trace_.size();
    ev.token = token;
    ev.rule = rule;
    ev.before = before;
    ev.after = state_;
    ev.field_ops_delta = ledger_.field_ops - field_ops_before;
    trace_.push_back(std::move(ev));
}

TraceEvent DiskMachine::step(const Token& token) {
    if (state_.halted) throw std::logic_error("input token after halt");
    if (token.kind == TokenKind::Lit) before_literal(token.var);

    MachineState before = state_;
    uint64_t fo_before = ledger_.field_ops;
    std::string rule;
    switch (token.kind) {
        case TokenKind::Lit:
            push_literal({token.var, token.negated});
            rule = "7a";
            break;
        case TokenKind::OpenBracket:
            ++ledger_.machine_steps;
            if (state_.s == 1) {
                rule = "7c";
            } else {
                state_.halted = true;
                state_.output = 0;
                rule = "7b";
            }
            break;
        case TokenKind::CloseBracket:
            ++ledger_.machine_steps;
            if (config_.expand_commands_in_trace) {
                emit(token_text(token), "7d", before, fo_before);
                TraceEvent tok_ev = trace_.back();
                finish_clause();
                return tok_ev;
            }
            finish_clause();
            rule = "7d";
            break;
        case TokenKind::End:
            ++ledger_.machine_steps;
            state_.halted = true;
            state_.output = state_.s;
            rule = state_.s == 1 ? "7f" : "7e";
            break;
    }
    emit(token_text(token), rule, before, fo_before);
    return trace_.back();
}

RunResult DiskMachine::run(const Word& word) {
    if (run_started_) throw std::logic_error("machine instance already ran");
    run_started_ = true;

    uint64_t consumed = 0;
    for (const Token& token : word.tokens) {
        step(token);
        ++consumed;
        if (state_.halted) break;
    }
    if (!state_.halted)
        throw std::invalid_argument("word did not halt the machine (missing end marker?)");

    refresh_storage_snapshot();
    ledger_.resolution = resolution_;

    RunResult result;
    result.output = *state_.output;
    result.sat = result.output == 1;
    result.tokens_consumed = consumed;
    result.early_halt = consumed < word.tokens.size();
    result.ledger = ledger_;
    result.result_mask = wa2_.composite;
    result.models = result.result_mask.zeros_indices();
    result.trace = trace_;
    return result;
}

std::vector<uint64_t> DiskMachine::enumerate_models(const Word& word) {
    return run(word).models;
}

void DiskMachine::double_resolution() {
    const uint64_t doubled = resolution_ * 2;
    if (doubled > (uint64_t{1} << config_.n_max))
        throw std::length_error("resolution doubling would exceed the configured cap of 2^" +
                                std::to_string(config_.n_max) + " fields");
    uint64_t residents = storage_census() + wa1_.size() + wa2_.size() + assembly_area_disks();
    for (auto& [index, pattern] : sa_patterns_) pattern = pattern.stretched_doubled();
    for (Disk& d : sa_offcuts_) d.blackness = d.blackness.stretched_doubled();
    for (Disk& d : wa1_.stack) d.blackness = d.blackness.stretched_doubled();
    for (Disk& d : wa2_.stack) d.blackness = d.blackness.stretched_doubled();
    resolution_ = doubled;
    wa1_.recompute_composite(resolution_);
    wa2_.recompute_composite(resolution_);
    double_assembly_area();
    charge_fields(residents * doubled);
    ledger_.resolution = resolution_;
}

}  // namespace ldo
