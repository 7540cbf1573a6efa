#include "ldo/saldo.hpp"

#include <set>

namespace ldo {

uint32_t VariableRegistry::ordinal_of(VarId v) const {
    auto it = ordinal_by_index_.find(v.index);
    return it == ordinal_by_index_.end() ? 0 : it->second;
}

uint32_t VariableRegistry::bind(VarId v) {
    if (contains(v)) throw std::logic_error("variable already registered");
    uint32_t ordinal = static_cast<uint32_t>(order_.size()) + 1;
    ordinal_by_index_.emplace(v.index, ordinal);
    order_.push_back(v.index);
    return ordinal;
}

std::map<uint32_t, bool> decode_model_saldo(const VariableRegistry& registry, uint64_t j) {
    const uint32_t n = registry.created();
    // The machine never has fewer than two fields, so with an empty registry
    // both field indices decode to the empty assignment.
    const uint64_t bound = uint64_t{1} << (n == 0 ? 1 : n);
    if (j >= bound)
        throw std::out_of_range("assignment index out of range for " + std::to_string(n) +
                                " registered variables");
    std::map<uint32_t, bool> values;
    const auto& order = registry.creation_order();
    for (uint32_t i = 1; i <= n; ++i) values[order[i - 1]] = (j >> (n - i)) & 1;
    return values;
}

std::vector<uint64_t> models_in_input_numbering(const VariableRegistry& registry,
                                                const std::vector<uint64_t>& saldo_models,
                                                uint32_t n) {
    std::vector<uint32_t> free_vars;
    for (uint32_t k = 1; k <= n; ++k)
        if (!registry.contains(VarId{k})) free_vars.push_back(k);
    for (uint32_t k : registry.creation_order())
        if (k > n)
            throw std::invalid_argument("registered variable a" + std::to_string(k) +
                                        " exceeds the requested variable count");

    std::set<uint64_t> out;
    for (uint64_t m : saldo_models) {
        uint64_t base = 0;
        for (const auto& [index, value] : decode_model_saldo(registry, m))
            if (value) base |= uint64_t{1} << (index - 1);
        const uint64_t combos = uint64_t{1} << free_vars.size();
        for (uint64_t c = 0; c < combos; ++c) {
            uint64_t j = base;
            for (size_t b = 0; b < free_vars.size(); ++b)
                if ((c >> b) & 1) j |= uint64_t{1} << (free_vars[b] - 1);
            out.insert(j);
        }
    }
    return {out.begin(), out.end()};
}

Disk rotate_ccw(const Disk& d, uint64_t fields) {
    Disk out = d;
    out.blackness = d.blackness.rotated_down(fields % d.resolution());
    return out;
}

PrecisionReport precision_report(const CostLedger& ledger, double warning_threshold) {
    PrecisionReport r;
    r.min_field_angle = ledger.min_field_angle();
    r.fields_per_disk = ledger.resolution;
    r.disks_created = ledger.disks_created;
    r.blanks_consumed = ledger.blanks_consumed;
    r.blanks_for_assembly = ledger.blanks_for_assembly;
    r.blanks_for_clauses = ledger.blanks_consumed - ledger.blanks_for_assembly;
    r.warning_threshold = warning_threshold;
    r.precision_warning = r.min_field_angle < warning_threshold;
    return r;
}

SaldoMachine::SaldoMachine(MachineConfig config)
    : DiskMachine(SelfAssembling{}, config), aa_(2) {
    // The machine ships with two copies of a single two-field disk; nothing is
    // named until the first literal arrives.
    sa_patterns_.emplace(1, var_mask_direct(1, 1));
    sa_copies_[1] = 2;
    created_count_ = 1;
    ledger_.disks_created = 1;
    refresh_storage_snapshot();
}

uint32_t SaldoMachine::finest_key() const { return created_count_; }

bool SaldoMachine::inventory_ok() const {
    auto it = sa_copies_.find(finest_key());
    return it != sa_copies_.end() && it->second == 2;
}

Disk SaldoMachine::expose_over_assembly() {
    take_blank(true);
    TruthMask blackened = exposure_pattern(aa_);
    charge_fields(resolution_);
    return Disk{std::move(blackened), false, std::nullopt, {}};
}

void SaldoMachine::double_assembly_area() {
    for (Disk& d : aa_.stack) d.blackness = d.blackness.stretched_doubled();
    aa_.recompute_composite(resolution_);
}

Disk SaldoMachine::g_cycle() {
    const uint32_t base_key = finest_key();

    // g0: finest disk from storage to the assembly area; a blank on top is
    // illuminated into its complement and stays. The complement copy is fixed
    // right away so the remaining exposures cannot re-blacken it. The copy
    // count may dip below zero transiently when duplicate literals have both
    // storage copies on the clause stack; the extra copy is restored at g3.
    MachineState before = state_;
    uint64_t fo = ledger_.field_ops;
    --sa_copies_[base_key];
    aa_.push(Disk{sa_patterns_.at(base_key), true, std::nullopt, "assembly base"});
    charge_fields(resolution_);
    Disk complement = expose_over_assembly();
    complement.fixed = true;
    complement.tag = "assembly complement";
    aa_.push(std::move(complement));
    ++ledger_.machine_steps;
    emit("-", "g0", before, fo);

    // g1: the half-field rotation requires the finer grid, so every resident
    // disk doubles its resolution first. Then the top disk rotates one (new)
    // field counterclockwise and a second blank is exposed and stays.
    before = state_;
    fo = ledger_.field_ops;
    double_resolution();
    aa_.stack.back() = rotate_ccw(aa_.stack.back(), 1);
    charge_fields(resolution_);
    aa_.recompute_composite(resolution_);
    Disk candidate = expose_over_assembly();
    aa_.push(std::move(candidate));
    ++ledger_.machine_steps;
    emit("-", "g1", before, fo);

    // g2: rotate the top disk by one pre-doubling field (two fields now),
    // illuminate once more, then remove and fix it: the alternating pattern.
    before = state_;
    fo = ledger_.field_ops;
    Disk fresh = rotate_ccw(aa_.stack.back(), 2);
    charge_fields(resolution_);
    aa_.stack.pop_back();
    aa_.recompute_composite(resolution_);
    fresh.blackness = or_mask(fresh.blackness, exposure_pattern(aa_));
    charge_fields(resolution_);
    fresh.fixed = true;
    fresh.tag.clear();
    ++ledger_.machine_steps;
    emit("-", "g2", before, fo);

    // g3: clear the assembly area back to storage, then copy the new disk once
    // more to get its companion. The companion comes out as the photonegative,
    // which for the alternating pattern is a one-field rotation; it is stored
    // normalized to the positive pattern.
    before = state_;
    fo = ledger_.field_ops;
    for (Disk& d : aa_.stack) {
        if (d.tag == "assembly base")
            ++sa_copies_[base_key];
        else
            sa_offcuts_.push_back(std::move(d));
    }
    aa_.stack.clear();
    aa_.recompute_composite(resolution_);
    aa_.push(fresh);
    charge_fields(resolution_);
    Disk companion = expose_over_assembly();
    companion.blackness = fresh.blackness;
    companion.fixed = true;
    companion.tag = "companion (normalized from photonegative)";
    aa_.stack.clear();
    aa_.recompute_composite(resolution_);

    const uint32_t new_key = ++created_count_;
    sa_patterns_.emplace(new_key, fresh.blackness);
    sa_copies_[new_key] = 2;
    ledger_.disks_created = created_count_;
    refresh_storage_snapshot();
    ++ledger_.machine_steps;
    emit("-", "g3", before, fo);

    return fresh;
}

void SaldoMachine::ensure_variable(VarId v) {
    if (registry_.contains(v)) return;
    if (registry_.created() == created_count_) g_cycle();
    registry_.bind(v);
}

}  // namespace ldo
