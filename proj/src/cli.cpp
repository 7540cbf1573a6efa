#include "ldo/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldo/disk_machine.hpp"
#include "ldo/oracle.hpp"
#include "ldo/random_cnf.hpp"
#include "ldo/saldo.hpp"
#include "ldo/truth_mask.hpp"

namespace ldo::cli {

using nlohmann::json;

namespace {

std::string read_input(const RunConfig& cfg, std::istream& in) {
    if (cfg.input_path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream file(cfg.input_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + cfg.input_path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

MachineConfig machine_config(const RunConfig& cfg) {
    MachineConfig mc;
    mc.photocell = cfg.analog_photocell ? PhotocellMode::Analog : PhotocellMode::Scan;
    mc.return_disks = cfg.return_disks;
    mc.n_max = cfg.n_max;
    mc.expand_commands_in_trace = cfg.expand_commands;
    return mc;
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Ldo: return "ldo";
        case Engine::Saldo: return "saldo";
        case Engine::Mask: return "mask";
        case Engine::Oracle: return "oracle";
    }
    return "?";
}

/// Normalized outcome of running any engine on a parsed formula.
struct EngineOutcome {
    bool sat = false;
    std::vector<uint64_t> models;           // engine-local assignment indices
    std::optional<TruthMask> mask;          // mask engine only
    std::optional<RunResult> machine;       // ldo/saldo only
    std::unique_ptr<SaldoMachine> saldo;    // kept alive for registry decoding
};

EngineOutcome run_engine(const RunConfig& cfg, const CnfFormula& f) {
    EngineOutcome out;
    switch (cfg.engine) {
        case Engine::Mask: {
            TruthMask m = cnf_mask_direct(f, cfg.n_max);
            out.models = models_of_mask(m);
            out.sat = !out.models.empty();
            out.mask = std::move(m);
            break;
        }
        case Engine::Oracle: {
            OracleResult r = brute_force(f);
            out.sat = r.sat;
            out.models = std::move(r.models);
            break;
        }
        case Engine::Ldo: {
            DiskMachine machine(f.var_count, machine_config(cfg));
            out.machine = machine.run(word_from_formula(f));
            out.sat = out.machine->sat;
            out.models = out.machine->models;
            break;
        }
        case Engine::Saldo: {
            out.saldo = std::make_unique<SaldoMachine>(machine_config(cfg));
            out.machine = out.saldo->run(word_from_formula(f));
            out.sat = out.machine->sat;
            out.models = out.machine->models;
            break;
        }
    }
    return out;
}

json ledger_json(const CostLedger& l) {
    return json{{"machine_steps", l.machine_steps},
                {"field_ops", l.field_ops},
                {"blanks_consumed", l.blanks_consumed},
                {"blanks_for_assembly", l.blanks_for_assembly},
                {"disks_in_sa", l.disks_in_sa},
                {"variable_disk_draws", l.variable_disk_draws},
                {"disks_created", l.disks_created},
                {"resolution", l.resolution},
                {"min_field_angle", l.min_field_angle()}};
}

json trace_json(const std::vector<TraceEvent>& trace) {
    json events = json::array();
    for (const TraceEvent& ev : trace)
        events.push_back(json{{"step", ev.step},
                              {"token", ev.token},
                              {"rule", ev.rule},
                              {"mu", ev.after.mu},
                              {"nu", ev.after.nu},
                              {"s", ev.after.s},
                              {"mu_before", ev.before.mu},
                              {"nu_before", ev.before.nu},
                              {"s_before", ev.before.s},
                              {"field_ops_delta", ev.field_ops_delta}});
    return events;
}

/// Model line: index plus the decoded per-variable values. With the
/// self-assembling engine the indices are machine-local and decode through
/// the first-appearance registry.
std::string model_line(uint64_t index, const std::map<uint32_t, bool>& values) {
    std::ostringstream os;
    os << index;
    for (const auto& [var, value] : values) os << " a" << var << "=" << (value ? 1 : 0);
    return os.str();
}

std::map<uint32_t, bool> global_model_values(uint64_t j, uint32_t n) {
    std::map<uint32_t, bool> values;
    for (uint32_t k = 1; k <= n; ++k) values[k] = (j >> (k - 1)) & 1;
    return values;
}

struct CommonOptions {
    RunConfig cfg;
    std::string format_choice = "auto";
    std::string engine_choice = "ldo";
    std::string output_choice = "text";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_engine = true) {
    cmd->add_option("input", opts.cfg.input_path,
                    "Input file ('-' or omitted reads standard input)");
    cmd->add_option("-f,--format", opts.format_choice, "Input format")
        ->check(CLI::IsMember({"auto", "word", "dimacs"}));
    if (with_engine)
        cmd->add_option("-e,--engine", opts.engine_choice, "Evaluation engine")
            ->check(CLI::IsMember({"ldo", "saldo", "mask", "oracle"}));
    cmd->add_option("--vars", opts.cfg.n_override,
                    "Declared variable count (must cover every referenced index)");
    cmd->add_option("--n-max", opts.cfg.n_max, "Cap on variables (masks are 2^n bits wide)");
    cmd->add_flag("--analog-photocell", opts.cfg.analog_photocell,
                  "Idealized one-step photocell (cost 1 instead of one pass per field)");
    cmd->add_flag("!--no-return-disks", opts.cfg.return_disks,
                  "Do not return clause disks to storage (unlimited inventory)");
}

void finalize_common(CommonOptions& opts) {
    if (opts.format_choice == "word") opts.cfg.format = InputFormat::WordText;
    else if (opts.format_choice == "dimacs") opts.cfg.format = InputFormat::Dimacs;
    else opts.cfg.format = InputFormat::Auto;

    if (opts.engine_choice == "ldo") opts.cfg.engine = Engine::Ldo;
    else if (opts.engine_choice == "saldo") opts.cfg.engine = Engine::Saldo;
    else if (opts.engine_choice == "mask") opts.cfg.engine = Engine::Mask;
    else opts.cfg.engine = Engine::Oracle;

    if (opts.output_choice == "json") opts.cfg.output = OutputFormat::Json;
    else if (opts.output_choice == "kv") opts.cfg.output = OutputFormat::KeyValue;
    else opts.cfg.output = OutputFormat::Text;
}

CnfFormula load_formula(const RunConfig& cfg, std::istream& in, std::ostream& err) {
    std::vector<std::string> warnings;
    CnfFormula f = parse_input(read_input(cfg, in), cfg.format, cfg.n_override, &warnings);
    for (const std::string& w : warnings) err << "warning: " << w << "\n";
    return f;
}

int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    CnfFormula f = load_formula(cfg, in, err);
    EngineOutcome o = run_engine(cfg, f);
    if (cfg.output == OutputFormat::Json) {
        json j{{"verdict", o.sat ? "SAT" : "UNSAT"},
               {"engine", engine_name(cfg.engine)},
               {"vars", f.var_count},
               {"clauses", f.clause_count()}};
        if (o.machine) j["ledger"] = ledger_json(o.machine->ledger);
        if (o.mask) j["mask"] = o.mask->to_string();
        out << j.dump() << "\n";
    } else {
        out << (o.sat ? "SAT" : "UNSAT") << "\n";
    }
    return o.sat ? kExitSat : kExitUnsat;
}

int cmd_models(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    CnfFormula f = load_formula(cfg, in, err);
    EngineOutcome o = run_engine(cfg, f);
    uint64_t shown = o.models.size();
    bool truncated = false;
    if (cfg.model_limit && *cfg.model_limit < shown) {
        shown = *cfg.model_limit;
        truncated = true;
    }
    if (cfg.output == OutputFormat::Json) {
        json models = json::array();
        for (uint64_t i = 0; i < shown; ++i) {
            uint64_t index = o.models[i];
            auto values = o.saldo ? decode_model_saldo(o.saldo->registry(), index)
                                  : global_model_values(index, f.var_count);
            json asg = json::object();
            for (const auto& [var, value] : values) asg["a" + std::to_string(var)] = value;
            models.push_back(json{{"index", index}, {"assignment", asg}});
        }
        out << json{{"verdict", o.sat ? "SAT" : "UNSAT"},
                    {"engine", engine_name(cfg.engine)},
                    {"count", o.models.size()},
                    {"truncated", truncated},
                    {"models", models}}
                   .dump()
            << "\n";
    } else {
        for (uint64_t i = 0; i < shown; ++i) {
            uint64_t index = o.models[i];
            auto values = o.saldo ? decode_model_saldo(o.saldo->registry(), index)
                                  : global_model_values(index, f.var_count);
            out << model_line(index, values) << "\n";
        }
        if (truncated)
            err << "note: " << o.models.size() - shown << " further models suppressed by --limit\n";
    }
    return 0;
}

int cmd_trace(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    if (cfg.engine == Engine::Mask || cfg.engine == Engine::Oracle)
        throw std::runtime_error("trace requires a machine engine (ldo or saldo)");
    CnfFormula f = load_formula(cfg, in, err);
    EngineOutcome o = run_engine(cfg, f);
    if (cfg.output == OutputFormat::Json) {
        out << json{{"engine", engine_name(cfg.engine)},
                    {"verdict", o.sat ? "SAT" : "UNSAT"},
                    {"events", trace_json(o.machine->trace)}}
                   .dump()
            << "\n";
    } else {
        for (const TraceEvent& ev : o.machine->trace) out << ev.line() << "\n";
    }
    return 0;
}

int cmd_convert(const RunConfig& cfg, const std::string& target, std::istream& in,
                std::ostream& out, std::ostream& err) {
    CnfFormula f = load_formula(cfg, in, err);
    if (target == "word")
        out << encode_word(f) << "\n";
    else
        out << emit_dimacs(f);
    return 0;
}

int cmd_report(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    if (cfg.engine == Engine::Mask || cfg.engine == Engine::Oracle)
        throw std::runtime_error("report requires a machine engine (ldo or saldo)");
    CnfFormula f = load_formula(cfg, in, err);
    EngineOutcome o = run_engine(cfg, f);
    const CostLedger& l = o.machine->ledger;
    PrecisionReport p = precision_report(l, cfg.precision_threshold);

    switch (cfg.output) {
        case OutputFormat::Json: {
            json j{{"engine", engine_name(cfg.engine)},
                   {"verdict", o.sat ? "SAT" : "UNSAT"},
                   {"ledger", ledger_json(l)},
                   {"precision",
                    json{{"min_field_angle", p.min_field_angle},
                         {"fields_per_disk", p.fields_per_disk},
                         {"disks_created", p.disks_created},
                         {"blanks_consumed", p.blanks_consumed},
                         {"blanks_for_assembly", p.blanks_for_assembly},
                         {"blanks_for_clauses", p.blanks_for_clauses},
                         {"warning_threshold", p.warning_threshold},
                         {"precision_warning", p.precision_warning}}}};
            out << j.dump() << "\n";
            break;
        }
        case OutputFormat::KeyValue: {
            out << "engine=" << engine_name(cfg.engine) << "\n"
                << "verdict=" << (o.sat ? "SAT" : "UNSAT") << "\n"
                << "machine_steps=" << l.machine_steps << "\n"
                << "field_ops=" << l.field_ops << "\n"
                << "blanks_consumed=" << l.blanks_consumed << "\n"
                << "blanks_for_assembly=" << l.blanks_for_assembly << "\n"
                << "blanks_for_clauses=" << p.blanks_for_clauses << "\n"
                << "disks_in_sa=" << l.disks_in_sa << "\n"
                << "variable_disk_draws=" << l.variable_disk_draws << "\n"
                << "disks_created=" << l.disks_created << "\n"
                << "fields_per_disk=" << l.resolution << "\n"
                << "min_field_angle=" << l.min_field_angle() << "\n"
                << "precision_warning=" << (p.precision_warning ? 1 : 0) << "\n";
            break;
        }
        case OutputFormat::Text: {
            out << "engine:               " << engine_name(cfg.engine) << "\n"
                << "verdict:              " << (o.sat ? "SAT" : "UNSAT") << "\n"
                << "machine steps:        " << l.machine_steps << "\n"
                << "field operations:     " << l.field_ops << "\n"
                << "blanks consumed:      " << l.blanks_consumed << " (assembly "
                << l.blanks_for_assembly << ", clauses " << p.blanks_for_clauses << ")\n"
                << "disks in storage:     " << l.disks_in_sa << "\n"
                << "variable disk draws:  " << l.variable_disk_draws << "\n"
                << "disks created:        " << l.disks_created << "\n"
                << "fields per disk:      " << l.resolution << "\n"
                << "min field angle:      " << l.min_field_angle() << " rad\n";
            if (p.precision_warning)
                out << "warning: min field angle below " << p.warning_threshold
                    << " rad; a physical build would be past its precision limit\n";
            break;
        }
    }
    return 0;
}

struct SelftestOptions {
    uint64_t seed = 42;
    uint64_t count = 100;
    RandomCnfParams params;
};

int cmd_selftest(const SelftestOptions& opts, std::ostream& out) {
    std::mt19937_64 rng(opts.seed);
    for (uint64_t i = 0; i < opts.count; ++i) {
        CnfFormula f = random_cnf(rng, opts.params);
        OracleResult oracle = brute_force(f);
        std::vector<uint64_t> mask_models = models_of_mask(cnf_mask_direct(f));
        std::vector<uint64_t> demorgan_models = models_of_mask(cnf_mask_demorgan(f));

        DiskMachine ldo_machine(f.var_count, {});
        RunResult ldo_run = ldo_machine.run(word_from_formula(f));

        SaldoMachine saldo_machine{MachineConfig{}};
        RunResult saldo_run = saldo_machine.run(word_from_formula(f));
        std::vector<uint64_t> saldo_models = models_in_input_numbering(
            saldo_machine.registry(), saldo_run.models, f.var_count);

        auto fail = [&](const std::string& what) {
            out << "selftest FAILED at instance " << i << " (" << what << "): "
                << encode_word(f) << "\n";
            return 1;
        };
        if (mask_models != oracle.models) return fail("mask-direct vs oracle");
        if (demorgan_models != oracle.models) return fail("mask-demorgan vs oracle");
        if (ldo_run.sat != oracle.sat) return fail("ldo verdict");
        if (ldo_run.models != oracle.models) return fail("ldo models");
        if (saldo_run.sat != oracle.sat) return fail("saldo verdict");
        if (saldo_models != oracle.models) return fail("saldo models");
    }
    out << "selftest: " << opts.count << " random instances, all engines agree (seed="
        << opts.seed << ")\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Disk-stack SAT machine simulator with dual cost accounting"};
    app.require_subcommand(1);

    CommonOptions solve_opts, models_opts, trace_opts, convert_opts, report_opts;
    std::string convert_target;
    SelftestOptions selftest_opts;

    CLI::App* solve = app.add_subcommand("solve", "Decide satisfiability (exit 10 SAT, 20 UNSAT)");
    add_common_flags(solve, solve_opts);
    solve->add_option("-o,--output", solve_opts.output_choice, "Output form")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* models = app.add_subcommand("models", "List satisfying assignments");
    add_common_flags(models, models_opts);
    models->add_option("-o,--output", models_opts.output_choice, "Output form")
        ->check(CLI::IsMember({"text", "json"}));
    models->add_option("--limit", models_opts.cfg.model_limit,
                       "Cap on listed models (enumeration can be exponential)");

    CLI::App* trace = app.add_subcommand("trace", "Emit the machine's transition trace");
    add_common_flags(trace, trace_opts);
    trace->add_option("-o,--output", trace_opts.output_choice, "Output form")
        ->check(CLI::IsMember({"text", "json"}));
    trace->add_flag("--commands", trace_opts.cfg.expand_commands,
                    "Expand clause-end handling into command events i..v");

    CLI::App* convert = app.add_subcommand("convert", "Convert between word and DIMACS forms");
    add_common_flags(convert, convert_opts, /*with_engine=*/false);
    convert->add_option("--to", convert_target, "Target format")
        ->check(CLI::IsMember({"word", "dimacs"}))
        ->required();

    CLI::App* report = app.add_subcommand("report", "Run and print the cost/precision ledger");
    add_common_flags(report, report_opts);
    report->add_option("-o,--output", report_opts.output_choice, "Output form")
        ->check(CLI::IsMember({"text", "kv", "json"}));
    report->add_option("--threshold", report_opts.cfg.precision_threshold,
                       "Precision warning threshold in radians");

    CLI::App* selftest =
        app.add_subcommand("selftest", "Cross-check all engines on random instances");
    selftest->add_option("--seed", selftest_opts.seed, "Generator seed");
    selftest->add_option("--count", selftest_opts.count, "Number of instances");
    selftest->add_option("--max-vars", selftest_opts.params.max_vars, "Largest variable count");
    selftest->add_option("--max-clauses", selftest_opts.params.max_clauses,
                         "Largest clause count");
    selftest->add_option("--max-width", selftest_opts.params.max_width, "Largest clause width");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            finalize_common(solve_opts);
            return cmd_solve(solve_opts.cfg, in, out, err);
        }
        if (models->parsed()) {
            finalize_common(models_opts);
            return cmd_models(models_opts.cfg, in, out, err);
        }
        if (trace->parsed()) {
            finalize_common(trace_opts);
            return cmd_trace(trace_opts.cfg, in, out, err);
        }
        if (convert->parsed()) {
            finalize_common(convert_opts);
            return cmd_convert(convert_opts.cfg, convert_target, in, out, err);
        }
        if (report->parsed()) {
            finalize_common(report_opts);
            return cmd_report(report_opts.cfg, in, out, err);
        }
        if (selftest->parsed()) return cmd_selftest(selftest_opts, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command given\n";
    return 1;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace ldo::cli
