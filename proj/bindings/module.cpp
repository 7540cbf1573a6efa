#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ldo/disk_machine.hpp"
#include "ldo/oracle.hpp"
#include "ldo/saldo.hpp"
#include "ldo/truth_mask.hpp"
#include "ldo/word_codec.hpp"

namespace py = pybind11;
using namespace ldo;

namespace {

CnfFormula parse_any(const std::string& text, const std::string& format) {
    InputFormat f = InputFormat::Auto;
    if (format == "word") f = InputFormat::WordText;
    else if (format == "dimacs") f = InputFormat::Dimacs;
    else if (format != "auto") throw std::invalid_argument("format must be auto, word or dimacs");
    return parse_input(text, f);
}

py::dict ledger_dict(const CostLedger& l) {
    py::dict d;
    d["machine_steps"] = l.machine_steps;
    d["field_ops"] = l.field_ops;
    d["blanks_consumed"] = l.blanks_consumed;
    d["blanks_for_assembly"] = l.blanks_for_assembly;
    d["disks_in_sa"] = l.disks_in_sa;
    d["variable_disk_draws"] = l.variable_disk_draws;
    d["disks_created"] = l.disks_created;
    d["resolution"] = l.resolution;
    d["min_field_angle"] = l.min_field_angle();
    return d;
}

py::dict run_machine(const CnfFormula& f, const std::string& engine, bool analog_photocell,
                     bool want_trace) {
    MachineConfig cfg;
    cfg.photocell = analog_photocell ? PhotocellMode::Analog : PhotocellMode::Scan;

    std::unique_ptr<DiskMachine> machine;
    SaldoMachine* saldo = nullptr;
    if (engine == "ldo") {
        machine = std::make_unique<DiskMachine>(f.var_count, cfg);
    } else if (engine == "saldo") {
        auto s = std::make_unique<SaldoMachine>(cfg);
        saldo = s.get();
        machine = std::move(s);
    } else {
        throw std::invalid_argument("engine must be ldo or saldo");
    }

    RunResult r = machine->run(word_from_formula(f));
    py::dict d;
    d["sat"] = r.sat;
    d["models"] = r.models;
    d["ledger"] = ledger_dict(r.ledger);
    if (saldo) {
        py::list decoded;
        for (uint64_t m : r.models) {
            py::dict values;
            for (const auto& [var, value] : decode_model_saldo(saldo->registry(), m))
                values[py::int_(var)] = value;
            decoded.append(py::make_tuple(m, values));
        }
        d["decoded_models"] = decoded;
        d["models_in_input_numbering"] =
            models_in_input_numbering(saldo->registry(), r.models, f.var_count);
        d["variables_in_creation_order"] = saldo->registry().creation_order();
    }
    if (want_trace) {
        py::list lines;
        for (const TraceEvent& ev : r.trace) lines.append(ev.line());
        d["trace"] = lines;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Disk-stack SAT machine simulator (mask algebra, fixed and self-assembling "
              "machines, brute-force oracle)";

    py::class_<CnfFormula>(m, "CnfFormula")
        .def_property_readonly("var_count", [](const CnfFormula& f) { return f.var_count; })
        .def_property_readonly("clause_count",
                               [](const CnfFormula& f) { return f.clause_count(); })
        .def_property_readonly("literal_count",
                               [](const CnfFormula& f) { return f.literal_count(); })
        .def("__str__", [](const CnfFormula& f) { return encode_word(f); });

    m.def("parse", &parse_any, py::arg("text"), py::arg("format") = "auto",
          "Parse word or DIMACS text into a formula");
    m.def("encode_word", &encode_word, py::arg("formula"));
    m.def("emit_dimacs", &emit_dimacs, py::arg("formula"));

    m.def(
        "var_mask",
        [](uint32_t k, uint32_t n) { return var_mask_direct(k, n).to_string(); }, py::arg("k"),
        py::arg("n"), "Variable truth mask as an MSB-first 0/1 string");
    m.def(
        "cnf_mask",
        [](const CnfFormula& f, const std::string& route) {
            if (route == "direct") return cnf_mask_direct(f).to_string();
            if (route == "demorgan") return cnf_mask_demorgan(f).to_string();
            throw std::invalid_argument("route must be direct or demorgan");
        },
        py::arg("formula"), py::arg("route") = "direct");
    m.def(
        "mask_models",
        [](const std::string& mask) { return models_of_mask(TruthMask::from_string(mask)); },
        py::arg("mask"), "Satisfying assignment numbers of a mask string");

    m.def(
        "brute_force",
        [](const CnfFormula& f) {
            OracleResult r = brute_force(f);
            return py::make_tuple(r.sat, r.models);
        },
        py::arg("formula"), "Ground-truth verdict and models by trying every assignment");

    m.def("run_machine", &run_machine, py::arg("formula"), py::arg("engine") = "ldo",
          py::arg("analog_photocell") = false, py::arg("trace") = false,
          "Run the fixed (ldo) or self-assembling (saldo) disk machine");
}
