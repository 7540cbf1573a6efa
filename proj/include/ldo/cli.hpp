#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldo/truth_mask.hpp"
#include "ldo/word_codec.hpp"

namespace ldo::cli {

enum class Engine { Ldo, Saldo, Mask, Oracle };
enum class OutputFormat { Text, KeyValue, Json };

/// Everything a command needs to run, as parsed from flags.
struct RunConfig {
    std::string input_path = "-";  // "-" = stdin
    InputFormat format = InputFormat::Auto;
    Engine engine = Engine::Ldo;
    std::optional<uint32_t> n_override;
    uint32_t n_max = kMaskVarCap;
    bool analog_photocell = false;
    bool return_disks = true;
    bool trace = false;
    bool expand_commands = false;
    OutputFormat output = OutputFormat::Text;
    std::optional<uint64_t> model_limit;
    double precision_threshold = 1e-6;
};

/// Exit codes: 10 satisfiable, 20 unsatisfiable (solve only), 0 success for
/// the other commands, 1 for any error.
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;

/// Run the command line given argv-style arguments (excluding the program
/// name) against explicit streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Convenience for main().
int run_main(int argc, char** argv);

}  // namespace ldo::cli
