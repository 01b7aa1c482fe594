#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rulerfold::cli {

/// Process exit codes. Each failure class gets its own code so scripts can
/// tell a malformed file from a violated precondition.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,         // bad command line
    kParseError = 2,    // malformed JSON, rational literal or sign string
    kPrecondition = 3,  // input parsed but violates an operation's precondition
    kSizeLimit = 4,     // instance too large for the requested exact method
    kCheckFailed = 5,   // certificate or verification did not hold
    kIoError = 6,       // file could not be read or written
};

enum class Subcommand { Solve, Greedy, Extremal, Certify, Density, Search, Render };

struct RunConfig {
    Subcommand subcommand = Subcommand::Solve;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    std::uint64_t seed = 1;

    // solve
    bool brute = false;
    std::size_t brute_force_limit = 24;
    std::uint64_t node_limit = 0;  // 0 = unlimited

    // extremal
    int m = 1;
    bool verify = false;

    // certify
    std::optional<std::string> epsilon_override;
    bool reduce = false;

    // density
    std::optional<std::size_t> index;

    // search
    std::size_t n = 1;
    std::optional<std::size_t> n_through;
    std::uint64_t budget = 10000;
    bool csv = false;

    // render
    std::string signs;
    bool schematic = false;
};

/// Parses argv-style arguments (args[0] is the program name) and runs the
/// selected subcommand, writing results to `out` (or --out) and
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rulerfold::cli
