#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace threegap {

// Flag problems, unknown verbs, malformed alpha text: exit code 2.
// Domain errors from the library: exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// Thrown by parse_command when --help is requested.
struct HelpRequested {
    std::string text;
};

struct Command {
    std::string verb;
    std::string alpha_text;
    std::vector<std::string> argv_echo;  // words after the program name

    std::optional<long long> n;
    std::optional<long long> n_max;
    std::optional<long long> n_lo;
    std::optional<long long> n_hi;
    std::vector<long long> checkpoints;

    std::uint64_t seed = 42;
    std::size_t count = 500;
    std::optional<unsigned> precision_bits;  // verb-specific default
    unsigned max_index = 25;
    int digits = 10;

    std::string format = "csv";  // csv | json
    std::string out_path;        // empty: stdout
    bool no_manifest = false;
};

// Reproducibility header attached to every output unless suppressed.
struct RunManifest {
    std::string tool;
    std::string version;
    std::string command_line;
    std::optional<std::uint64_t> seed;
    std::string timestamp;
};

// argv without the program name.  Precedence for seed/digits and the other
// numeric knobs: explicit flag, then THREEGAP_SEED / THREEGAP_DIGITS, then
// the JSON file named by --config, then built-in defaults.
Command parse_command(const std::vector<std::string>& argv);

// Runs the verb, writing the report to `out` (or the file from --out).
// Returns the process exit code contribution (0 on success).
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

// parse + execute + error mapping; the main() body.
int run_cli(int argc, char** argv);

}  // namespace threegap
