#ifndef CUTCX_TOOLS_CLI_HPP
#define CUTCX_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cutcx/linalg.hpp"

namespace cutcx::cli {

enum class Command { build, betti, shelling, conjecture, export_ };
enum class Format { text, json_lines };

struct RunConfig {
    Command command = Command::conjecture;
    /// Inclusive n-range; a single n has first == last.
    int n_first = 9;
    int n_last = 9;
    bool n_given = false;
    int k = 3;
    Field field = Field::prime(2);
    bool homology = false;
    int homology_max_n = 14;
    /// "prec", "reversed" or "file:<path>"; unset means the command's default.
    std::optional<std::string> order;
    Format format = Format::text;
    /// 0 = all hardware threads.
    unsigned jobs = 0;
    /// Edge-list input replacing W_n.
    std::optional<std::string> graph_path;
    /// Facet-file input replacing Δ_k(W_n).
    std::optional<std::string> complex_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag combination or malformed input; maps to kExitUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// "9" or "9..13".
void parse_n_range(const std::string& text, RunConfig& config);

/// Executes one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cutcx::cli

#endif  // CUTCX_TOOLS_CLI_HPP
