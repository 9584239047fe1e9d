#pragma once

// The tnnmorse command-line driver, kept in a library so tests can call it
// without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tnn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIO = 3;

inline constexpr std::string_view kSchema = "tnn-morse/1";

enum class Format { Text, Json, Dot };

struct RunConfig {
  std::string command;  // enumerate | label | match | verify | export
  std::string type;     // e.g. "A3"
  std::vector<int> parabolic;
  bool all_parabolics = false;
  std::optional<std::string> cell;      // x:u:w
  std::optional<std::string> interval;  // v:w, for label
  std::optional<std::string> order_word;
  bool reverse_order = false;
  bool boundary = false;
  Format format = Format::Text;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t cap_group = 40320;
  std::uint64_t cap_simplices = 5'000'000;
  int homology_max_dim = 4;
  std::string out_dir = ".";
  std::string inject_fault;  // test hook: "cycle" or "goodness"

  [[nodiscard]] std::string to_json() const;
  static RunConfig from_json(std::string_view text);
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses argv into a config. Returns the exit code on failure (usage or
/// --help), after writing a message to `err`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Runs a parsed config, writing the report to `out`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by execute.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tnn::cli
