#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixmult::cli {

enum class Format { Json, Markdown, Csv };

inline constexpr std::int64_t kDefaultWindow = 200;
inline constexpr double kDefaultTolerance = 0.03;

struct RunRequest {
  std::string command;
  std::string input_path;
  std::int64_t depth = 50;
  std::int64_t window = kDefaultWindow;
  Format format = Format::Json;
  std::optional<std::int64_t> n;                                // oracle-colength: single count
  std::optional<std::pair<std::int64_t, std::int64_t>> target;  // oracle-tau
  std::int64_t level = 1;                                       // oracle-truncate
  double tolerance = kDefaultTolerance;                         // bridge-check
};

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

const std::vector<std::string>& commands();

/// Executes one request. The report goes to `out`; diagnostics are single
/// lines on `err`.
int run(const RunRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv into a RunRequest and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixmult::cli
