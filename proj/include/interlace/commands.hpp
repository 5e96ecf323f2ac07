#pragma once

#include "interlace/error.hpp"
#include "interlace/rational.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace interlace {

struct CommandFlags {
  Rational width = default_width();
  std::uint64_t guard = 1'000'000;
  unsigned threads = 0;  // 0: all hardware threads
  bool audit = false;
  std::optional<Rational> eps;
  std::optional<std::size_t> r;
  std::optional<Rational> delta;
  std::string mode = "assignment";
};

struct CommandResult {
  nlohmann::ordered_json report;
  int exit_code = 0;
};

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitParse = 4;
inline constexpr int kExitInvariant = 5;

int exit_code_for(ErrorCode code);

/// Runs one of mixedchar, verify-identity, certify, assign, partition,
/// bruteforce on the instance text and returns the report. Never throws for
/// library errors; they become an ERROR or HYPOTHESIS_VIOLATED report.
CommandResult run_command(std::string_view command, std::string_view input_text, const CommandFlags& flags);

}  // namespace interlace
