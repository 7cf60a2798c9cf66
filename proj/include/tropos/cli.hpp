#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropos/sampling.hpp"

namespace tropos::cli {

enum class Command {
  Classify,
  Staircase,
  Echelon,
  Factor,
  Product,
  Spectrum,
  Plucker,
  StiefelInvert,
  NetworkWeight,
  FactorToNetwork,
  Verify,
};

const char* to_string(Command c);

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // a mathematical negative result
inline constexpr int kUsage = 2;     // bad flags or unparsable input
inline constexpr int kInternal = 3;  // a self-check failed

struct RunConfig {
  Command command = Command::Verify;
  std::vector<std::string> inputs;  // "-" reads standard input
  std::optional<std::string> input_text;  // inline JSON, used instead of inputs
  std::size_t cap = 9;              // enumeration cap, positive
  std::uint64_t seed = 0;
  std::optional<LiftKind> lift;
  std::string out;  // empty writes to the given stream
  bool strict = false;
};

// Executes one command and writes a JSON document to `out` (or to
// config.out). Never throws; failures map to the exit statuses above, with
// an {"error": ...} document.
int run(const RunConfig& config, std::ostream& out);

// Parses argv with CLI11 and calls run. Usage errors go to `err`.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tropos::cli
