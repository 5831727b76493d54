#pragma once

// Batch front end: one verb per invocation, JSON (canonical) or CSV output,
// exit codes 0 ok, 1 falsification, 2 bad arguments, 3 cap exceeded.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trisect {

enum ExitCode : int { kExitOk = 0, kExitFalsified = 1, kExitBadArgs = 2, kExitCap = 3 };

struct RunConfig {
  std::string verb;  // decide density lehmer boxcount nsect algdeg witness verify
  std::string field = "q";  // "q" or "quad"
  std::int64_t d = 0;
  std::string a;
  std::vector<std::int64_t> R;
  std::string sides;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::string c;
  std::string den;
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  std::uint64_t cap = 0;         // 0: the default enumeration cap
  std::uint64_t degree_cap = 0;  // 0: the default degree cap
  std::string out;
  std::string format = "json";
  unsigned shards = 1;
  std::uint64_t seed = 1;
  bool full = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // the artifact text
  std::string error;   // diagnostic for stderr
};

/// Runs the verb without touching the filesystem.
RunResult execute(const RunConfig& config);
/// execute(), then writes the artifact to config.out (atomically) or stdout.
int run(const RunConfig& config);
/// Parses argv into a RunConfig and runs it.
int cli_main(int argc, char** argv);

}  // namespace trisect
