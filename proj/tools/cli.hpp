#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace addcomb::cli {

enum class Format { Json, Csv, Jsonl };

struct RunConfig {
  std::string subcommand;
  std::string set_text;    // dim, decompose, chain-check, factorize, fiso
  std::string other_text;  // fiso
  std::optional<int> k;
  std::optional<long long> t;
  std::optional<long long> bound;
  unsigned threads = 0;
  std::string out_path;  // empty: stdout
  std::optional<Format> format;
  bool use_cache = true;
  std::string cache_dir;  // empty: $ADDCOMB_CACHE_DIR or .addcomb-cache
  bool force = false;
  bool strict_chains = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;

/// Parses argv into a config. On --help or a parse error, prints to `out` /
/// `err` and returns the exit code instead.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err);

/// Executes one subcommand. Data goes to config.out_path or `out`,
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace addcomb::cli
