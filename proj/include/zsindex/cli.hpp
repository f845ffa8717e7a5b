#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zsindex/cache.hpp"
#include "zsindex/verifier.hpp"

namespace zsindex::cli {

enum class OutputFormat { Json, Csv, Text };

/// Exit codes are part of the CLI contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFinding = 2;  // counterexample or anomaly

struct RunConfig {
  std::string command;
  std::optional<i64> n;
  i64 n_min = 5;
  i64 n_max = 0;
  std::size_t k = 4;
  std::optional<Pattern> pattern;
  bool reduced = false;
  bool coprime_element = false;
  bool coprime_to_6 = false;
  bool not_coprime_to_6 = false;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache;
  bool strict_cache = false;
  std::optional<std::filesystem::path> output;
  OutputFormat format = OutputFormat::Json;
};

/// The n values a range command covers, after the gcd(n, 6) filters.
std::vector<i64> target_values(const RunConfig& cfg);

/// Text hashed into the cache digest: everything that changes results,
/// nothing that only changes scheduling (jobs, paths, format).
std::string canonical_config(const RunConfig& cfg);

/// n values of the run still missing from the cache at `path`.
std::vector<i64> resume(const std::filesystem::path& path, const RunConfig& cfg, std::ostream& warn);

nlohmann::json to_json(const IndexResult& r, std::span<const i64> seq);
nlohmann::json to_json(const Counterexample& ce);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const Theorem21Report& r);
nlohmann::json to_json(const LemmaSweepReport& r);
nlohmann::json to_json(const Remark32Report& r);
nlohmann::json to_json(const NormalizedQuad& q);

/// Cache record for one verified n; `detail` is the report minus timing.
CacheRecord make_record(const VerifyReport& r, const std::string& digest);

/// Fixed column order for verify CSV output.
inline constexpr const char* kVerifyCsvHeader =
    "n,status,class_count,max_index,reduced_count,coprime_class_count,counterexample_count";

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Reports go to `out` or --output; diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zsindex::cli
