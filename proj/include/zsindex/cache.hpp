#pragma once

// Append-only JSONL run cache. One record per line; a line is only trusted
// once its terminating newline is on disk.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zsindex/zn.hpp"

namespace zsindex {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct CacheRecord {
  i64 n = 0;
  std::string status;  // verified | counterexample | error
  i64 class_count = 0;
  i64 max_index = 0;
  double elapsed_ms = 0;
  std::string tool_version;
  std::string config_digest;
  /// Report body for this n (everything except timing), so a resumed run
  /// can rebuild the same final report.
  nlohmann::json detail = nlohmann::json::object();
};

nlohmann::json to_json(const CacheRecord& r);
/// Throws nlohmann::json::exception on missing or mistyped fields.
CacheRecord record_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of the canonical config text, as 16 hex digits.
std::string config_digest(std::string_view canonical_config);

struct CacheLoad {
  std::vector<CacheRecord> records;
  std::size_t skipped_lines = 0;  // unparseable complete lines
  bool truncated_tail = false;    // a partial last line was cut off
};

/// Reads every record. A missing file is an empty cache. An unterminated or
/// unparseable final line is truncated from the file, with a warning on
/// `warn`.
CacheLoad load_cache(const std::filesystem::path& path, std::ostream& warn);

/// Appends one line and flushes it.
void append_record(const std::filesystem::path& path, const CacheRecord& record);

/// The n values in `wanted` without a record under `digest`, ascending.
/// Records under another digest are ignored, or raise CacheConfigMismatch
/// when strict.
std::vector<i64> remaining(std::span<const CacheRecord> records, std::span<const i64> wanted,
                           const std::string& digest, bool strict);

}  // namespace zsindex
