#include "zsindex/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

namespace zsindex {

nlohmann::json to_json(const CacheRecord& r) {
  return nlohmann::json{{"n", r.n},
                        {"status", r.status},
                        {"class_count", r.class_count},
                        {"max_index", r.max_index},
                        {"elapsed_ms", r.elapsed_ms},
                        {"tool_version", r.tool_version},
                        {"config_digest", r.config_digest},
                        {"detail", r.detail}};
}

CacheRecord record_from_json(const nlohmann::json& j) {
  CacheRecord r;
  r.n = j.at("n").get<i64>();
  r.status = j.at("status").get<std::string>();
  r.class_count = j.at("class_count").get<i64>();
  r.max_index = j.at("max_index").get<i64>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.config_digest = j.at("config_digest").get<std::string>();
  if (j.contains("detail")) r.detail = j.at("detail");
  return r;
}

std::string config_digest(std::string_view canonical_config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_config) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CacheLoad load_cache(const std::filesystem::path& path, std::ostream& warn) {
  CacheLoad out;
  if (!std::filesystem::exists(path)) return out;

  std::string content;
  {
    std::ifstream in(path, std::ios::binary);
    content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  std::size_t pos = 0;
  std::size_t good_end = 0;  // byte offset just past the last trusted line
  while (pos < content.size()) {
    const std::size_t nl = content.find('\n', pos);
    const bool terminated = nl != std::string::npos;
    const std::string line = content.substr(pos, terminated ? nl - pos : std::string::npos);
    const std::size_t next = terminated ? nl + 1 : content.size();

    if (!terminated) {
      // Partial write from an interrupted run.
      warn << "warning: dropping unterminated last line of " << path.string() << "\n";
      out.truncated_tail = true;
      break;
    }
    if (!line.empty()) {
      try {
        out.records.push_back(record_from_json(nlohmann::json::parse(line)));
      } catch (const nlohmann::json::exception&) {
        if (next == content.size()) {
          warn << "warning: dropping corrupt last line of " << path.string() << "\n";
          out.truncated_tail = true;
          break;
        }
        warn << "warning: skipping corrupt line in " << path.string() << "\n";
        ++out.skipped_lines;
      }
    }
    good_end = next;
    pos = next;
  }
  if (out.truncated_tail) std::filesystem::resize_file(path, good_end);
  return out;
}

void append_record(const std::filesystem::path& path, const CacheRecord& record) {
  std::ofstream outf(path, std::ios::app | std::ios::binary);
  outf << to_json(record).dump() << '\n';
  outf.flush();
}

std::vector<i64> remaining(std::span<const CacheRecord> records, std::span<const i64> wanted,
                           const std::string& digest, bool strict) {
  std::set<i64> done;
  for (const auto& r : records) {
    if (r.config_digest == digest) {
      done.insert(r.n);
    } else if (strict) {
      throw CacheConfigMismatch("record for n = " + std::to_string(r.n) + " has digest " + r.config_digest +
                                ", expected " + digest);
    }
  }
  std::vector<i64> out;
  for (i64 n : wanted) {
    if (!done.count(n)) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace zsindex
