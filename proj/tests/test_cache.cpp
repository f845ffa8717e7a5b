#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "zsindex/cache.hpp"
#include "zsindex/errors.hpp"

using namespace zsindex;
namespace fs = std::filesystem;

namespace {
fs::path temp_file(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("zsindex_test_" + name);
  fs::remove(p);
  return p;
}
CacheRecord rec(i64 n, const std::string& digest) {
  CacheRecord r;
  r.n = n;
  r.status = "verified";
  r.class_count = 3;
  r.max_index = 1;
  r.tool_version = std::string(kToolVersion);
  r.config_digest = digest;
  return r;
}
}  // namespace

TEST_CASE("empty cache leaves everything") {
  std::ostringstream warn;
  const auto load = load_cache(temp_file("absent"), warn);
  CHECK(load.records.empty());
  const std::vector<i64> wanted{5, 7, 11};
  CHECK(remaining(load.records, wanted, "d", false) == wanted);
}

TEST_CASE("verified record is skipped") {
  const auto p = temp_file("skip");
  append_record(p, rec(385, "d"));
  std::ostringstream warn;
  const auto load = load_cache(p, warn);
  const std::vector<i64> wanted{383, 385, 389};
  CHECK(remaining(load.records, wanted, "d", false) == std::vector<i64>{383, 389});
  fs::remove(p);
}

TEST_CASE("half-written tail is dropped") {
  const auto p = temp_file("tail");
  append_record(p, rec(5, "d"));
  append_record(p, rec(7, "d"));
  const auto good = fs::file_size(p);
  {
    std::ofstream out(p, std::ios::app);
    out << R"({"n": 11, "status": "veri)";
  }
  std::ostringstream warn;
  const auto load = load_cache(p, warn);
  CHECK(load.records.size() == 2);
  CHECK(load.truncated_tail);
  CHECK(warn.str().find("unterminated") != std::string::npos);
  CHECK(fs::file_size(p) == good);
  // Appending after recovery yields a clean file.
  append_record(p, rec(11, "d"));
  std::ostringstream warn2;
  CHECK(load_cache(p, warn2).records.size() == 3);
  CHECK(warn2.str().empty());
  fs::remove(p);
}

TEST_CASE("corrupt middle line is skipped") {
  const auto p = temp_file("middle");
  append_record(p, rec(5, "d"));
  {
    std::ofstream out(p, std::ios::app);
    out << "not json\n";
  }
  append_record(p, rec(7, "d"));
  std::ostringstream warn;
  const auto load = load_cache(p, warn);
  CHECK(load.records.size() == 2);
  CHECK(load.skipped_lines == 1);
  fs::remove(p);
}

TEST_CASE("config digest") {
  CHECK(config_digest("a") != config_digest("b"));
  CHECK(config_digest("a").size() == 16);
  CHECK(config_digest("") == "cbf29ce484222325");

  const std::vector<CacheRecord> records{rec(5, "other")};
  const std::vector<i64> wanted{5};
  CHECK(remaining(records, wanted, "d", false) == wanted);
  CHECK_THROWS_AS(remaining(records, wanted, "d", true), CacheConfigMismatch);
}

TEST_CASE("record round trip") {
  auto r = rec(13, "d");
  r.detail = {{"reduced_count", 4}};
  const auto back = record_from_json(to_json(r));
  CHECK(back.n == 13);
  CHECK(back.detail["reduced_count"] == 4);
}
