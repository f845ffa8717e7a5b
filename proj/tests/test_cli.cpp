#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "zsindex/cli.hpp"

using namespace zsindex;
namespace fs = std::filesystem;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};
Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "zsindex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("index command") {
  const auto r = run({"index", "--n", "11", "--seq", "1,4,8,9"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ind"] == 1);
  CHECK(j["witness_t"] == 3);
}

TEST_CASE("index from a file") {
  const auto p = fs::temp_directory_path() / "zsindex_cli_seqs.txt";
  {
    std::ofstream f(p);
    f << "1,4,8,9\n# comment\n2,5\n";
  }
  const auto r = run({"index", "--n", "11", "--file", p.string(), "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,seq,ind,witness_t\n", 0) == 0);
  CHECK(r.out.find("11,\"2 5\",5/11,7") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("usage errors exit 1 with help on stderr") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  r = run({"index", "--n", "11", "--seq", "1,x"});
  CHECK(r.code == 1);
  CHECK(r.err.find("Usage") != std::string::npos);
  r = run({"index", "--n", "1", "--seq", "1"});
  CHECK(r.code == 1);
  r = run({"index", "--n", "11", "--seq", "0,11"});
  CHECK(r.code == 1);
  r = run({});
  CHECK(r.code == 1);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("search exit codes") {
  CHECK(run({"search", "--k", "4", "--min-index", "2", "--max", "50"}).code == 2);
  CHECK(run({"search", "--k", "4", "--min-index", "2", "--max", "50", "--coprime-to-6"}).code == 0);
}

TEST_CASE("classify, normalize, lemma, enumerate") {
  auto r = run({"normalize", "--n", "11", "--seq", "1,2,3,5"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["a"] == 2);
  CHECK(j["unit"] == 4);

  r = run({"classify", "--n", "385", "--seq", "1,34,76,274"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["reduced"] == true);

  r = run({"lemma", "--n", "11", "--a", "2", "--b", "3", "--c", "4"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["lemmas"]["L33_1"]["fired"] == true);
  CHECK(j["lemmas"]["L35"]["applicable"] == false);

  r = run({"enumerate", "--n", "25"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"].get<int>() > 0);
}

TEST_CASE("verify with cache resumes to the same report") {
  const auto cache = fs::temp_directory_path() / "zsindex_cli_cache.jsonl";
  const auto out1 = fs::temp_directory_path() / "zsindex_cli_out1.json";
  const auto out2 = fs::temp_directory_path() / "zsindex_cli_out2.json";
  fs::remove(cache);

  auto r = run({"verify", "--min", "5", "--max", "60", "--coprime-to-6", "--output", out1.string()});
  CHECK(r.code == 0);

  // Partial run, then a torn line, then the full run.
  r = run({"verify", "--min", "5", "--max", "30", "--coprime-to-6", "--cache", cache.string()});
  CHECK(r.code == 0);
  {
    std::ofstream f(cache, std::ios::app);
    f << "{\"n\": 31";
  }
  r = run({"verify", "--min", "5", "--max", "60", "--coprime-to-6", "--cache", cache.string(), "--jobs", "2",
           "--output", out2.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);

  auto read = [](const fs::path& p) {
    std::ifstream f(p);
    return nlohmann::json::parse(f);
  };
  CHECK(read(out1) == read(out2));

  std::ifstream f(cache);
  std::set<i64> ns;
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) {
    ns.insert(nlohmann::json::parse(line)["n"].get<i64>());
    ++lines;
  }
  CHECK(lines == static_cast<int>(ns.size()));
  CHECK(ns.size() == 19);  // n in [5, 60] with gcd(n, 6) = 1

  r = run({"verify", "--min", "5", "--max", "60", "--cache", cache.string(), "--strict-cache"});
  CHECK(r.code == 1);

  fs::remove(cache);
  fs::remove(out1);
  fs::remove(out2);
}

TEST_CASE("verify csv columns") {
  const auto r = run({"verify", "--min", "10", "--max", "12", "--format", "csv"});
  CHECK(r.code == 2);  // n = 12 has quads of index 2
  CHECK(r.out.rfind(std::string(cli::kVerifyCsvHeader) + "\n", 0) == 0);
  CHECK(r.out.find("\n12,counterexample,") != std::string::npos);
}
