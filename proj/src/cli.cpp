#include "zsindex/cli.hpp"

#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace zsindex::cli {
namespace {

using nlohmann::json;

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string join(std::span<const i64> xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::vector<i64> parse_sequence(const std::string& text) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    const std::string trimmed = item.substr(first, item.find_last_not_of(" \t\r") - first + 1);
    i64 v = 0;
    try {
      v = std::stoll(trimmed, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + trimmed + "'");
    }
    if (used != trimmed.size()) throw UsageError("not an integer: '" + trimmed + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty sequence");
  return out;
}

std::vector<std::vector<i64>> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::vector<i64>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    out.push_back(parse_sequence(line));
  }
  return out;
}

json lemma_json(const LemmaOutcome& o) {
  json j{{"fired", o.fired}, {"detail", o.detail}};
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, KmWitness>) {
          j["witness"] = {{"k", w.k}, {"m", w.m}};
        } else if constexpr (std::is_same_v<W, MultiplierWitness>) {
          j["witness"] = {{"M", w.M}};
        } else if constexpr (std::is_same_v<W, IntervalWitness>) {
          j["witness"] = {{"t", w.t}, {"m", w.m}};
        } else {
          j["witness"] = nullptr;
        }
      },
      o.witness);
  return j;
}

json census_json(const std::map<Pattern, i64>& census) {
  json j = json::object();
  for (const auto& [p, count] : census) j[std::string(to_string(p))] = count;
  return j;
}

json counterexamples_json(const std::vector<Counterexample>& ces) {
  json arr = json::array();
  for (const auto& ce : ces) arr.push_back(to_json(ce));
  return arr;
}

// Writes the report to --output or the default stream.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& fallback) {
    if (cfg.output) {
      file_.open(*cfg.output, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot write " + cfg.output->string());
    }
    stream_ = cfg.output ? static_cast<std::ostream*>(&file_) : &fallback;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void require_json_or_text(const RunConfig& cfg) {
  if (cfg.format == OutputFormat::Csv) throw UsageError(cfg.command + " does not support csv output");
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Subcommands

int cmd_index(const RunConfig& cfg, const std::string& seq_text, const std::string& file, std::ostream& os) {
  if (!cfg.n) throw UsageError("index needs --n");
  const Modulus m(*cfg.n);
  std::vector<std::vector<i64>> seqs;
  if (!file.empty()) {
    seqs = read_sequence_file(file);
  } else if (!seq_text.empty()) {
    seqs.push_back(parse_sequence(seq_text));
  } else {
    throw UsageError("index needs --seq or --file");
  }

  json results = json::array();
  for (const auto& s : seqs) {
    const GroupSequence seq(m, s);
    results.push_back(to_json(index_of(seq), seq.elems()));
  }
  switch (cfg.format) {
    case OutputFormat::Json:
      emit_json(os, file.empty() ? results[0] : results);
      break;
    case OutputFormat::Csv:
      os << "n,seq,ind,witness_t\n";
      for (const auto& r : results) {
        os << r["n"] << ",\"" << join(r["seq"].get<std::vector<i64>>(), ' ') << "\","
           << r["ind_rational"].get<std::string>() << "," << r["witness_t"] << "\n";
      }
      break;
    case OutputFormat::Text:
      for (const auto& r : results) {
        os << "n=" << r["n"] << " seq=" << join(r["seq"].get<std::vector<i64>>(), ',')
           << " ind=" << r["ind_rational"].get<std::string>() << " witness_t=" << r["witness_t"] << "\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& seq_text, std::ostream& os) {
  require_json_or_text(cfg);
  if (!cfg.n || seq_text.empty()) throw UsageError("classify needs --n and --seq");
  const GroupSequence seq(Modulus(*cfg.n), parse_sequence(seq_text));
  if (!is_minimal_zero_sum(seq)) throw NotMinimal("classify needs a minimal zero-sum sequence");
  const auto prof = gcd_profile(seq);
  const auto cls = classify_pattern(seq);
  json j{{"n", seq.n()},
         {"seq", std::vector<i64>(seq.elems().begin(), seq.elems().end())},
         {"gcds", prof.gcds},
         {"active_primes", prof.active_primes},
         {"global_gcd", prof.global_gcd},
         {"reduced", is_reduced(seq)},
         {"pattern", std::string(to_string(cls.pattern))},
         {"roles", cls.pattern == Pattern::Other ? json(nullptr) : json(cls.roles)}};
  if (cfg.format == OutputFormat::Text) {
    os << "pattern=" << j["pattern"].get<std::string>() << " reduced=" << j["reduced"] << " gcds=" << j["gcds"]
       << "\n";
  } else {
    emit_json(os, j);
  }
  return kExitOk;
}

int cmd_normalize(const RunConfig& cfg, const std::string& seq_text, std::ostream& os) {
  require_json_or_text(cfg);
  if (!cfg.n || seq_text.empty()) throw UsageError("normalize needs --n and --seq");
  const GroupSequence seq(Modulus(*cfg.n), parse_sequence(seq_text));
  if (seq.size() != 4 || !is_minimal_zero_sum(seq)) {
    throw NotMinimal("normalize needs a minimal zero-sum quad");
  }
  const auto forms = normal_forms(seq);
  json j{{"n", seq.n()}, {"normalizable", !forms.empty()}};
  if (!forms.empty()) {
    j.update(to_json(forms.front()));
    json all = json::array();
    for (const auto& f : forms) all.push_back(to_json(f));
    j["forms"] = all;
  }
  if (cfg.format == OutputFormat::Text) {
    if (forms.empty()) {
      os << "not normalizable\n";
    } else {
      const auto& q = forms.front();
      os << "a=" << q.a << " b=" << q.b << " c=" << q.c << " unit=" << q.unit << " reflected=" << q.reflected << "\n";
    }
  } else {
    emit_json(os, j);
  }
  return kExitOk;
}

int cmd_lemma(const RunConfig& cfg, const std::string& seq_text, i64 a, i64 b, i64 c, std::ostream& os) {
  require_json_or_text(cfg);
  if (!cfg.n) throw UsageError("lemma needs --n");
  const Modulus m(*cfg.n);
  NormalizedQuad q;
  if (!seq_text.empty()) {
    const GroupSequence seq(m, parse_sequence(seq_text));
    if (seq.size() != 4 || !is_minimal_zero_sum(seq)) throw NotMinimal("lemma needs a minimal zero-sum quad");
    auto nq = normalize_quad(seq);
    if (!nq) throw InvariantViolated("sequence has no normal form");
    q = *nq;
  } else {
    if (a <= 0 || b <= 0 || c <= 0) throw UsageError("lemma needs --seq or all of --a --b --c");
    q = {m.n(), a, b, c, 1, false};
  }
  const GroupSequence seq = denormalize(q, m);

  json lemmas{{"L33_1", lemma_json(lemma33_cond1(q, m))},
              {"L33_2", lemma_json(lemma33_cond2(q, m))},
              {"L34", lemma_json(lemma34_cond(q, m))}};
  const StructureParams params = structure_params(q, m);
  if (params.s >= 2) {
    lemmas["L35"] = lemma_json(lemma35_cond(q, m));
  } else {
    lemmas["L35"] = {{"fired", false}, {"applicable", false}, {"detail", "s < 2"}};
  }
  json omega = json::array();
  for (const auto& iv : omega_build(q)) {
    omega.push_back({{"lo", rational_text(iv.lo())}, {"hi", rational_text(iv.hi())}});
  }
  const auto idx = index_of(seq);
  json j = to_json(q);
  j["s"] = params.s;
  j["k1"] = params.k1 ? json(*params.k1) : json(nullptr);
  j["assumption_B"] = params.assumption_B;
  j["lemmas"] = lemmas;
  j["omega"] = omega;
  j["oracle_index"] = rational_text(idx.value());

  if (cfg.format == OutputFormat::Text) {
    for (const auto& [name, o] : lemmas.items()) {
      os << name << ": " << (o["fired"].get<bool>() ? "fired" : "no") << " (" << o["detail"].get<std::string>()
         << ")\n";
    }
    os << "s=" << params.s << " assumption_B=" << params.assumption_B << " ind=" << rational_text(idx.value()) << "\n";
  } else {
    emit_json(os, j);
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& os) {
  if (!cfg.n) throw UsageError("enumerate needs --n");
  const Modulus m(*cfg.n);
  SequenceList classes(cfg.k);
  if (cfg.k == 4) {
    classes = enumerate_minimal_quads(m, {cfg.coprime_element, cfg.reduced, cfg.pattern}, cfg.jobs);
  } else {
    if (cfg.coprime_element || cfg.reduced || cfg.pattern) {
      throw UsageError("filters are only available for k = 4");
    }
    classes = enumerate_minimal_classes(m, cfg.k, false, cfg.jobs);
  }
  switch (cfg.format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        arr.push_back(std::vector<i64>(classes[i].begin(), classes[i].end()));
      }
      emit_json(os, {{"n", m.n()}, {"k", cfg.k}, {"count", classes.size()}, {"classes", arr}});
      break;
    }
    case OutputFormat::Csv:
      os << "n,k,sequence\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        os << m.n() << "," << cfg.k << ",\"" << join(classes[i], ' ') << "\"\n";
      }
      break;
    case OutputFormat::Text:
      for (std::size_t i = 0; i < classes.size(); ++i) os << join(classes[i], ',') << "\n";
      os << "# " << classes.size() << " classes\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const auto wanted = target_values(cfg);
  if (wanted.empty()) throw UsageError("empty n range");
  const std::string digest = config_digest(canonical_config(cfg));

  std::vector<CacheRecord> records;
  std::vector<i64> todo = wanted;
  if (cfg.cache) {
    auto loaded = load_cache(*cfg.cache, err);
    todo = remaining(loaded.records, wanted, digest, cfg.strict_cache);
    records = std::move(loaded.records);
  }

  // Largest n first.
  std::sort(todo.rbegin(), todo.rend());
  std::mutex mu;
  parallel_for(todo.size(), cfg.jobs, [&](std::size_t i) {
    CacheRecord rec;
    try {
      rec = make_record(verify_conjecture(todo[i], 1), digest);
    } catch (const std::exception& e) {
      rec.n = todo[i];
      rec.status = "error";
      rec.tool_version = std::string(kToolVersion);
      rec.config_digest = digest;
      rec.detail = {{"error", e.what()}};
    }
    std::lock_guard lock(mu);
    if (cfg.cache) append_record(*cfg.cache, rec);
    records.push_back(std::move(rec));
  });

  // Final report: one record per wanted n under this digest, ascending.
  std::map<i64, const CacheRecord*> by_n;
  for (const auto& r : records) {
    if (r.config_digest == digest) by_n[r.n] = &r;
  }
  bool all_ok = true;
  i64 max_index = 0;
  json results = json::array();
  std::vector<const CacheRecord*> ordered;
  for (i64 n : wanted) {
    const CacheRecord* r = by_n.at(n);
    ordered.push_back(r);
    all_ok = all_ok && r->status == "verified";
    max_index = std::max(max_index, r->max_index);
    json entry = to_json(*r);
    entry.erase("elapsed_ms");
    results.push_back(entry);
  }

  switch (cfg.format) {
    case OutputFormat::Json:
      emit_json(os, {{"command", "verify"},
                     {"tool_version", kToolVersion},
                     {"config_digest", digest},
                     {"results", results},
                     {"summary", {{"n_count", wanted.size()}, {"all_verified", all_ok}, {"max_index", max_index}}}});
      break;
    case OutputFormat::Csv:
      os << kVerifyCsvHeader << "\n";
      for (const auto* r : ordered) {
        const auto& d = r->detail;
        os << r->n << "," << r->status << "," << r->class_count << "," << r->max_index << ","
           << d.value("reduced_count", i64{0}) << "," << d.value("coprime_class_count", i64{0}) << ","
           << d.value("counterexample_count", i64{0}) << "\n";
      }
      break;
    case OutputFormat::Text:
      for (const auto* r : ordered) {
        os << "n=" << r->n << " " << r->status << " classes=" << r->class_count << " max_index=" << r->max_index
           << "\n";
      }
      os << (all_ok ? "all verified" : "counterexamples found") << " (" << wanted.size() << " values)\n";
      break;
  }
  return all_ok ? kExitOk : kExitFinding;
}

int cmd_search(const RunConfig& cfg, i64 min_index, bool randomized, std::size_t samples, std::uint64_t seed,
               std::size_t limit, std::ostream& os) {
  SearchOptions opt;
  opt.n_min = cfg.n ? *cfg.n : cfg.n_min;
  opt.n_max = cfg.n ? *cfg.n : cfg.n_max;
  if (opt.n_max < opt.n_min) throw UsageError("empty n range");
  opt.k = cfg.k;
  opt.min_index = min_index;
  opt.coprime_to_6 = cfg.coprime_to_6 ? 1 : (cfg.not_coprime_to_6 ? -1 : 0);
  opt.max_results = limit;
  opt.randomized = randomized;
  opt.samples_per_n = samples;
  opt.seed = seed;
  opt.jobs = cfg.jobs;
  const auto hits = search_high_index(opt);

  switch (cfg.format) {
    case OutputFormat::Json:
      emit_json(os, {{"command", "search"},
                     {"k", cfg.k},
                     {"min_index", min_index},
                     {"n_min", opt.n_min},
                     {"n_max", opt.n_max},
                     {"mode", randomized ? "random" : "exhaustive"},
                     {"count", hits.size()},
                     {"witnesses", counterexamples_json(hits)}});
      break;
    case OutputFormat::Csv:
      os << "n,sequence,index,witness_t\n";
      for (const auto& h : hits) {
        os << h.n << ",\"" << join(h.sequence, ' ') << "\"," << rational_text(h.index()) << "," << h.witness_t << "\n";
      }
      break;
    case OutputFormat::Text:
      for (const auto& h : hits) {
        os << "n=" << h.n << " seq=" << join(h.sequence, ',') << " ind=" << rational_text(h.index()) << "\n";
      }
      os << "# " << hits.size() << " witnesses\n";
      break;
  }
  return hits.empty() ? kExitOk : kExitFinding;
}

int cmd_validate(const RunConfig& cfg, const std::string& claim, const std::vector<i64>& ns, std::ostream& os) {
  require_json_or_text(cfg);
  std::vector<i64> values = ns;
  if (cfg.n) values.push_back(*cfg.n);
  if (values.empty() && cfg.n_max >= cfg.n_min && cfg.n_max > 0) {
    for (i64 n = cfg.n_min; n <= cfg.n_max; ++n) values.push_back(n);
  }
  json j{{"command", "validate"}, {"claim", claim}};
  bool anomaly = false;

  if (claim == "theorem21") {
    if (values.empty()) throw UsageError("validate theorem21 needs --n or --ns");
    json reports = json::array();
    for (i64 n : values) {
      const auto r = validate_theorem21(n, cfg.jobs);
      anomaly = anomaly || !r.anomalies.empty();
      reports.push_back(to_json(r));
      if (cfg.format == OutputFormat::Text) {
        os << "n=" << n << " reduced=" << r.reduced << " anomalies=" << r.anomalies.size()
           << (r.vacuous ? " (vacuous)" : "") << "\n";
      }
    }
    j["reports"] = reports;
  } else if (claim == "lemmas") {
    if (values.empty()) throw UsageError("validate lemmas needs --n, --ns or --min/--max");
    if (cfg.coprime_to_6) std::erase_if(values, [](i64 n) { return std::gcd(n, i64{6}) != 1; });
    std::vector<LemmaSweepReport> reps(values.size());
    parallel_for(values.size(), cfg.jobs, [&](std::size_t i) { reps[i] = validate_lemmas(values[i]); });
    json reports = json::array();
    for (const auto& r : reps) {
      for (const auto& [id, t] : r.tallies) {
        if (id != LemmaId::L34 && t.exceptions > 0) anomaly = true;
      }
      reports.push_back(to_json(r));
      if (cfg.format == OutputFormat::Text) {
        os << "n=" << r.n << " quads=" << r.quads << " exceptions=" << r.exceptions.size() << "\n";
      }
    }
    j["reports"] = reports;
  } else if (claim == "remark32") {
    if (cfg.n_max < cfg.n_min || cfg.n_max == 0) throw UsageError("validate remark32 needs --min/--max");
    const auto r = validate_remark32(cfg.n_min, cfg.n_max, cfg.jobs);
    anomaly = r.violations > 0;
    j["report"] = to_json(r);
    if (cfg.format == OutputFormat::Text) {
      os << "qualifying=" << r.qualifying << " violations=" << r.violations << " vacuous_n=" << r.vacuous_n << "\n";
    }
  } else {
    throw UsageError("unknown claim '" + claim + "' (theorem21 | lemmas | remark32)");
  }
  j["anomaly"] = anomaly;
  if (cfg.format == OutputFormat::Json) emit_json(os, j);
  return anomaly ? kExitFinding : kExitOk;
}

}  // namespace

std::vector<i64> target_values(const RunConfig& cfg) {
  std::vector<i64> out;
  const i64 lo = cfg.n ? *cfg.n : cfg.n_min;
  const i64 hi = cfg.n ? *cfg.n : cfg.n_max;
  for (i64 n = std::max<i64>(lo, 2); n <= hi; ++n) {
    const bool coprime = std::gcd(n, i64{6}) == 1;
    if (cfg.coprime_to_6 && !coprime) continue;
    if (cfg.not_coprime_to_6 && coprime) continue;
    out.push_back(n);
  }
  return out;
}

std::string canonical_config(const RunConfig& cfg) {
  std::ostringstream s;
  s << "command=" << cfg.command << ";k=" << cfg.k << ";coprime_to_6=" << cfg.coprime_to_6
    << ";not_coprime_to_6=" << cfg.not_coprime_to_6 << ";version=" << kToolVersion;
  return s.str();
}

std::vector<i64> resume(const std::filesystem::path& path, const RunConfig& cfg, std::ostream& warn) {
  const auto loaded = load_cache(path, warn);
  const auto wanted = target_values(cfg);
  return remaining(loaded.records, wanted, config_digest(canonical_config(cfg)), cfg.strict_cache);
}

json to_json(const IndexResult& r, std::span<const i64> seq) {
  return {{"n", r.modulus_n},
          {"seq", std::vector<i64>(seq.begin(), seq.end())},
          {"ind", r.is_integer() ? json(r.value_numerator / r.modulus_n) : json(nullptr)},
          {"ind_rational", rational_text(r.value())},
          {"is_integer", r.is_integer()},
          {"witness_t", r.witness_t},
          {"value_numerator", r.value_numerator}};
}

json to_json(const Counterexample& ce) {
  return {{"n", ce.n},
          {"sequence", ce.sequence},
          {"index", rational_text(ce.index())},
          {"index_numerator", ce.index_numerator},
          {"witness_t", ce.witness_t},
          {"context", ce.context}};
}

json to_json(const NormalizedQuad& q) {
  return {{"n", q.n}, {"a", q.a}, {"b", q.b}, {"c", q.c}, {"unit", q.unit}, {"reflected", q.reflected}};
}

json to_json(const VerifyReport& r) {
  json ces = json::array();
  for (std::size_t i = 0; i < r.counterexamples.size() && i < 20; ++i) ces.push_back(to_json(r.counterexamples[i]));
  return {{"n", r.n},
          {"in_conjecture_scope", r.in_conjecture_scope},
          {"class_count", r.class_count},
          {"max_index", r.max_index},
          {"counterexample_count", r.counterexample_count},
          {"counterexamples", ces},
          {"pattern_census", census_json(r.pattern_census)},
          {"census_vacuous", r.census_vacuous},
          {"reduced_count", r.reduced_count},
          {"coprime_class_count", r.coprime_class_count},
          {"delegated_count", r.delegated_count},
          {"delegation_mismatches", r.delegation_mismatches}};
}

json to_json(const Theorem21Report& r) {
  return {{"n", r.n},
          {"prime_count", r.prime_count},
          {"classes_with_unit", r.classes_with_unit},
          {"reduced", r.reduced},
          {"normalizable_reduced", r.normalizable_reduced},
          {"unnormalizable_index_one", r.unnormalizable_index_one},
          {"census", census_json(r.census)},
          {"anomalies", counterexamples_json(r.anomalies)},
          {"vacuous", r.vacuous}};
}

json to_json(const LemmaSweepReport& r) {
  json tallies = json::object();
  for (const auto& [id, t] : r.tallies) {
    tallies[std::string(to_string(id))] = {{"fired", t.fired}, {"exceptions", t.exceptions}};
  }
  return {{"n", r.n},
          {"quads", r.quads},
          {"index_one", r.index_one},
          {"tallies", tallies},
          {"exceptions", counterexamples_json(r.exceptions)},
          {"converse_gaps", r.converse_gaps},
          {"k1_checked", r.k1_checked},
          {"k1_range_violations", r.k1_range_violations},
          {"probe_qualifying", r.probe_qualifying},
          {"s_bound_violations", r.s_bound_violations},
          {"k1_bound_checked", r.k1_bound_checked},
          {"k1_bound_violations", r.k1_bound_violations}};
}

json to_json(const Remark32Report& r) {
  json per_n = json::array();
  for (const auto& e : r.per_n) {
    per_n.push_back({{"n", e.n}, {"qualifying", e.qualifying}, {"violations", e.violations}});
  }
  return {{"per_n", per_n},
          {"qualifying", r.qualifying},
          {"violations", r.violations},
          {"vacuous_n", r.vacuous_n},
          {"anomalies", counterexamples_json(r.anomalies)}};
}

CacheRecord make_record(const VerifyReport& r, const std::string& digest) {
  CacheRecord rec;
  rec.n = r.n;
  rec.status = r.counterexamples.empty() && r.delegation_mismatches == 0 ? "verified" : "counterexample";
  rec.class_count = r.class_count;
  rec.max_index = r.max_index;
  rec.elapsed_ms = r.elapsed_ms;
  rec.tool_version = std::string(kToolVersion);
  rec.config_digest = digest;
  rec.detail = to_json(r);
  return rec;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index of sequences over finite cyclic groups"};
  app.name("zsindex");
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.jobs = default_jobs();
  std::string seq_text, file, format_text = "json", pattern_text, claim, cache_path, output_path;
  std::vector<i64> ns;
  i64 a = 0, b = 0, c = 0, min_index = 2;
  bool randomized = false;
  std::size_t samples = 10000, limit = 0;
  std::uint64_t seed = 1;
  i64 n_value = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output_path, "Write the report here instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default: $ZSINDEX_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n_value, "Group order")->check(CLI::Range(i64{2}, kMaxModulus)); };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--min", cfg.n_min, "Smallest n");
    sub->add_option("--max", cfg.n_max, "Largest n");
  };

  auto* index = app.add_subcommand("index", "Index of a sequence");
  add_n(index);
  index->add_option("--seq", seq_text, "Comma-separated residues");
  index->add_option("--file", file, "One comma-separated sequence per line");
  add_common(index);

  auto* classify = app.add_subcommand("classify", "gcd profile and A1-A4 pattern of a quad");
  add_n(classify);
  classify->add_option("--seq", seq_text, "Comma-separated residues");
  add_common(classify);

  auto* normalize = app.add_subcommand("normalize", "(a, b, c) normal form of a quad");
  add_n(normalize);
  normalize->add_option("--seq", seq_text, "Comma-separated residues");
  add_common(normalize);

  auto* lemma = app.add_subcommand("lemma", "Index-one sufficient conditions on a normalized quad");
  add_n(lemma);
  lemma->add_option("--seq", seq_text, "Quad to normalize first");
  lemma->add_option("--a", a);
  lemma->add_option("--b", b);
  lemma->add_option("--c", c);
  add_common(lemma);

  auto* enumerate = app.add_subcommand("enumerate", "Unit-orbit representatives of minimal zero-sum sequences");
  add_n(enumerate);
  enumerate->add_option("--k", cfg.k, "Sequence length")->check(CLI::Range(2, 24));
  enumerate->add_flag("--coprime", cfg.coprime_element, "Only orbits with a normal form (k = 4)");
  enumerate->add_flag("--reduced", cfg.reduced, "Only reduced orbits (k = 4)");
  enumerate->add_option("--pattern", pattern_text, "A1 | A2 | A3 | A4 | Other (k = 4)");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "Exhaustive index check of all minimal zero-sum quads");
  add_n(verify);
  add_range(verify);
  verify->add_flag("--coprime-to-6", cfg.coprime_to_6, "Only n with gcd(n, 6) = 1");
  verify->add_option("--cache", cache_path, "JSONL cache for resumable runs");
  verify->add_flag("--strict-cache", cfg.strict_cache, "Fail on cache records from another configuration");
  add_common(verify);

  auto* search = app.add_subcommand("search", "Find orbits of high index");
  add_n(search);
  add_range(search);
  search->add_option("--k", cfg.k, "Sequence length")->check(CLI::Range(2, 24));
  search->add_option("--min-index", min_index, "Report orbits with index at least this");
  search->add_flag("--coprime-to-6", cfg.coprime_to_6, "Only n with gcd(n, 6) = 1");
  search->add_flag("--not-coprime-to-6", cfg.not_coprime_to_6, "Only n with gcd(n, 6) > 1");
  search->add_flag("--random", randomized, "Sample instead of enumerating");
  search->add_option("--samples", samples, "Samples per n in random mode");
  search->add_option("--seed", seed, "RNG seed in random mode");
  search->add_option("--limit", limit, "Stop after this many witnesses");
  add_common(search);

  auto* validate = app.add_subcommand("validate", "Empirical checks of the structural claims");
  validate->add_option("--claim", claim, "theorem21 | lemmas | remark32")->required();
  add_n(validate);
  add_range(validate);
  validate->add_option("--ns", ns, "Explicit list of n")->delimiter(',');
  validate->add_flag("--coprime-to-6", cfg.coprime_to_6, "Only n with gcd(n, 6) = 1 (lemmas)");
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub->count("--n")) cfg.n = n_value;
    if (!pattern_text.empty()) {
      cfg.pattern = parse_pattern(pattern_text);
      if (!cfg.pattern) throw UsageError("unknown pattern '" + pattern_text + "'");
    }
    cfg.format = format_text == "csv" ? OutputFormat::Csv : format_text == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (!cache_path.empty()) cfg.cache = cache_path;
    if (!output_path.empty()) cfg.output = output_path;
    if (cfg.coprime_to_6 && cfg.not_coprime_to_6) throw UsageError("conflicting gcd(n, 6) filters");

    Sink sink(cfg, out);
    std::ostream& os = sink.get();
    if (cfg.command == "index") return cmd_index(cfg, seq_text, file, os);
    if (cfg.command == "classify") return cmd_classify(cfg, seq_text, os);
    if (cfg.command == "normalize") return cmd_normalize(cfg, seq_text, os);
    if (cfg.command == "lemma") return cmd_lemma(cfg, seq_text, a, b, c, os);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, os);
    if (cfg.command == "verify") return cmd_verify(cfg, os, err);
    if (cfg.command == "search") return cmd_search(cfg, min_index, randomized, samples, seed, limit, os);
    return cmd_validate(cfg, claim, ns, os);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace zsindex::cli
