#include "zsindex/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace zsindex {
namespace {

// Stored counterexamples per report are capped; counts stay exact.
constexpr std::size_t kMaxStoredCounterexamples = 1000;

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<i64> gcd_table(i64 n) {
  std::vector<i64> g(static_cast<std::size_t>(n));
  for (i64 x = 0; x < n; ++x) g[x] = std::gcd(x, n);
  return g;
}

// Depth-first walk over sorted zero-sum free prefixes x_1 = d <= x_2 <= ...
// whose completion x_k = -(x_1 + ... + x_{k-1}) keeps the tuple sorted. A
// zero-sum free prefix plus its negated sum is automatically minimal.
class ClassWalker {
 public:
  ClassWalker(const Modulus& m, const std::vector<i64>& gcds, std::size_t k, i64 d, SequenceList& out)
      : m_(m), n_(m.n()), gcds_(gcds), k_(k), d_(d), out_(out), prefix_(k), sums_(k) {}

  // Enumerates every class whose canonical form starts (d, x2).
  void run_from(i64 x2) {
    prefix_[0] = d_;
    sums_[0] = {d_};
    if (k_ == 2) {
      complete(1, d_);
      return;
    }
    if (!admissible(x2, 0)) return;
    push(1, x2);
    descend(2, x2, (d_ + x2) % n_);
  }

 private:
  bool admissible(i64 x, std::size_t depth) const {
    if (gcds_[x] < d_) return false;
    for (i64 s : sums_[depth]) {
      if ((s + x) % n_ == 0) return false;
    }
    return true;
  }

  void push(std::size_t depth, i64 x) {
    prefix_[depth] = x;
    auto& next = sums_[depth];
    const auto& prev = sums_[depth - 1];
    next.clear();
    next.reserve(2 * prev.size() + 1);
    next.insert(next.end(), prev.begin(), prev.end());
    for (i64 s : prev) next.push_back((s + x) % n_);
    next.push_back(x);
  }

  void descend(std::size_t depth, i64 min_x, i64 sum) {
    if (depth == k_ - 1) {
      complete(depth, sum);
      return;
    }
    for (i64 x = min_x; x < n_; ++x) {
      if (!admissible(x, depth - 1)) continue;
      push(depth, x);
      descend(depth + 1, x, (sum + x) % n_);
    }
  }

  void complete(std::size_t depth, i64 sum) {
    const i64 last = (n_ - sum) % n_;
    if (last == 0 || last < prefix_[depth - 1] || gcds_[last] < d_) return;
    prefix_[depth] = last;
    if (raw::is_canonical(prefix_, m_)) out_.push_back(prefix_);
  }

  const Modulus& m_;
  i64 n_;
  const std::vector<i64>& gcds_;
  std::size_t k_;
  i64 d_;
  SequenceList& out_;
  std::vector<i64> prefix_;
  std::vector<std::vector<i64>> sums_;
};

// canonical_rep for sequences holding a unit: the canonical form starts with
// 1, so only the inverses of the unit elements need trying.
void canonical_with_unit(std::span<const i64> seq, const Modulus& m, std::vector<i64>& best) {
  const i64 n = m.n();
  std::vector<i64> image(seq.size());
  best.clear();
  for (i64 x : seq) {
    if (!m.is_unit(x)) continue;
    const i64 t = inv_mod(x, n);
    for (std::size_t i = 0; i < seq.size(); ++i) image[i] = (t * seq[i]) % n;
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  }
}

i64 global_gcd(std::span<const i64> seq, i64 n) {
  i64 g = n;
  for (i64 x : seq) g = std::gcd(g, x);
  return g;
}

Counterexample make_counterexample(i64 n, std::span<const i64> seq, const IndexResult& r, std::string context) {
  return {n, std::vector<i64>(seq.begin(), seq.end()), r.value_numerator, r.witness_t, std::move(context)};
}

bool passes_coprime_filter(i64 n, int filter) {
  const bool coprime = std::gcd(n, i64{6}) == 1;
  return filter == 0 || (filter > 0 && coprime) || (filter < 0 && !coprime);
}

std::array<i64, 4> quad_of(const NormalizedQuad& q) { return {1, q.c, q.n - q.b, q.n - q.a}; }

}  // namespace

void SequenceList::sort_unique() {
  const std::size_t count = size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return (*this)[i]; };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto a = row(x), b = row(y);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  std::vector<i64> flat;
  flat.reserve(flat_.size());
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto cur = row(order[idx]);
    if (idx > 0) {
      const auto prev = row(order[idx - 1]);
      if (std::equal(cur.begin(), cur.end(), prev.begin(), prev.end())) continue;
    }
    flat.insert(flat.end(), cur.begin(), cur.end());
  }
  flat_ = std::move(flat);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ZSINDEX_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SequenceList enumerate_minimal_classes(const Modulus& m, std::size_t k, bool units_only, unsigned jobs) {
  if (k < 2 || k > kMaxSubsetLength) {
    throw PreconditionViolated("class enumeration needs 2 <= k <= 24, got " + std::to_string(k));
  }
  const i64 n = m.n();
  const auto gcds = gcd_table(n);

  // One task per (d, x2) stripe; stripes partition the sorted tuples.
  std::vector<std::pair<i64, i64>> tasks;
  for (i64 d : m.divisors()) {
    if (d == n || (units_only && d != 1)) continue;
    if (k == 2) {
      tasks.emplace_back(d, d);
      continue;
    }
    for (i64 x2 = d; x2 < n; ++x2) tasks.emplace_back(d, x2);
  }

  std::vector<SequenceList> parts(tasks.size(), SequenceList(k));
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    ClassWalker walker(m, gcds, k, tasks[i].first, parts[i]);
    walker.run_from(tasks[i].second);
  });

  SequenceList out(k);
  for (const auto& p : parts) out.append(p);
  out.sort_unique();
  return out;
}

SequenceList enumerate_minimal_classes_naive(const Modulus& m) {
  const i64 n = m.n();
  std::set<std::vector<i64>> seen;
  for (i64 x1 = 1; x1 < n; ++x1) {
    for (i64 x2 = x1; x2 < n; ++x2) {
      for (i64 x3 = x2; x3 < n; ++x3) {
        const i64 x4 = mod_floor(-(x1 + x2 + x3), n);
        if (x4 == 0 || x4 < x3) continue;
        const std::vector<i64> quad{x1, x2, x3, x4};
        if (!is_minimal_zero_sum(quad, n)) continue;
        const auto rep = canonical_rep(GroupSequence(m, quad));
        seen.emplace(rep.elems().begin(), rep.elems().end());
      }
    }
  }
  SequenceList out(4);
  for (const auto& s : seen) out.push_back(s);
  return out;
}

std::vector<NormalizedQuad> enumerate_normalized_quads(i64 n) {
  std::vector<NormalizedQuad> out;
  for (i64 b = 2; 2 * b < n; ++b) {
    // a = c + 1 - b with 1 <= a <= b  <=>  b <= c <= 2b - 1
    for (i64 c = std::max<i64>(b, 2); c <= 2 * b - 1 && 2 * c < n; ++c) {
      const i64 a = c + 1 - b;
      const std::array<i64, 4> quad{1, c, n - b, n - a};
      if (is_minimal_zero_sum(quad, n)) out.push_back({n, a, b, c, 1, false});
    }
  }
  return out;
}

SequenceList enumerate_minimal_quads(const Modulus& m, const QuadFilter& filter, unsigned jobs) {
  SequenceList classes(4);
  if (filter.require_coprime_element) {
    std::vector<i64> rep;
    for (const auto& q : enumerate_normalized_quads(m.n())) {
      auto quad = quad_of(q);
      std::sort(quad.begin(), quad.end());
      canonical_with_unit(quad, m, rep);
      classes.push_back(rep);
    }
    classes.sort_unique();
  } else {
    classes = enumerate_minimal_classes(m, 4, false, jobs);
  }
  if (!filter.require_reduced && !filter.pattern) return classes;

  std::vector<char> keep(classes.size(), 0);
  parallel_for(classes.size(), jobs, [&](std::size_t i) {
    const GroupSequence seq(m, std::vector<i64>(classes[i].begin(), classes[i].end()));
    if (filter.require_reduced && !is_reduced(seq)) return;
    if (filter.pattern) {
      if (global_gcd(classes[i], m.n()) != 1) return;
      if (classify_pattern(seq).pattern != *filter.pattern) return;
    }
    keep[i] = 1;
  });
  SequenceList out(4);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (keep[i]) out.push_back(classes[i]);
  }
  return out;
}

bool reverify(const Counterexample& ce) {
  const Modulus m(ce.n);
  const auto r = raw::index_of(ce.sequence, m);
  return r.value_numerator == ce.index_numerator && r.witness_t == ce.witness_t;
}

VerifyReport verify_conjecture(i64 n, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  const Modulus m(n);
  VerifyReport rep;
  rep.n = n;
  rep.in_conjecture_scope = m.coprime_to_6();
  const bool three_primes = is_three_prime_squarefree(m);
  rep.census_vacuous = !three_primes;

  const SequenceList classes = enumerate_minimal_classes(m, 4, false, jobs);
  rep.class_count = static_cast<i64>(classes.size());

  std::map<i64, Modulus> quotients;
  for (i64 d : m.divisors()) {
    if (d > 1 && n / d >= 2) quotients.emplace(d, Modulus(n / d));
  }

  struct ClassResult {
    IndexResult index;
    i64 gcd = 1;
    bool reduced = false;
    bool delegation_ok = true;
    Pattern pattern = Pattern::Other;
  };
  std::vector<ClassResult> results(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t i) {
    const auto seq = classes[i];
    ClassResult& r = results[i];
    r.index = raw::index_of(seq, m);
    r.gcd = global_gcd(seq, n);
    const GroupSequence gs(m, std::vector<i64>(seq.begin(), seq.end()));
    r.reduced = is_reduced(gs);
    if (r.gcd > 1) {
      std::vector<i64> compressed(seq.size());
      std::transform(seq.begin(), seq.end(), compressed.begin(), [&](i64 x) { return x / r.gcd; });
      const auto sub = raw::index_of(compressed, quotients.at(r.gcd));
      r.delegation_ok = sub.value_numerator * r.gcd == r.index.value_numerator;
    } else if (three_primes) {
      r.pattern = classify_pattern(gs).pattern;
    }
  });

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& r = results[i];
    const i64 index = r.index.value_numerator / n;
    rep.max_index = std::max(rep.max_index, index);
    if (r.reduced) ++rep.reduced_count;
    if (classes[i][0] == 1) ++rep.coprime_class_count;
    if (r.gcd > 1) {
      ++rep.delegated_count;
      if (!r.delegation_ok) {
        ++rep.delegation_mismatches;
        rep.counterexamples.push_back(make_counterexample(n, classes[i], r.index, "delegation mismatch"));
      }
    } else {
      ++rep.pattern_census[r.pattern];
    }
    if (index >= 2) {
      ++rep.counterexample_count;
      if (rep.counterexamples.size() < kMaxStoredCounterexamples) {
        rep.counterexamples.push_back(make_counterexample(
            n, classes[i], r.index, rep.in_conjecture_scope ? "index>=2 (conjecture)" : "index>=2 (gcd(n,6)>1)"));
      }
    }
  }
  rep.elapsed_ms = elapsed_ms_since(start);
  return rep;
}

std::vector<std::vector<i64>> sample_minimal_sequences(const Modulus& m, std::size_t k, std::size_t count,
                                                       std::uint64_t seed) {
  const i64 n = m.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_unit(0, m.units().size() - 1);
  std::vector<std::vector<i64>> out;
  std::vector<i64> cuts, seq;
  const std::size_t max_attempts = 200 * count + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    const i64 total = (attempt % 2 == 0 ? 1 : 2) * n;
    if (static_cast<i64>(k) > total) continue;
    // k positive parts summing to total: k-1 distinct cuts in [1, total-1].
    std::uniform_int_distribution<i64> pick_cut(1, total - 1);
    std::set<i64> cut_set;
    while (cut_set.size() + 1 < k) cut_set.insert(pick_cut(rng));
    cuts.assign(cut_set.begin(), cut_set.end());
    cuts.push_back(total);
    seq.clear();
    i64 prev = 0;
    bool ok = true;
    const i64 g = m.units()[pick_unit(rng)];
    for (i64 c : cuts) {
      const i64 part = c - prev;
      prev = c;
      if (part >= n) {
        ok = false;
        break;
      }
      seq.push_back((g * part) % n);
    }
    if (!ok) continue;
    std::sort(seq.begin(), seq.end());
    if (is_minimal_zero_sum(seq, n)) out.push_back(seq);
  }
  return out;
}

std::vector<Counterexample> search_high_index(const SearchOptions& opt) {
  if (!opt.randomized && opt.k > 8) {
    throw PreconditionViolated("exhaustive search needs k <= 8, got " + std::to_string(opt.k));
  }
  std::vector<Counterexample> hits;
  for (i64 n = std::max<i64>(opt.n_min, 2); n <= opt.n_max; ++n) {
    if (!passes_coprime_filter(n, opt.coprime_to_6)) continue;
    const Modulus m(n);
    SequenceList classes(opt.k);
    if (opt.randomized) {
      for (const auto& s : sample_minimal_sequences(m, opt.k, opt.samples_per_n, opt.seed + static_cast<std::uint64_t>(n))) {
        const auto rep = canonical_rep(GroupSequence(m, s));
        classes.push_back(rep.elems());
      }
      classes.sort_unique();
    } else {
      classes = enumerate_minimal_classes(m, opt.k, false, opt.jobs);
    }
    std::vector<IndexResult> indices(classes.size());
    parallel_for(classes.size(), opt.jobs, [&](std::size_t i) { indices[i] = raw::index_of(classes[i], m); });
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (indices[i].value_numerator < opt.min_index * n) continue;
      hits.push_back(make_counterexample(n, classes[i], indices[i],
                                         "index>=" + std::to_string(opt.min_index) + " k=" + std::to_string(opt.k)));
      if (opt.max_results != 0 && hits.size() >= opt.max_results) return hits;
    }
  }
  return hits;
}

Theorem21Report validate_theorem21(i64 n, unsigned jobs) {
  const Modulus m(n);
  if (!m.is_squarefree() || (m.factors().size() != 3 && m.factors().size() != 4)) {
    throw PreconditionViolated("n = " + std::to_string(n) + " must be squarefree with 3 or 4 prime factors");
  }
  Theorem21Report rep;
  rep.n = n;
  rep.prime_count = m.factors().size();

  const SequenceList classes = enumerate_minimal_classes(m, 4, true, jobs);
  rep.classes_with_unit = static_cast<i64>(classes.size());

  struct Outcome {
    bool reduced = false;
    bool normalizable = false;
    Pattern pattern = Pattern::Other;
  };
  std::vector<Outcome> outcomes(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t i) {
    const GroupSequence seq(m, std::vector<i64>(classes[i].begin(), classes[i].end()));
    Outcome& o = outcomes[i];
    o.reduced = is_reduced(seq);
    if (!o.reduced) return;
    o.normalizable = normalize_quad(seq).has_value();
    if (rep.prime_count == 3) o.pattern = classify_pattern(seq).pattern;
  });

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.reduced) continue;
    ++rep.reduced;
    if (o.normalizable) ++rep.normalizable_reduced;
    ++rep.census[o.pattern];
    if (rep.prime_count == 4 || o.pattern == Pattern::Other) {
      const auto idx = raw::index_of(classes[i], m);
      if (rep.prime_count == 3 && !o.normalizable && idx.value_numerator == n) {
        ++rep.unnormalizable_index_one;
        continue;
      }
      if (rep.anomalies.size() < kMaxStoredCounterexamples) {
        rep.anomalies.push_back(make_counterexample(
            n, classes[i], idx, rep.prime_count == 4 ? "reduced quad with four primes" : "unclassified reduced quad"));
      }
    }
  }
  rep.vacuous = rep.reduced == 0;
  return rep;
}

LemmaSweepReport validate_lemmas(i64 n) {
  const Modulus m(n);
  LemmaSweepReport rep;
  rep.n = n;
  const bool probe = n > 1000;

  auto record = [&](LemmaId id, const LemmaOutcome& o, const IndexResult& idx, std::span<const i64> seq) {
    if (!o.fired) return;
    auto& tally = rep.tallies[id];
    ++tally.fired;
    if (idx.value_numerator == n) return;
    ++tally.exceptions;
    if (rep.exceptions.size() < kMaxStoredCounterexamples) {
      rep.exceptions.push_back(make_counterexample(n, seq, idx, std::string(to_string(id)) + " fired: " + o.detail));
    }
  };

  std::vector<i64> seq(4);
  for (const auto& q : enumerate_normalized_quads(n)) {
    const auto quad = quad_of(q);
    std::copy(quad.begin(), quad.end(), seq.begin());
    std::sort(seq.begin(), seq.end());
    ++rep.quads;
    const auto idx = raw::index_of(seq, m);
    if (idx.value_numerator == n) ++rep.index_one;

    const auto c1 = lemma33_cond1(q, m);
    const auto c2 = lemma33_cond2(q, m);
    record(LemmaId::L33_1, c1, idx, seq);
    record(LemmaId::L33_2, c2, idx, seq);
    record(LemmaId::L34, lemma34_cond(q, m), idx, seq);
    const i64 s = compute_s(q);
    bool assumption_b = true;
    if (s >= 2) {
      const auto c5 = lemma35_cond(q, m);
      record(LemmaId::L35, c5, idx, seq);
      assumption_b = !c5.fired;
    }
    if (idx.value_numerator == n && !c1.fired && !c2.fired) ++rep.converse_gaps;

    std::optional<i64> k1;
    if (ceil_div(n, q.c) == ceil_div(n, q.b)) {
      ++rep.k1_checked;
      try {
        k1 = compute_k1(q);
        if (*k1 < 2 || *k1 > q.b) ++rep.k1_range_violations;
      } catch (const InvariantViolated&) {
        ++rep.k1_range_violations;
      }
    }

    if (!probe || !assumption_b) continue;
    const auto cls = classify_normalized(q, m);
    if (cls.pattern != Pattern::A2 && cls.pattern != Pattern::A3 && cls.pattern != Pattern::A4) continue;
    if (!is_reduced(GroupSequence(m, seq))) continue;
    ++rep.probe_qualifying;
    if (s > 9) ++rep.s_bound_violations;
    if (k1) {
      ++rep.k1_bound_checked;
      if (*k1 > 6) ++rep.k1_bound_violations;
    }
  }
  return rep;
}

Remark32Report validate_remark32(i64 n_lo, i64 n_hi, unsigned jobs) {
  std::vector<i64> ns;
  for (i64 n = std::max<i64>(n_lo, 2); n <= n_hi; ++n) {
    if (std::gcd(n, i64{6}) != 1) continue;
    if (is_three_prime_squarefree(Modulus(n))) ns.push_back(n);
  }

  struct PerN {
    Remark32Entry entry;
    std::vector<Counterexample> anomalies;
  };
  std::vector<PerN> results(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    const i64 n = ns[i];
    const Modulus m(n);
    PerN& r = results[i];
    r.entry.n = n;
    std::vector<i64> seq(4);
    for (const auto& q : enumerate_normalized_quads(n)) {
      const auto cls = classify_normalized(q, m);
      if (cls.pattern != Pattern::A2 && cls.pattern != Pattern::A3 && cls.pattern != Pattern::A4) continue;
      const auto quad = quad_of(q);
      std::copy(quad.begin(), quad.end(), seq.begin());
      std::sort(seq.begin(), seq.end());
      if (!is_reduced(GroupSequence(m, seq))) continue;
      ++r.entry.qualifying;
      if (remark32_check(q, cls)) continue;
      ++r.entry.violations;
      if (r.anomalies.size() < kMaxStoredCounterexamples) {
        r.anomalies.push_back(make_counterexample(n, seq, raw::index_of(seq, m),
                                                  std::string(to_string(cls.pattern)) + " with a = " + std::to_string(q.a)));
      }
    }
  });

  Remark32Report rep;
  for (auto& r : results) {
    rep.per_n.push_back(r.entry);
    rep.qualifying += r.entry.qualifying;
    rep.violations += r.entry.violations;
    if (r.entry.qualifying == 0) ++rep.vacuous_n;
    for (auto& a : r.anomalies) {
      if (rep.anomalies.size() < kMaxStoredCounterexamples) rep.anomalies.push_back(std::move(a));
    }
  }
  return rep;
}

}  // namespace zsindex
