#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zsindex/classify.hpp"
#include "zsindex/lemmas.hpp"

namespace zsindex {

/// Fixed-length sequences stored back to back.
class SequenceList {
 public:
  explicit SequenceList(std::size_t k = 4) : k_(k) {}

  std::size_t k() const { return k_; }
  std::size_t size() const { return flat_.size() / k_; }
  bool empty() const { return flat_.empty(); }
  std::span<const i64> operator[](std::size_t i) const { return {flat_.data() + i * k_, k_}; }

  void push_back(std::span<const i64> seq) { flat_.insert(flat_.end(), seq.begin(), seq.end()); }
  void append(const SequenceList& other) { flat_.insert(flat_.end(), other.flat_.begin(), other.flat_.end()); }
  /// Sorts lexicographically and drops duplicates.
  void sort_unique();

 private:
  std::size_t k_;
  std::vector<i64> flat_;
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Default worker count: ZSINDEX_JOBS if set, else the hardware concurrency.
unsigned default_jobs();

/// Canonical representative of every unit orbit of minimal zero-sum
/// sequences of length k over Z_n, ascending. With units_only, restricts to
/// orbits containing a unit (canonical form starting with 1). 2 <= k <= 24.
SequenceList enumerate_minimal_classes(const Modulus& m, std::size_t k, bool units_only = false,
                                       unsigned jobs = 1);

/// Same orbits as above for k = 4, found by brute force over all sorted
/// quads and grouped with canonical_rep. Test oracle for small n.
SequenceList enumerate_minimal_classes_naive(const Modulus& m);

struct QuadFilter {
  bool require_coprime_element = false;
  bool require_reduced = false;
  std::optional<Pattern> pattern;
};

/// One representative per orbit of minimal zero-sum quads passing the
/// filter. With require_coprime_element, orbits are collected from the
/// normalized (a, b, c) space, so exactly the normalizable orbits appear.
/// Orbits with global gcd > 1 never match a pattern filter.
SequenceList enumerate_minimal_quads(const Modulus& m, const QuadFilter& filter, unsigned jobs = 1);

/// Every normalized quad (a, b, c) over Z_n whose denormalization is a
/// minimal zero-sum sequence, ordered by (b, c).
std::vector<NormalizedQuad> enumerate_normalized_quads(i64 n);

struct Counterexample {
  i64 n = 0;
  std::vector<i64> sequence;
  i64 index_numerator = 0;  // ind = index_numerator / n
  i64 witness_t = 0;
  std::string context;

  Rational index() const { return Rational(index_numerator, n); }
};

/// Recomputes the oracle index and compares with the stored one.
bool reverify(const Counterexample& ce);

struct VerifyReport {
  i64 n = 0;
  bool in_conjecture_scope = false;  // gcd(n, 6) = 1
  i64 class_count = 0;
  i64 max_index = 0;
  i64 counterexample_count = 0;                 // orbits of index >= 2
  std::vector<Counterexample> counterexamples;  // capped sample
  std::map<Pattern, i64> pattern_census;  // orbits with global gcd 1
  bool census_vacuous = true;              // n is not a product of three primes
  i64 reduced_count = 0;
  i64 coprime_class_count = 0;
  i64 delegated_count = 0;       // orbits with global gcd d > 1
  i64 delegation_mismatches = 0;
  double elapsed_ms = 0;
};

/// Enumerates all orbits of minimal zero-sum quads over Z_n and computes
/// the oracle index of each. Orbits with global gcd d > 1 are cross-checked
/// against their image over Z_{n/d}.
VerifyReport verify_conjecture(i64 n, unsigned jobs = 1);

struct SearchOptions {
  i64 n_min = 5;
  i64 n_max = 50;
  std::size_t k = 4;
  i64 min_index = 2;
  /// 0: every n; 1: only gcd(n, 6) = 1; -1: only gcd(n, 6) != 1.
  int coprime_to_6 = 0;
  /// Stop after this many hits (0 = unlimited).
  std::size_t max_results = 0;
  bool randomized = false;
  std::size_t samples_per_n = 10000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

/// Orbits with oracle index >= min_index. Exhaustive mode needs k <= 8.
std::vector<Counterexample> search_high_index(const SearchOptions& opt);

/// Random minimal zero-sum sequences of length k over Z_n: a random unit
/// times a random composition of n or 2n, kept when minimal.
std::vector<std::vector<i64>> sample_minimal_sequences(const Modulus& m, std::size_t k, std::size_t count,
                                                       std::uint64_t seed);

struct Theorem21Report {
  i64 n = 0;
  std::size_t prime_count = 0;
  i64 classes_with_unit = 0;
  i64 reduced = 0;
  i64 normalizable_reduced = 0;
  /// Other only because no normal form exists, with oracle index 1.
  i64 unnormalizable_index_one = 0;
  std::map<Pattern, i64> census;
  std::vector<Counterexample> anomalies;
  bool vacuous = false;  // no qualifying reduced orbit at this n
};

/// Every reduced orbit with global gcd 1 and a unit element is classified;
/// Other (three primes) or any such orbit at all (four primes) is an
/// anomaly, except an all-unit orbit with no normal form whose index is 1.
/// Needs squarefree n with three or four prime factors.
Theorem21Report validate_theorem21(i64 n, unsigned jobs = 1);

struct LemmaTally {
  i64 fired = 0;
  i64 exceptions = 0;  // fired with oracle index != 1
};

struct LemmaSweepReport {
  i64 n = 0;
  i64 quads = 0;
  i64 index_one = 0;
  std::map<LemmaId, LemmaTally> tallies;
  std::vector<Counterexample> exceptions;
  /// Quads of index 1 where neither lemma33 condition fires.
  i64 converse_gaps = 0;
  /// 2 <= k1 <= b whenever ceil(n/c) = ceil(n/b).
  i64 k1_checked = 0;
  i64 k1_range_violations = 0;
  /// Structural probes on reduced A2-A4 quads under (B), n > 1000 only.
  i64 probe_qualifying = 0;
  i64 s_bound_violations = 0;   // s > 9
  i64 k1_bound_checked = 0;
  i64 k1_bound_violations = 0;  // k1 > 6
};

LemmaSweepReport validate_lemmas(i64 n);

struct Remark32Entry {
  i64 n = 0;
  i64 qualifying = 0;
  i64 violations = 0;
};

struct Remark32Report {
  std::vector<Remark32Entry> per_n;
  i64 qualifying = 0;
  i64 violations = 0;
  i64 vacuous_n = 0;  // n values with no qualifying quad
  std::vector<Counterexample> anomalies;
};

/// Lower bounds a >= 36 (A3) and a >= 35 (A2, A4) over every reduced normalized quad whose
/// (a, b, c) meets A2, A3 or A4, for squarefree three-prime n in
/// [n_lo, n_hi] with gcd(n, 6) = 1.
Remark32Report validate_remark32(i64 n_lo, i64 n_hi, unsigned jobs = 1);

}  // namespace zsindex
