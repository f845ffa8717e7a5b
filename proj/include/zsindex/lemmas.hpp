#pragma once

// Sufficient conditions for index 1 on normalized quads, and the interval
// machinery they are phrased in. Everything here is exact: endpoints are
// rationals and comparisons never touch floating point.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zsindex/classify.hpp"

namespace zsindex {

/// Rational interval with independently open or closed endpoints.
class IntervalQ {
 public:
  /// Throws InvariantViolated when lo > hi.
  IntervalQ(Rational lo, Rational hi, bool lo_closed = true, bool hi_closed = true);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool contains(i64 x) const;
  /// Smallest and largest integer members; empty interval gives first > last.
  i64 first_integer() const;
  i64 last_integer() const;

 private:
  Rational lo_, hi_;
  bool lo_closed_, hi_closed_;
};

std::vector<i64> interval_integers(const IntervalQ& interval);

/// Smallest member of the interval coprime to n, if any.
std::optional<i64> coprime_in_interval(const IntervalQ& interval, const Modulus& m);

enum class LemmaId { L33_1, L33_2, L34, L35 };

std::string_view to_string(LemmaId id);

struct KmWitness {
  i64 k = 0;
  i64 m = 0;
};
struct MultiplierWitness {
  i64 M = 0;
};
struct IntervalWitness {
  i64 t = 0;  // interval index
  i64 m = 0;  // coprime member
};
using LemmaWitness = std::variant<std::monostate, KmWitness, MultiplierWitness, IntervalWitness>;

struct LemmaOutcome {
  LemmaId lemma_id = LemmaId::L33_1;
  bool fired = false;
  LemmaWitness witness;
  std::string detail;
};

/// k in [1, b] and a unit m with kn/c <= m <= kn/b and m*a < n.
LemmaOutcome lemma33_cond1(const NormalizedQuad& q, const Modulus& m);
/// A unit M in [1, n/2] meeting two of |Ma|_n > n/2, |Mb|_n > n/2,
/// |Mc|_n < n/2.
LemmaOutcome lemma33_cond2(const NormalizedQuad& q, const Modulus& m);
/// As cond1 but with a <= kn/b in place of m*a < n.
LemmaOutcome lemma34_cond(const NormalizedQuad& q, const Modulus& m);
/// s >= 2 and some [(2s-2t-1)n/(2b), (s-t)n/b], 0 <= t <= s/2 - 1, holds a
/// unit. Throws SNotLargeEnough when s < 2.
LemmaOutcome lemma35_cond(const NormalizedQuad& q, const Modulus& m);
/// No interval of lemma35 contains a unit. Vacuously true for s < 2.
bool assumption_B(const NormalizedQuad& q, const Modulus& m);

/// floor(b / a).
i64 compute_s(const NormalizedQuad& q);
i64 compute_s(i64 a, i64 b);

/// Largest k in [1, b] with ceil((k-1)n/c) = ceil((k-1)n/b) whose interval
/// [kn/c, kn/b) contains an integer. Throws CeilMismatch unless
/// ceil(n/c) = ceil(n/b), InvariantViolated if no such k exists.
i64 compute_k1(const NormalizedQuad& q);

enum class OmegaVariant {
  Paired,  // (2s-2t-1)n/(2b), the form used by the lemmas
  Prose,   // (2s-t-1)n/(2b), the form in the set's written definition
};

/// The Omega-defining intervals for t = 0 .. floor(s/2) - 1.
std::vector<IntervalQ> omega_build(const NormalizedQuad& q, OmegaVariant variant = OmegaVariant::Paired);

/// u v (k1-1)(s+1) / (u(k1-1) - (s+1)). Throws HypothesisViolated when
/// u(k1-1) <= s+1.
Rational lemma51_bound(const Rational& u, const Rational& v, i64 k1, i64 s);

/// a >= 36 for A3, a >= 35 for A2 and A4. Throws WrongPattern otherwise.
bool remark32_check(const NormalizedQuad& q, const PatternClass& cls);

struct StructureParams {
  i64 s = 0;
  std::optional<i64> k1;  // present iff ceil(n/c) = ceil(n/b)
  bool assumption_B = false;
};

StructureParams structure_params(const NormalizedQuad& q, const Modulus& m);

}  // namespace zsindex
