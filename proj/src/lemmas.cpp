#include "zsindex/lemmas.hpp"

#include <string>

namespace zsindex {
namespace {

i64 floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
i64 ceil_of(const Rational& r) { return ceil_div(r.numerator(), r.denominator()); }

// Smallest unit in the integer range [lo, hi], if any.
std::optional<i64> first_unit(i64 lo, i64 hi, const Modulus& m) {
  for (i64 x = lo; x <= hi; ++x) {
    if (m.is_unit(x)) return x;
  }
  return std::nullopt;
}

std::string km_detail(i64 k, i64 mm) { return "k=" + std::to_string(k) + " m=" + std::to_string(mm); }

// Shared search for the (k, m) lemmas; `a_ok(k)` is the lemma-specific
// clause and `m_cap` bounds m from above.
template <typename AOk>
LemmaOutcome km_search(LemmaId id, const NormalizedQuad& q, const Modulus& m, i64 m_cap, AOk a_ok) {
  LemmaOutcome out{id, false, {}, {}};
  for (i64 k = 1; k <= q.b; ++k) {
    const i64 lo = ceil_div(k * q.n, q.c);
    if (lo > m_cap) break;
    if (!a_ok(k)) continue;
    const i64 hi = std::min(floor_div(k * q.n, q.b), m_cap);
    if (auto unit = first_unit(lo, hi, m)) {
      out.fired = true;
      out.witness = KmWitness{k, *unit};
      out.detail = km_detail(k, *unit);
      return out;
    }
  }
  out.detail = "no (k, m) pair";
  return out;
}

}  // namespace

IntervalQ::IntervalQ(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (lo_ > hi_) throw InvariantViolated("interval with lo > hi");
}

bool IntervalQ::contains(i64 x) const {
  const Rational r(x);
  const bool above = lo_closed_ ? r >= lo_ : r > lo_;
  const bool below = hi_closed_ ? r <= hi_ : r < hi_;
  return above && below;
}

i64 IntervalQ::first_integer() const {
  const i64 f = ceil_of(lo_);
  return (!lo_closed_ && Rational(f) == lo_) ? f + 1 : f;
}

i64 IntervalQ::last_integer() const {
  const i64 f = floor_of(hi_);
  return (!hi_closed_ && Rational(f) == hi_) ? f - 1 : f;
}

std::vector<i64> interval_integers(const IntervalQ& interval) {
  std::vector<i64> out;
  for (i64 x = interval.first_integer(); x <= interval.last_integer(); ++x) out.push_back(x);
  return out;
}

std::optional<i64> coprime_in_interval(const IntervalQ& interval, const Modulus& m) {
  return first_unit(interval.first_integer(), interval.last_integer(), m);
}

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L33_1: return "L33_1";
    case LemmaId::L33_2: return "L33_2";
    case LemmaId::L34: return "L34";
    case LemmaId::L35: return "L35";
  }
  return "?";
}

LemmaOutcome lemma33_cond1(const NormalizedQuad& q, const Modulus& m) {
  // m * a < n  <=>  m <= (n - 1) / a
  return km_search(LemmaId::L33_1, q, m, (q.n - 1) / q.a, [](i64) { return true; });
}

LemmaOutcome lemma34_cond(const NormalizedQuad& q, const Modulus& m) {
  // a <= kn/b  <=>  a b <= k n
  return km_search(LemmaId::L34, q, m, q.n, [&](i64 k) { return q.a * q.b <= k * q.n; });
}

LemmaOutcome lemma33_cond2(const NormalizedQuad& q, const Modulus& m) {
  const i64 n = q.n;
  for (i64 M = 1; 2 * M <= n; ++M) {
    if (!m.is_unit(M)) continue;
    const int hits = (2 * residue_rep(M * q.a, n) > n) + (2 * residue_rep(M * q.b, n) > n) +
                     (2 * residue_rep(M * q.c, n) < n);
    if (hits >= 2) {
      return {LemmaId::L33_2, true, MultiplierWitness{M}, "M=" + std::to_string(M)};
    }
  }
  return {LemmaId::L33_2, false, {}, "no multiplier"};
}

LemmaOutcome lemma35_cond(const NormalizedQuad& q, const Modulus& m) {
  const i64 s = compute_s(q);
  if (s < 2) throw SNotLargeEnough("s = " + std::to_string(s));
  const auto intervals = omega_build(q, OmegaVariant::Paired);
  for (std::size_t t = 0; t < intervals.size(); ++t) {
    if (auto unit = coprime_in_interval(intervals[t], m)) {
      const i64 ti = static_cast<i64>(t);
      return {LemmaId::L35, true, IntervalWitness{ti, *unit},
              "t=" + std::to_string(ti) + " m=" + std::to_string(*unit)};
    }
  }
  return {LemmaId::L35, false, {}, "no interval holds a unit"};
}

bool assumption_B(const NormalizedQuad& q, const Modulus& m) {
  if (compute_s(q) < 2) return true;
  return !lemma35_cond(q, m).fired;
}

i64 compute_s(i64 a, i64 b) { return b / a; }
i64 compute_s(const NormalizedQuad& q) { return compute_s(q.a, q.b); }

i64 compute_k1(const NormalizedQuad& q) {
  const i64 n = q.n, b = q.b, c = q.c;
  if (ceil_div(n, c) != ceil_div(n, b)) {
    throw CeilMismatch("ceil(n/c) = " + std::to_string(ceil_div(n, c)) +
                       ", ceil(n/b) = " + std::to_string(ceil_div(n, b)));
  }
  for (i64 k = b; k >= 1; --k) {
    if (ceil_div((k - 1) * n, c) != ceil_div((k - 1) * n, b)) continue;
    // an integer in [kn/c, kn/b)  <=>  ceil(kn/c) * b < kn
    if (ceil_div(k * n, c) * b < k * n) return k;
  }
  throw InvariantViolated("no admissible k1 for (n,a,b,c) = (" + std::to_string(n) + "," +
                          std::to_string(q.a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

std::vector<IntervalQ> omega_build(const NormalizedQuad& q, OmegaVariant variant) {
  const i64 s = compute_s(q);
  std::vector<IntervalQ> out;
  for (i64 t = 0; t <= s / 2 - 1; ++t) {
    const i64 odd = variant == OmegaVariant::Paired ? 2 * s - 2 * t - 1 : 2 * s - t - 1;
    out.emplace_back(Rational(odd * q.n, 2 * q.b), Rational((s - t) * q.n, q.b));
  }
  return out;
}

Rational lemma51_bound(const Rational& u, const Rational& v, i64 k1, i64 s) {
  const Rational denom = u * (k1 - 1) - (s + 1);
  if (denom <= 0) {
    throw HypothesisViolated("u(k1-1) <= s+1 for k1 = " + std::to_string(k1) + ", s = " + std::to_string(s));
  }
  return u * v * (k1 - 1) * (s + 1) / denom;
}

bool remark32_check(const NormalizedQuad& q, const PatternClass& cls) {
  switch (cls.pattern) {
    case Pattern::A3: return q.a >= 36;
    case Pattern::A2:
    case Pattern::A4: return q.a >= 35;
    default: throw WrongPattern(std::string(to_string(cls.pattern)));
  }
}

StructureParams structure_params(const NormalizedQuad& q, const Modulus& m) {
  StructureParams p;
  p.s = compute_s(q);
  if (ceil_div(q.n, q.c) == ceil_div(q.n, q.b)) p.k1 = compute_k1(q);
  p.assumption_B = assumption_B(q, m);
  return p;
}

}  // namespace zsindex
