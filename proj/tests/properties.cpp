#include "properties.hpp"

#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "zsindex/lemmas.hpp"
#include "zsindex/verifier.hpp"

namespace props {
namespace {

using zsindex::i64;

std::string show(i64 n, const std::vector<i64>& s) {
  std::ostringstream o;
  o << "n=" << n << " [";
  for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
  o << "]";
  return o.str();
}

void fail(Outcome& out, const std::string& what) {
  if (out.failures++ == 0) out.first_failure = what;
}

// Random sequence over Z_n; every other draw is forced to be zero-sum.
std::vector<i64> draw(std::mt19937_64& rng, i64 n, bool zero_sum) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  std::vector<i64> xs(k);
  for (auto& x : xs) x = std::uniform_int_distribution<i64>(1, n - 1)(rng);
  if (zero_sum && k > 1) {
    i64 rest = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) rest += xs[i];
    const i64 last = oracle::rep(-rest, n);
    if (last != n) xs.back() = last;
  }
  return xs;
}

}  // namespace

Outcome orbit_invariance(long cases, std::uint64_t seed) {
  Outcome out{"orbit invariance of index and minimality"};
  std::mt19937_64 rng(seed);
  for (long c = 0; c < cases; ++c) {
    const i64 n = std::uniform_int_distribution<i64>(2, 500)(rng);
    const zsindex::Modulus m(n);
    const auto xs = draw(rng, n, c % 2 == 0);
    const i64 t = m.units()[std::uniform_int_distribution<std::size_t>(0, m.units().size() - 1)(rng)];
    const zsindex::GroupSequence s(m, xs);
    const auto ts = s.scaled(t);
    ++out.cases;
    const auto i1 = zsindex::index_of(s), i2 = zsindex::index_of(ts);
    if (i1.value_numerator != i2.value_numerator) fail(out, show(n, xs) + " index changes under t=" + std::to_string(t));
    if (i1.value_numerator != oracle::index(xs, n).first) fail(out, show(n, xs) + " index differs from brute force");
    if (zsindex::is_minimal_zero_sum(s) != zsindex::is_minimal_zero_sum(ts)) {
      fail(out, show(n, xs) + " minimality changes under t=" + std::to_string(t));
    }
    if (zsindex::is_minimal_zero_sum(s) != oracle::minimal(xs, n)) fail(out, show(n, xs) + " minimality differs");
  }
  return out;
}

Outcome integrality_iff_zero_sum(long cases, std::uint64_t seed) {
  Outcome out{"index integral iff zero-sum"};
  std::mt19937_64 rng(seed);
  for (long c = 0; c < cases; ++c) {
    const i64 n = std::uniform_int_distribution<i64>(2, 500)(rng);
    const auto xs = draw(rng, n, c % 2 == 0);
    const zsindex::GroupSequence s(zsindex::Modulus(n), xs);
    ++out.cases;
    i64 total = 0;
    for (i64 x : xs) total += x;
    const bool zero = total % n == 0;
    if (zsindex::index_of(s).is_integer() != zero) fail(out, show(n, xs));
    if (zsindex::is_zero_sum(s) != zero) fail(out, show(n, xs) + " is_zero_sum");
  }
  return out;
}

Outcome enumeration_vs_naive(i64 n_max) {
  Outcome out{"canonical enumeration equals naive enumeration"};
  for (i64 n = 2; n <= n_max; ++n) {
    const zsindex::Modulus m(n);
    const auto fast = zsindex::enumerate_minimal_classes(m, 4);
    std::set<std::vector<i64>> got;
    for (std::size_t i = 0; i < fast.size(); ++i) got.insert(std::vector<i64>(fast[i].begin(), fast[i].end()));
    ++out.cases;
    if (got.size() != fast.size()) fail(out, "duplicate orbit at n=" + std::to_string(n));
    if (got != oracle::quad_orbits(n)) fail(out, "orbit sets differ at n=" + std::to_string(n));
  }
  return out;
}

Outcome interval_endpoints(long cases, std::uint64_t seed) {
  Outcome out{"exact interval endpoints"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> num(-60, 60), den(1, 7);
  std::bernoulli_distribution coin(0.5);
  for (long c = 0; c < cases; ++c) {
    // Small denominators make integer endpoints common.
    i64 p1 = num(rng), q1 = den(rng), p2 = num(rng), q2 = den(rng);
    if (c % 4 == 0) {
      p2 = p1;
      q2 = q1;
    }
    if (p1 * q2 > p2 * q1) {
      std::swap(p1, p2);
      std::swap(q1, q2);
    }
    const bool lo_closed = coin(rng), hi_closed = coin(rng);
    const zsindex::IntervalQ iv(zsindex::Rational(p1, q1), zsindex::Rational(p2, q2), lo_closed, hi_closed);
    std::vector<i64> want;
    for (i64 x = -70; x <= 70; ++x) {
      // x vs p/q with q > 0: compare x*q with p.
      const bool above = lo_closed ? x * q1 >= p1 : x * q1 > p1;
      const bool below = hi_closed ? x * q2 <= p2 : x * q2 < p2;
      if (above && below) want.push_back(x);
      if (iv.contains(x) != (above && below)) fail(out, "contains(" + std::to_string(x) + ")");
    }
    ++out.cases;
    if (zsindex::interval_integers(iv) != want) {
      std::ostringstream o;
      o << (lo_closed ? "[" : "(") << p1 << "/" << q1 << ", " << p2 << "/" << q2 << (hi_closed ? "]" : ")");
      fail(out, o.str());
    }
  }
  return out;
}

std::vector<Outcome> run_all() {
  return {orbit_invariance(10000, 101), integrality_iff_zero_sum(10000, 202), enumeration_vs_naive(60),
          interval_endpoints(1000, 303)};
}

}  // namespace props
