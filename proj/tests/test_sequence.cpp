#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "zsindex/errors.hpp"
#include "zsindex/sequence.hpp"

using namespace zsindex;

namespace {
GroupSequence seq(i64 n, std::vector<i64> xs) { return GroupSequence(Modulus(n), std::move(xs)); }
std::vector<i64> vec(const GroupSequence& s) { return {s.elems().begin(), s.elems().end()}; }
}  // namespace

TEST_CASE("construction") {
  CHECK(vec(seq(11, {9, 1, 8, 4})) == std::vector<i64>{1, 4, 8, 9});
  CHECK_THROWS_AS(seq(11, {0, 1}), InvalidSequence);
  CHECK_THROWS_AS(seq(11, {11, 1}), InvalidSequence);
  CHECK_THROWS_AS(seq(11, {}), InvalidSequence);
}

TEST_CASE("norm at a multiplier") {
  CHECK(seq_norm(seq(7, {1, 6}), 1) == Rational(1));
  CHECK(seq_norm(seq(7, {2, 5}), 3) == Rational(1));
  CHECK(seq_norm(seq(11, {1, 4, 8, 9}), 1) == Rational(2));
  CHECK(norm_numerator(seq(11, {1, 4, 8, 9}), 3) == 11);
}

TEST_CASE("minimality") {
  CHECK(is_minimal_zero_sum(seq(10, {5, 5})));
  CHECK_FALSE(is_minimal_zero_sum(seq(10, {2, 8, 5, 5})));
  CHECK(is_minimal_zero_sum(seq(7, {1, 1, 5})));
  CHECK_FALSE(is_minimal_zero_sum(seq(7, {1, 1, 1})));
  std::vector<i64> too_long(25, 1);
  CHECK_THROWS_AS(is_minimal_zero_sum(too_long, 30), LengthTooLarge);
}

TEST_CASE("minimality agrees with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const i64 n = std::uniform_int_distribution<i64>(2, 40)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
    std::vector<i64> xs(k);
    for (auto& x : xs) x = std::uniform_int_distribution<i64>(1, n - 1)(rng);
    // bias toward zero-sum inputs
    if (trial % 2 == 0) xs.back() = oracle::rep(-std::accumulate(xs.begin(), xs.end() - 1, i64{0}), n);
    if (xs.back() == n) continue;
    std::sort(xs.begin(), xs.end());
    CHECK(is_minimal_zero_sum(xs, n) == oracle::minimal(xs, n));
  }
}

TEST_CASE("index") {
  const auto r = index_of(seq(7, {1, 6}));
  CHECK(r.value() == Rational(1));
  CHECK(r.witness_t == 1);

  const auto s = index_of(seq(11, {1, 4, 8, 9}));
  CHECK(s.value() == Rational(1));
  CHECK(s.witness_t == 3);
  CHECK(s.is_integer());

  const auto half = index_of(seq(10, {1, 2}));
  CHECK_FALSE(half.is_integer());
  CHECK(half.value() == Rational(3, 10));
}

TEST_CASE("smallest gcd(n,6) != 1 quad of index >= 2 matches brute force") {
  // First n at which some minimal zero-sum quad has index >= 2.
  i64 found_n = 0;
  std::vector<i64> found;
  for (i64 n = 2; n <= 30 && found_n == 0; ++n) {
    for (const auto& s : oracle::quad_orbits(n)) {
      if (oracle::index(s, n).first >= 2 * n) {
        found_n = n;
        found = s;
        break;
      }
    }
  }
  REQUIRE(found_n != 0);
  CHECK(std::gcd(found_n, i64{6}) != 1);
  const auto r = index_of(seq(found_n, found));
  CHECK(r.value() >= Rational(2));
  CHECK(r.value_numerator == oracle::index(found, found_n).first);
}

TEST_CASE("scaling by a prime divisor") {
  CHECK(scale_seq(seq(15, {1, 2, 3, 9}), 3) == std::vector<i64>{3, 6, 9, 12});
  CHECK(scale_seq(seq(15, {1, 2, 3, 9}), 5) == std::vector<i64>{5, 10, 15, 15});
  CHECK(scale_seq(seq(25, {5, 5, 5, 10}), 5) == std::vector<i64>{25, 25, 25, 25});
  CHECK_THROWS_AS(scale_seq(seq(15, {1, 2, 3, 9}), 7), NotAPrimeDivisor);
  CHECK_THROWS_AS(scale_seq(seq(12, {1, 11}), 4), NotAPrimeDivisor);
}

TEST_CASE("reducedness") {
  CHECK_FALSE(is_reduced(seq(15, {1, 1, 13})));
  CHECK(is_reduced(seq(15, {1, 2, 3, 9})));
  CHECK(is_reduced(seq(25, {5, 5, 5, 10})));
  CHECK_THROWS_AS(is_reduced(seq(15, {1, 2})), NotMinimal);
  for (i64 n : {30, 35, 45}) {
    for (const auto& s : oracle::quad_orbits(n)) CHECK(is_reduced(seq(n, s)) == oracle::reduced(s, n));
  }
}

TEST_CASE("canonical representative") {
  // 6 = inv(2) sends [2,8,5,7] to [1,4,8,9]; t = 7 reaches the smaller [1,2,3,5].
  CHECK(vec(seq(11, {2, 8, 5, 7}).scaled(6)) == std::vector<i64>{1, 4, 8, 9});
  CHECK(vec(canonical_rep(seq(11, {2, 8, 5, 7}))) == std::vector<i64>{1, 2, 3, 5});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const i64 n = std::uniform_int_distribution<i64>(2, 120)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<i64> xs(k);
    for (auto& x : xs) x = std::uniform_int_distribution<i64>(1, n - 1)(rng);
    const auto s = seq(n, xs);
    const auto c = canonical_rep(s);
    CHECK(vec(c) == oracle::canonical(xs, n));
    CHECK(vec(canonical_rep(c)) == vec(c));
    CHECK(is_canonical(c));
    CHECK(is_canonical(s) == (vec(s) == vec(c)));
  }
}

TEST_CASE("orbit size") {
  // Orbits of the minimal quads at n = 25 partition the minimal quads.
  const i64 n = 25;
  const Modulus m(n);
  i64 total = 0;
  for (const auto& s : oracle::quad_orbits(n)) total += orbit_size(GroupSequence(m, s));
  i64 direct = 0;
  for (i64 a = 1; a < n; ++a)
    for (i64 b = a; b < n; ++b)
      for (i64 c = b; c < n; ++c)
        for (i64 d = c; d < n; ++d)
          if (oracle::minimal({a, b, c, d}, n)) ++direct;
  CHECK(total == direct);
}
