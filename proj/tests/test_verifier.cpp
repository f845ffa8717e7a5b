#include "doctest.h"
#include "oracle.hpp"
#include "zsindex/errors.hpp"
#include "zsindex/verifier.hpp"

using namespace zsindex;

namespace {
std::set<std::vector<i64>> as_set(const SequenceList& l) {
  std::set<std::vector<i64>> out;
  for (std::size_t i = 0; i < l.size(); ++i) out.insert(std::vector<i64>(l[i].begin(), l[i].end()));
  return out;
}
}  // namespace

TEST_CASE("enumeration matches the full scan for n <= 40") {
  for (i64 n = 2; n <= 40; ++n) {
    const Modulus m(n);
    const auto fast = enumerate_minimal_classes(m, 4);
    CHECK(fast.size() == as_set(fast).size());
    CHECK(as_set(fast) == oracle::quad_orbits(n));
    CHECK(as_set(enumerate_minimal_classes_naive(m)) == as_set(fast));
  }
}

TEST_CASE("enumeration matches the library's brute-force scan at larger n") {
  for (i64 n : {97, 105, 121, 143, 210}) {
    const Modulus m(n);
    CHECK(as_set(enumerate_minimal_classes_naive(m)) == as_set(enumerate_minimal_classes(m, 4)));
  }
}

TEST_CASE("enumeration of other lengths") {
  for (i64 n = 2; n <= 16; ++n) {
    const Modulus m(n);
    for (std::size_t k = 2; k <= 6; ++k) {
      std::set<std::vector<i64>> want;
      std::vector<i64> xs(k, 1);
      // All sorted k-tuples over [1, n-1].
      std::function<void(std::size_t, i64)> rec = [&](std::size_t i, i64 lo) {
        if (i == k) {
          if (oracle::minimal(xs, n)) want.insert(oracle::canonical(xs, n));
          return;
        }
        for (i64 x = lo; x < n; ++x) {
          xs[i] = x;
          rec(i + 1, x);
        }
      };
      rec(0, 1);
      CHECK(as_set(enumerate_minimal_classes(m, k)) == want);
    }
  }
}

TEST_CASE("units-only enumeration") {
  const Modulus m(105);
  std::set<std::vector<i64>> want;
  for (const auto& s : as_set(enumerate_minimal_classes(m, 4))) {
    if (s[0] == 1) want.insert(s);
  }
  CHECK(as_set(enumerate_minimal_classes(m, 4, true)) == want);
}

TEST_CASE("worker count does not change results") {
  const Modulus m(143);
  CHECK(as_set(enumerate_minimal_classes(m, 4, false, 1)) == as_set(enumerate_minimal_classes(m, 4, false, 3)));
  const auto a = verify_conjecture(210, 1);
  const auto b = verify_conjecture(210, 4);
  CHECK(a.class_count == b.class_count);
  CHECK(a.max_index == b.max_index);
  CHECK(a.counterexample_count == b.counterexample_count);
  REQUIRE(a.counterexamples.size() == b.counterexamples.size());
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    CHECK(a.counterexamples[i].sequence == b.counterexamples[i].sequence);
  }
}

TEST_CASE("verify") {
  const auto r25 = verify_conjecture(25);
  CHECK(r25.max_index == 1);
  CHECK(r25.class_count == static_cast<i64>(oracle::quad_orbits(25).size()));
  CHECK(verify_conjecture(385).max_index == 1);

  const auto r12 = verify_conjecture(12);
  CHECK(r12.max_index >= 2);
  CHECK_FALSE(r12.counterexamples.empty());
  for (const auto& ce : r12.counterexamples) {
    CHECK(reverify(ce));
    CHECK(oracle::index(ce.sequence, 12).first == ce.index_numerator);
  }
}

TEST_CASE("delegation to the quotient") {
  for (i64 n = 2; n <= 200; ++n) CHECK(verify_conjecture(n).delegation_mismatches == 0);
}

TEST_CASE("reverify rejects a tampered record") {
  Counterexample ce{11, {1, 4, 8, 9}, 22, 1, "tampered"};
  CHECK_FALSE(reverify(ce));
  ce.index_numerator = 11;
  ce.witness_t = 3;
  CHECK(reverify(ce));
}

TEST_CASE("search") {
  SearchOptions opt;
  opt.n_min = 2;
  opt.n_max = 100;
  opt.k = 3;
  CHECK(search_high_index(opt).empty());

  opt.n_max = 50;
  opt.k = 5;
  CHECK_FALSE(search_high_index(opt).empty());

  opt.k = 4;
  opt.coprime_to_6 = 1;
  CHECK(search_high_index(opt).empty());

  opt.k = 9;
  CHECK_THROWS_AS(search_high_index(opt), PreconditionViolated);
}

TEST_CASE("sampled sequences are minimal") {
  const Modulus m(31);
  const auto samples = sample_minimal_sequences(m, 17, 200, 5);
  CHECK_FALSE(samples.empty());
  for (const auto& s : samples) CHECK(oracle::minimal(s, 31));
}

TEST_CASE("validators") {
  const auto t = validate_theorem21(385);
  CHECK(t.anomalies.empty());
  CHECK_FALSE(t.vacuous);
  CHECK_THROWS_AS(validate_theorem21(105 * 4), PreconditionViolated);

  const auto l = validate_lemmas(143);
  CHECK(l.quads > 0);
  for (const auto& [id, tally] : l.tallies) {
    if (id != LemmaId::L34) CHECK(tally.exceptions == 0);
  }
}
