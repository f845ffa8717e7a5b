#pragma once

#include <boost/rational.hpp>
#include <span>
#include <vector>

#include "zsindex/zn.hpp"

namespace zsindex {

using Rational = boost::rational<i64>;

/// Subset enumeration guard for minimality tests.
inline constexpr std::size_t kMaxSubsetLength = 24;

/// A sequence S = (x_1 g)...(x_k g) over Z_n for a fixed generator g, stored
/// as the sorted multiset of coefficients x_i in [1, n-1].
class GroupSequence {
 public:
  /// Validates and sorts. Throws InvalidSequence for an empty sequence or an
  /// element outside [1, n-1].
  GroupSequence(Modulus modulus, std::vector<i64> elems);

  const Modulus& modulus() const { return modulus_; }
  i64 n() const { return modulus_.n(); }
  std::span<const i64> elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  /// t * S. Throws NotAUnit when t is not a unit.
  GroupSequence scaled(i64 t) const;
  /// -S, i.e. x -> n - x elementwise.
  GroupSequence negated() const;

  friend bool operator==(const GroupSequence& a, const GroupSequence& b) {
    return a.n() == b.n() && a.elems_ == b.elems_;
  }
  friend bool operator<(const GroupSequence& a, const GroupSequence& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.elems_ < b.elems_;
  }

 private:
  Modulus modulus_;
  std::vector<i64> elems_;
};

/// ind(S) as an exact rational value_numerator / n, with the smallest unit
/// attaining it.
struct IndexResult {
  i64 value_numerator = 0;
  i64 modulus_n = 0;
  i64 witness_t = 0;

  bool is_integer() const { return value_numerator % modulus_n == 0; }
  Rational value() const { return Rational(value_numerator, modulus_n); }
};

/// sum_i |t x_i|_n, the numerator of ||S||_g for the generator t^{-1} g.
i64 norm_numerator(const GroupSequence& seq, i64 t);

/// ||S|| under the unit multiplier t, as an exact rational over n.
Rational seq_norm(const GroupSequence& seq, i64 t);

bool is_zero_sum(const GroupSequence& seq);
bool is_minimal_zero_sum(const GroupSequence& seq);

/// Minimality for a raw multiset with entries in [1, n], where n stands for
/// the identity. Any multiset containing the identity is reported non-minimal.
bool is_minimal_zero_sum(std::span<const i64> elems, i64 n);

/// True when no nonempty sub-multiset of elems (entries in [1, n-1]) sums to
/// 0 mod n.
bool is_zero_sum_free(std::span<const i64> elems, i64 n);

/// Exact minimum of seq_norm over all units. For zero-sum input the scan
/// stops at the first multiplier reaching n, which no multiplier can beat.
IndexResult index_of(const GroupSequence& seq);

/// { |p x_i|_n }, sorted; may contain n (the identity). Throws
/// NotAPrimeDivisor unless p is a prime factor of n.
std::vector<i64> scale_seq(const GroupSequence& seq, i64 p);

/// Throws NotMinimal unless seq is a minimal zero-sum sequence.
bool is_reduced(const GroupSequence& seq);

/// Lexicographically smallest sorted t * S over all units t.
GroupSequence canonical_rep(const GroupSequence& seq);

/// canonical_rep(seq) == seq, checked without scanning the whole orbit: the
/// canonical representative starts with min_i gcd(x_i, n), which restricts
/// the multipliers worth trying to the few that move an element onto it.
bool is_canonical(const GroupSequence& seq);

/// Size of the unit orbit of seq.
i64 orbit_size(const GroupSequence& seq);

// Allocation-light variants over sorted spans, used by the enumeration hot
// loops. Elements must already lie in [1, n-1].
namespace raw {
IndexResult index_of(std::span<const i64> elems, const Modulus& m);
bool is_canonical(std::span<const i64> sorted, const Modulus& m);
}  // namespace raw

}  // namespace zsindex
