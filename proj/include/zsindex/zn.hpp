#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <vector>

#include "zsindex/errors.hpp"

namespace zsindex {

using i64 = std::int64_t;

/// Largest supported group order. Products t*x of two residues stay far
/// below the 64-bit limit.
inline constexpr i64 kMaxModulus = i64{1} << 31;

struct PrimePower {
  i64 prime = 0;
  int multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// The order n of a cyclic group Z_n together with its factorization and a
/// precomputed table of units. Immutable; copies share the same tables.
class Modulus {
 public:
  /// Factorizes n by trial division. Throws InvalidModulus for n < 2 or
  /// n > kMaxModulus.
  explicit Modulus(i64 n);

  i64 n() const { return data_->n; }
  std::span<const PrimePower> factors() const { return data_->factors; }
  bool coprime_to_6() const { return data_->coprime_to_6; }

  /// Distinct primes dividing n, ascending.
  std::vector<i64> primes() const;
  /// All positive divisors of n, ascending (including 1 and n).
  std::vector<i64> divisors() const;
  bool is_squarefree() const;

  /// The phi(n) units of Z_n in increasing order.
  std::span<const i64> units() const { return data_->units; }
  i64 totient() const { return static_cast<i64>(data_->units.size()); }

  /// O(1) coprimality test; x may be any integer.
  bool is_unit(i64 x) const {
    const i64 r = x % data_->n;
    return data_->unit_table[static_cast<std::size_t>(r < 0 ? r + data_->n : r)] != 0;
  }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.n() == b.n(); }

 private:
  struct Data {
    i64 n = 0;
    std::vector<PrimePower> factors;
    bool coprime_to_6 = false;
    std::vector<i64> units;
    std::vector<std::uint8_t> unit_table;
  };
  std::shared_ptr<const Data> data_;
};

/// Same as constructing a Modulus; named after the operation it performs.
Modulus factorize(i64 n);

/// The representative of x modulo n in [1, n]. Multiples of n map to n.
constexpr i64 residue_rep(i64 x, i64 n) {
  i64 r = x % n;
  if (r <= 0) r += n;
  return r;
}

/// The representative of x modulo n in [0, n).
constexpr i64 mod_floor(i64 x, i64 n) {
  const i64 r = x % n;
  return r < 0 ? r + n : r;
}

/// Inverse of t modulo n (n >= 2) in [1, n-1]. Throws NotAUnit when
/// gcd(t, n) > 1.
i64 inv_mod(i64 t, i64 n);

/// Euler's phi computed from a factorization.
i64 totient(std::span<const PrimePower> factors);

/// floor(p / q) and ceil(p / q) for q > 0.
constexpr i64 floor_div(i64 p, i64 q) {
  i64 d = p / q;
  if ((p % q != 0) && (p < 0)) --d;
  return d;
}
constexpr i64 ceil_div(i64 p, i64 q) {
  i64 d = p / q;
  if ((p % q != 0) && (p > 0)) ++d;
  return d;
}

}  // namespace zsindex
