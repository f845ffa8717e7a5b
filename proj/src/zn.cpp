#include "zsindex/zn.hpp"

#include <algorithm>
#include <string>

namespace zsindex {
namespace {

// Primes up to sqrt(kMaxModulus); enough to factor every supported n.
const std::vector<i64>& small_primes() {
  static const std::vector<i64> primes = [] {
    constexpr i64 kLimit = 46341;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<i64> out;
    for (i64 p = 2; p <= kLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (i64 q = p * p; q <= kLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

std::vector<PrimePower> trial_divide(i64 n) {
  std::vector<PrimePower> factors;
  for (i64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    factors.push_back({p, mult});
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

}  // namespace

Modulus::Modulus(i64 n) {
  if (n < 2 || n > kMaxModulus) {
    throw InvalidModulus("n = " + std::to_string(n) + " is outside [2, 2^31]");
  }
  auto data = std::make_shared<Data>();
  data->n = n;
  data->factors = trial_divide(n);
  data->coprime_to_6 = (n % 2 != 0) && (n % 3 != 0);

  // Sieve the non-units by striking multiples of each prime factor.
  data->unit_table.assign(static_cast<std::size_t>(n), 1);
  data->unit_table[0] = 0;
  for (const auto& f : data->factors) {
    for (i64 x = f.prime; x < n; x += f.prime) data->unit_table[x] = 0;
  }
  data->units.reserve(static_cast<std::size_t>(zsindex::totient(data->factors)));
  for (i64 x = 1; x < n; ++x) {
    if (data->unit_table[x]) data->units.push_back(x);
  }
  data_ = std::move(data);
}

std::vector<i64> Modulus::primes() const {
  std::vector<i64> out;
  out.reserve(data_->factors.size());
  for (const auto& f : data_->factors) out.push_back(f.prime);
  return out;
}

std::vector<i64> Modulus::divisors() const {
  std::vector<i64> divs{1};
  for (const auto& f : data_->factors) {
    const std::size_t base = divs.size();
    i64 pk = 1;
    for (int e = 1; e <= f.multiplicity; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool Modulus::is_squarefree() const {
  for (const auto& f : data_->factors) {
    if (f.multiplicity > 1) return false;
  }
  return true;
}

Modulus factorize(i64 n) { return Modulus(n); }

i64 inv_mod(i64 t, i64 n) {
  i64 r0 = n, r1 = mod_floor(t, n);
  i64 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    i64 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) {
    throw NotAUnit(std::to_string(t) + " mod " + std::to_string(n) + " (gcd " +
                   std::to_string(r0) + ")");
  }
  return mod_floor(s0, n);
}

i64 totient(std::span<const PrimePower> factors) {
  i64 phi = 1;
  for (const auto& f : factors) {
    phi *= f.prime - 1;
    for (int e = 1; e < f.multiplicity; ++e) phi *= f.prime;
  }
  return phi;
}

}  // namespace zsindex
