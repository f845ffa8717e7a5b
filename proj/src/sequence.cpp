#include "zsindex/sequence.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace zsindex {
namespace {

std::string describe(std::span<const i64> elems) {
  std::string s = "[";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems[i]);
  }
  return s + "]";
}

// Writes sorted(t * elems mod n) into out, entries in [1, n-1] for a unit t.
void scaled_sorted(std::span<const i64> elems, i64 t, i64 n, std::vector<i64>& out) {
  out.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) out[i] = (t * elems[i]) % n;
  std::sort(out.begin(), out.end());
}

}  // namespace

GroupSequence::GroupSequence(Modulus modulus, std::vector<i64> elems)
    : modulus_(std::move(modulus)), elems_(std::move(elems)) {
  if (elems_.empty()) throw InvalidSequence("empty sequence");
  for (i64 x : elems_) {
    if (x < 1 || x >= modulus_.n()) {
      throw InvalidSequence("element " + std::to_string(x) + " outside [1, " +
                            std::to_string(modulus_.n() - 1) + "]");
    }
  }
  std::sort(elems_.begin(), elems_.end());
}

GroupSequence GroupSequence::scaled(i64 t) const {
  if (!modulus_.is_unit(t)) {
    throw NotAUnit(std::to_string(t) + " mod " + std::to_string(n()));
  }
  std::vector<i64> out;
  scaled_sorted(elems_, mod_floor(t, n()), n(), out);
  return GroupSequence(modulus_, std::move(out));
}

GroupSequence GroupSequence::negated() const {
  std::vector<i64> out(elems_.size());
  std::transform(elems_.begin(), elems_.end(), out.begin(), [&](i64 x) { return n() - x; });
  return GroupSequence(modulus_, std::move(out));
}

i64 norm_numerator(const GroupSequence& seq, i64 t) {
  if (!seq.modulus().is_unit(t)) {
    throw NotAUnit(std::to_string(t) + " mod " + std::to_string(seq.n()));
  }
  const i64 n = seq.n();
  const i64 tt = mod_floor(t, n);
  i64 sum = 0;
  for (i64 x : seq.elems()) sum += residue_rep(tt * x, n);
  return sum;
}

Rational seq_norm(const GroupSequence& seq, i64 t) {
  return Rational(norm_numerator(seq, t), seq.n());
}

bool is_zero_sum(const GroupSequence& seq) {
  i64 sum = 0;
  for (i64 x : seq.elems()) sum = (sum + x) % seq.n();
  return sum == 0;
}

bool is_zero_sum_free(std::span<const i64> elems, i64 n) {
  if (elems.size() > kMaxSubsetLength) {
    throw LengthTooLarge(std::to_string(elems.size()) + " elements");
  }
  const std::size_t k = elems.size();
  if (k > 12) {
    // Reachable nonempty subset sums mod n.
    std::vector<char> reach(static_cast<std::size_t>(n), 0), next;
    for (i64 x : elems) {
      next = reach;
      next[static_cast<std::size_t>(x % n)] = 1;
      for (i64 r = 0; r < n; ++r) {
        if (reach[static_cast<std::size_t>(r)]) next[static_cast<std::size_t>((r + x) % n)] = 1;
      }
      if (next[0]) return false;
      reach.swap(next);
    }
    return true;
  }
  // Gray-code walk: each step toggles one element in or out of the subset.
  const std::uint32_t total = std::uint32_t{1} << k;
  std::uint32_t gray = 0;
  i64 sum = 0;
  for (std::uint32_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    const std::uint32_t mask = std::uint32_t{1} << bit;
    if (gray & mask) {
      sum -= elems[bit];
      if (sum < 0) sum += n;
    } else {
      sum += elems[bit];
      if (sum >= n) sum -= n;
    }
    gray ^= mask;
    if (sum == 0) return false;
  }
  return true;
}

bool is_minimal_zero_sum(std::span<const i64> elems, i64 n) {
  if (elems.empty()) return false;
  if (elems.size() > kMaxSubsetLength) {
    throw LengthTooLarge(std::to_string(elems.size()) + " elements");
  }
  i64 sum = 0;
  for (i64 x : elems) {
    if (x < 1 || x > n) throw InvalidSequence("element " + std::to_string(x) + " outside [1, n]");
    if (x == n) return false;
    sum = (sum + x) % n;
  }
  if (sum != 0) return false;
  // With the total at zero, a proper zero-sum subset exists iff one avoids
  // the last element (take complements otherwise).
  return is_zero_sum_free(elems.first(elems.size() - 1), n);
}

bool is_minimal_zero_sum(const GroupSequence& seq) {
  return is_minimal_zero_sum(seq.elems(), seq.n());
}

namespace raw {

IndexResult index_of(std::span<const i64> elems, const Modulus& m) {
  const i64 n = m.n();
  i64 total = 0;
  for (i64 x : elems) total += x;
  const bool zero_sum = total % n == 0;

  IndexResult best{0, n, 0};
  for (i64 t : m.units()) {
    i64 sum = 0;
    for (i64 x : elems) sum += residue_rep(t * x, n);
    if (best.witness_t == 0 || sum < best.value_numerator) {
      best.value_numerator = sum;
      best.witness_t = t;
      if (zero_sum && sum == n) break;
    }
  }
  return best;
}

bool is_canonical(std::span<const i64> sorted, const Modulus& m) {
  const i64 n = m.n();
  i64 g = n;
  for (i64 x : sorted) g = std::min(g, std::gcd(x, n));
  if (sorted.front() != g) return false;

  const i64 cofactor = n / g;
  std::vector<i64> image;
  i64 prev = 0;
  for (i64 x : sorted) {
    if (x == prev || std::gcd(x, n) != g) continue;
    prev = x;
    // Units t with t * x = g (mod n) are the lifts of (x/g)^{-1} mod n/g.
    const i64 t0 = inv_mod(x / g, cofactor);
    for (i64 t = t0; t < n; t += cofactor) {
      if (!m.is_unit(t)) continue;
      scaled_sorted(sorted, t, n, image);
      if (std::lexicographical_compare(image.begin(), image.end(), sorted.begin(), sorted.end())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace raw

IndexResult index_of(const GroupSequence& seq) { return raw::index_of(seq.elems(), seq.modulus()); }

std::vector<i64> scale_seq(const GroupSequence& seq, i64 p) {
  const auto primes = seq.modulus().primes();
  if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
    throw NotAPrimeDivisor(std::to_string(p) + " for n = " + std::to_string(seq.n()));
  }
  std::vector<i64> out;
  out.reserve(seq.size());
  for (i64 x : seq.elems()) out.push_back(residue_rep(p * x, seq.n()));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_reduced(const GroupSequence& seq) {
  if (!is_minimal_zero_sum(seq)) {
    throw NotMinimal(describe(seq.elems()) + " over Z_" + std::to_string(seq.n()));
  }
  for (i64 p : seq.modulus().primes()) {
    if (is_minimal_zero_sum(scale_seq(seq, p), seq.n())) return false;
  }
  return true;
}

GroupSequence canonical_rep(const GroupSequence& seq) {
  const i64 n = seq.n();
  std::vector<i64> best(seq.elems().begin(), seq.elems().end());
  std::vector<i64> image;
  for (i64 t : seq.modulus().units()) {
    scaled_sorted(seq.elems(), t, n, image);
    if (image < best) best = image;
  }
  return GroupSequence(seq.modulus(), std::move(best));
}

bool is_canonical(const GroupSequence& seq) { return raw::is_canonical(seq.elems(), seq.modulus()); }

i64 orbit_size(const GroupSequence& seq) {
  std::vector<i64> image;
  i64 stabilizer = 0;
  for (i64 t : seq.modulus().units()) {
    scaled_sorted(seq.elems(), t, seq.n(), image);
    if (std::equal(image.begin(), image.end(), seq.elems().begin(), seq.elems().end())) ++stabilizer;
  }
  return seq.modulus().totient() / stabilizer;
}

}  // namespace zsindex
