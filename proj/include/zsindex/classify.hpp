#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "zsindex/sequence.hpp"

namespace zsindex {

struct GcdProfile {
  std::vector<i64> gcds;                       // gcd(x_i, n), in element order
  std::vector<std::vector<i64>> active_primes;  // primes of n dividing x_i
  i64 global_gcd = 0;                          // gcd(x_1, ..., x_k, n)
};

GcdProfile gcd_profile(const GroupSequence& seq);

enum class Pattern { A1, A2, A3, A4, Other };

std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view s);

/// Pattern plus the prime playing each of the roles p1, p2, p3 (zeros for
/// Other).
struct PatternClass {
  Pattern pattern = Pattern::Other;
  std::array<i64, 3> roles{};
};

/// A minimal zero-sum quad written as (g)(cg)((n-b)g)((n-a)g) with
/// 1 + c = a + b. unit/reflected record how it was obtained from the input:
/// the form equals sorted(+-unit * S).
struct NormalizedQuad {
  i64 n = 0;
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;
  i64 unit = 1;
  bool reflected = false;
};

/// Shape check on (n, a, b, c) alone: 1 + c = a + b, 1 <= a <= b < n/2 and
/// 1 < c < n/2.
bool has_normal_shape(i64 n, i64 a, i64 b, i64 c);

/// First normal form of a length-4 minimal zero-sum sequence, trying
/// un-reflected multipliers in increasing order before reflected ones.
/// Throws NoCoprimeElement when no x_i is a unit.
std::optional<NormalizedQuad> normalize_quad(const GroupSequence& seq);

/// Every distinct normal form of seq, in the same search order.
std::vector<NormalizedQuad> normal_forms(const GroupSequence& seq);

/// [1, c, n-b, n-a]. Throws InvariantViolated when q breaks its shape or the
/// result is not a minimal zero-sum sequence.
GroupSequence denormalize(const NormalizedQuad& q, const Modulus& m);
GroupSequence denormalize(const NormalizedQuad& q);

/// Matches the gcd pattern of a minimal zero-sum quad against A1-A4.
/// Returns Other unless n is a product of three distinct primes. Throws
/// PreconditionViolated when the global gcd exceeds 1 or the length is not 4.
PatternClass classify_pattern(const GroupSequence& seq);

/// A2/A3/A4 judged on the (a, b, c) of this particular normal form: the
/// gcd conditions of A2/A4 on (c, b, a), and for A3 gcd(c+1, n) = p1p2,
/// gcd(b-1, n) = p1p3, gcd(a-1, n) = p2p3.
PatternClass classify_normalized(const NormalizedQuad& q, const Modulus& m);

/// n = p1 p2 p3 with distinct primes.
bool is_three_prime_squarefree(const Modulus& m);

}  // namespace zsindex
