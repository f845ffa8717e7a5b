#include "zsindex/classify.hpp"

#include <algorithm>
#include <string>

namespace zsindex {
namespace {

std::vector<i64> sorted_copy(std::vector<i64> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Prime-role assignments (p1, p2, p3) in lexicographic order of positions.
std::vector<std::array<i64, 3>> role_assignments(const std::vector<i64>& primes) {
  std::array<i64, 3> roles{primes[0], primes[1], primes[2]};
  std::vector<std::array<i64, 3>> out;
  do {
    out.push_back(roles);
  } while (std::next_permutation(roles.begin(), roles.end()));
  return out;
}

bool a3_refinement(const NormalizedQuad& q, const std::array<i64, 3>& r) {
  const i64 n = q.n;
  return std::gcd(q.c + 1, n) == r[0] * r[1] && std::gcd(q.b - 1, n) == r[0] * r[2] &&
         std::gcd(q.a - 1, n) == r[1] * r[2];
}

}  // namespace

GcdProfile gcd_profile(const GroupSequence& seq) {
  const i64 n = seq.n();
  const auto primes = seq.modulus().primes();
  GcdProfile prof;
  prof.global_gcd = n;
  for (i64 x : seq.elems()) {
    const i64 g = std::gcd(x, n);
    prof.gcds.push_back(g);
    std::vector<i64> active;
    for (i64 p : primes) {
      if (g % p == 0) active.push_back(p);
    }
    prof.active_primes.push_back(std::move(active));
    prof.global_gcd = std::gcd(prof.global_gcd, x);
  }
  return prof;
}

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::A1: return "A1";
    case Pattern::A2: return "A2";
    case Pattern::A3: return "A3";
    case Pattern::A4: return "A4";
    case Pattern::Other: return "Other";
  }
  return "Other";
}

std::optional<Pattern> parse_pattern(std::string_view s) {
  for (Pattern p : {Pattern::A1, Pattern::A2, Pattern::A3, Pattern::A4, Pattern::Other}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

bool has_normal_shape(i64 n, i64 a, i64 b, i64 c) {
  return 1 + c == a + b && 1 <= a && a <= b && 2 * b < n && 1 < c && 2 * c < n;
}

std::vector<NormalizedQuad> normal_forms(const GroupSequence& seq) {
  if (seq.size() != 4) {
    throw PreconditionViolated("normalization needs a quad, got length " + std::to_string(seq.size()));
  }
  const i64 n = seq.n();
  const Modulus& m = seq.modulus();

  std::vector<i64> inverses;
  for (i64 x : seq.elems()) {
    if (m.is_unit(x)) inverses.push_back(inv_mod(x, n));
  }
  if (inverses.empty()) throw NoCoprimeElement("no element of the quad is a unit mod " + std::to_string(n));

  std::vector<NormalizedQuad> forms;
  std::vector<i64> image(4);
  for (bool reflect : {false, true}) {
    // t * S contains 1 iff t = x^{-1}; t * (-S) contains 1 iff t = -x^{-1}.
    std::vector<i64> candidates;
    for (i64 inv : inverses) candidates.push_back(reflect ? n - inv : inv);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (i64 t : candidates) {
      for (std::size_t i = 0; i < 4; ++i) {
        const i64 y = (t * seq.elems()[i]) % n;
        image[i] = reflect ? n - y : y;
      }
      std::sort(image.begin(), image.end());
      if (image[0] != 1) continue;
      const i64 c = image[1], b = n - image[2], a = n - image[3];
      if (!has_normal_shape(n, a, b, c)) continue;
      const bool seen = std::any_of(forms.begin(), forms.end(), [&](const NormalizedQuad& f) {
        return f.a == a && f.b == b && f.c == c;
      });
      if (!seen) forms.push_back({n, a, b, c, t, reflect});
    }
  }
  return forms;
}

std::optional<NormalizedQuad> normalize_quad(const GroupSequence& seq) {
  auto forms = normal_forms(seq);
  if (forms.empty()) return std::nullopt;
  return forms.front();
}

GroupSequence denormalize(const NormalizedQuad& q, const Modulus& m) {
  if (m.n() != q.n) throw InvariantViolated("modulus mismatch");
  if (!has_normal_shape(q.n, q.a, q.b, q.c)) {
    throw InvariantViolated("(n,a,b,c) = (" + std::to_string(q.n) + "," + std::to_string(q.a) + "," +
                            std::to_string(q.b) + "," + std::to_string(q.c) + ") is not a normal form");
  }
  GroupSequence seq(m, {1, q.c, q.n - q.b, q.n - q.a});
  if (!is_minimal_zero_sum(seq)) {
    throw InvariantViolated("denormalized quad is not a minimal zero-sum sequence");
  }
  return seq;
}

GroupSequence denormalize(const NormalizedQuad& q) { return denormalize(q, Modulus(q.n)); }

PatternClass classify_pattern(const GroupSequence& seq) {
  if (seq.size() != 4) {
    throw PreconditionViolated("classification needs a quad, got length " + std::to_string(seq.size()));
  }
  const GcdProfile prof = gcd_profile(seq);
  if (prof.global_gcd != 1) {
    throw PreconditionViolated("global gcd is " + std::to_string(prof.global_gcd));
  }
  const Modulus& m = seq.modulus();
  if (!is_three_prime_squarefree(m)) return {};

  const auto gcds = sorted_copy(prof.gcds);
  const auto roles = role_assignments(m.primes());

  for (const auto& r : roles) {
    const i64 p1 = r[0], p2 = r[1], p3 = r[2];
    if (gcds == sorted_copy({p1 * p2, p2, p1 * p3, p3})) return {Pattern::A1, r};
  }
  for (const auto& r : roles) {
    if (gcds == sorted_copy({1, r[0], r[1], r[0] * r[1]})) return {Pattern::A2, r};
  }
  if (gcds == std::vector<i64>{1, 1, 1, 1}) {
    for (const auto& q : normal_forms(seq)) {
      for (const auto& r : roles) {
        if (a3_refinement(q, r)) return {Pattern::A3, r};
      }
    }
    return {};
  }
  for (const auto& r : roles) {
    if (gcds == sorted_copy({1, r[0] * r[1], r[0] * r[2], r[1] * r[2]})) return {Pattern::A4, r};
  }
  return {};
}

bool is_three_prime_squarefree(const Modulus& m) { return m.factors().size() == 3 && m.is_squarefree(); }

PatternClass classify_normalized(const NormalizedQuad& q, const Modulus& m) {
  if (m.n() != q.n) throw InvariantViolated("modulus mismatch");
  if (!is_three_prime_squarefree(m)) return {};
  const i64 n = q.n;
  const auto roles = role_assignments(m.primes());
  const auto gcds = sorted_copy({std::gcd(q.c, n), std::gcd(q.b, n), std::gcd(q.a, n)});
  for (const auto& r : roles) {
    if (gcds == sorted_copy({r[0], r[1], r[0] * r[1]})) return {Pattern::A2, r};
  }
  for (const auto& r : roles) {
    if (a3_refinement(q, r)) return {Pattern::A3, r};
  }
  for (const auto& r : roles) {
    if (std::gcd(q.c, n) == r[0] * r[1] && std::gcd(q.b, n) == r[0] * r[2] && std::gcd(q.a, n) == r[1] * r[2]) {
      return {Pattern::A4, r};
    }
  }
  return {};
}

}  // namespace zsindex
