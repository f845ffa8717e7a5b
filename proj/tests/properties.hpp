#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
};

Outcome orbit_invariance(long cases, std::uint64_t seed);
Outcome integrality_iff_zero_sum(long cases, std::uint64_t seed);
Outcome enumeration_vs_naive(std::int64_t n_max);
Outcome interval_endpoints(long cases, std::uint64_t seed);

std::vector<Outcome> run_all();

}  // namespace props
