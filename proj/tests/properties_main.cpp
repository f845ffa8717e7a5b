#include <iostream>

#include "properties.hpp"

int main() {
  bool ok = true;
  for (const auto& o : props::run_all()) {
    std::cout << (o.failures == 0 ? "PASS" : "FAIL") << "  " << o.name << ": " << o.cases << " cases, " << o.failures
              << " failures";
    if (o.failures) std::cout << " (first: " << o.first_failure << ")";
    std::cout << "\n";
    ok = ok && o.failures == 0;
  }
  return ok ? 0 : 1;
}
