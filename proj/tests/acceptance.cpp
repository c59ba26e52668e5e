// Prints one PASS or FAIL line per acceptance criterion; exits non-zero when
// any criterion fails.

#include <iostream>

#include "support/criteria.hpp"
#include "support/random_models.hpp"

int main() {
  std::cout << "seed " << spine::testing::suite_seed() << "\n";
  int failed = 0;
  for (const auto& c : spine::testing::all_criteria()) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    if (!c.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
