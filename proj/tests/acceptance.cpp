// Acceptance runner: executes the nine release criteria in order and prints
// one PASS/FAIL line per criterion with its detail and wall time; exits
// nonzero when any criterion fails.

#include <cmath>
#include <cstdio>

#include "verify.hpp"

int main() {
  const auto results = bunblocks::verify::run_all();
  size_t passed = 0;
  for (const auto& r : results) {
    passed += r.pass ? 1 : 0;
    std::printf("%s [%d] %s (%s, %lld ms)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.description.c_str(), r.detail.c_str(),
                static_cast<long long>(std::llround(r.seconds * 1000.0)));
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", passed, results.size());
  return passed == results.size() ? 0 : 1;
}
