#include <vector>

#include "doctest.h"

#include "bwb.hpp"
#include "error.hpp"
#include "test_util.hpp"

using namespace bunblocks;
using bwb::CohomologyAnswer;
using bwb::TwistFlag;

namespace {

CohomologyAnswer concentrated(long long degree, Int dim) { return {false, degree, dim}; }

CohomologyAnswer vanishes() { return {}; }

} // namespace

TEST_CASE("cohomology fixtures") {
  std::vector<long long> none;
  CHECK(bwb::cohomology(0, 2, none, {0}) == concentrated(0, 1));
  CHECK(bwb::cohomology(0, 2, none, {1}) == concentrated(0, 1)); // twist inert at level 0
  std::vector<long long> two{2};
  CHECK(bwb::cohomology(0, 2, two, {0}) == concentrated(1, 1));
  std::vector<long long> one_ins{2};
  CHECK(bwb::cohomology(-1, 3, one_ins, {1}) == vanishes());
  CHECK(bwb::cohomology(-3, 5, none, {0}) == vanishes());
  std::vector<long long> pair{1, 1};
  CHECK(bwb::cohomology(2, 2, pair, {0}) == concentrated(0, 16));
  std::vector<long long> singular_ins{3};
  CHECK(bwb::cohomology(2, 1, singular_ins, {0}) == vanishes());
}

TEST_CASE("level zero: odd weights vanish, even weights concentrate at half the total") {
  for (long long a = 0; a <= 10; ++a)
    for (long long b = a; b <= 10; ++b)
      for (long long c = b; c <= 10; ++c) {
        std::vector<long long> ins{a, b, c};
        auto ans = bwb::cohomology(0, 3, ins, {0});
        if (a % 2 || b % 2 || c % 2) {
          CHECK(ans == vanishes());
        } else {
          CHECK(ans == concentrated((a + b + c) / 2, 1));
        }
      }
}

TEST_CASE("refused ranges") {
  std::vector<long long> none;
  CHECK(testutil::throws_code(errc::unsupported, [&] { bwb::cohomology(-4, 2, none, {0}); }));
  CHECK(testutil::throws_code(errc::unsupported, [&] { bwb::cohomology(-9, 2, none, {1}); }));
  CHECK(testutil::throws_code(errc::unsupported, [&] { bwb::cohomology(1, 2, none, {1}); }));
}

TEST_CASE("cohomology validation") {
  std::vector<long long> none;
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { bwb::cohomology(0, -1, none, {0}); }));
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { bwb::cohomology(0, 2, none, {2}); }));
  std::vector<long long> neg{-1};
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { bwb::cohomology(0, 2, neg, {0}); }));
}

TEST_CASE("parity obstruction") {
  CHECK(bwb::hom_parity_obstruction(2, 1));
  CHECK(bwb::hom_parity_obstruction(1, 4));
  CHECK_FALSE(bwb::hom_parity_obstruction(3, 1));
  CHECK_FALSE(bwb::hom_parity_obstruction(0, 0));
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [] { bwb::hom_parity_obstruction(-1, 0); }));
}

TEST_CASE("amplitude fixtures and the enumerated bound") {
  auto a31 = bwb::hom_amplitude(3, 1);
  CHECK(a31.lo == 0);
  CHECK(a31.hi == 2);
  CHECK(a31.enumerated_max == 2);
  auto a20 = bwb::hom_amplitude(2, 0);
  CHECK(a20.hi == 1);
  CHECK(a20.enumerated_max == 1);
  auto a51 = bwb::hom_amplitude(5, 1);
  CHECK(a51.hi == 3);
  CHECK(a51.enumerated_max == 3);
  auto a22 = bwb::hom_amplitude(2, 2);
  CHECK(a22.hi == 2);
  CHECK(a22.enumerated_max == 2);
  // The enumeration saturates the bound for every small equal-parity pair.
  for (long long m = 0; m <= 8; ++m)
    for (long long n = m % 2; m + n <= 8; n += 2) {
      auto a = bwb::hom_amplitude(m, n);
      CHECK(a.lo == 0);
      CHECK(a.hi == (m + n) / 2);
      CHECK(a.enumerated_max == a.hi);
    }
  CHECK(testutil::throws_code(errc::invalid_argument, [] { bwb::hom_amplitude(2, 1); }));
}

TEST_CASE("semiorthogonality certificates") {
  auto c31 = bwb::semiorthogonality_certificate(3, 1);
  CHECK(c31.amplitude_length_after_degree0 == 1);
  CHECK(c31.diagonal_codim == 3);
  CHECK(c31.pass);
  auto c20 = bwb::semiorthogonality_certificate(2, 0);
  CHECK(c20.amplitude_length_after_degree0 == 0);
  CHECK(c20.diagonal_codim == 1);
  CHECK(c20.pass);
  auto c51 = bwb::semiorthogonality_certificate(5, 1);
  CHECK(c51.amplitude_length_after_degree0 == 2);
  CHECK(c51.diagonal_codim == 5);
  CHECK(c51.pass);
  for (long long m = 1; m <= 12; ++m)
    for (long long n = m % 2; n < m; n += 2)
      CHECK(bwb::semiorthogonality_certificate(m, n).pass);
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [] { bwb::semiorthogonality_certificate(1, 3); }));
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [] { bwb::semiorthogonality_certificate(2, 1); }));
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [] { bwb::semiorthogonality_certificate(0, 0); }));
}
