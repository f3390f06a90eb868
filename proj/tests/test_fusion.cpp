#include <cmath>
#include <vector>

#include "doctest.h"

#include "error.hpp"
#include "fusion.hpp"
#include "test_util.hpp"

using namespace bunblocks;
using fusion::IntMatrix;

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size();
  IntMatrix out(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        out[i][j] += a[i][k] * b[k][j];
  return out;
}

} // namespace

TEST_CASE("fusion coefficients follow the truncated ladder rule") {
  CHECK(fusion::fusion_coefficient(2, 1, 1, 2) == 1);
  CHECK(fusion::fusion_coefficient(2, 1, 1, 0) == 1);
  CHECK(fusion::fusion_coefficient(2, 1, 1, 1) == 0); // parity
  CHECK(fusion::fusion_coefficient(2, 2, 2, 2) == 0); // truncated at the level
  CHECK(fusion::fusion_coefficient(2, 2, 2, 0) == 1);
  CHECK(fusion::fusion_coefficient(3, 1, 2, 3) == 1);
  CHECK(fusion::fusion_coefficient(5, 2, 3, 1) == 1);
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [] { fusion::fusion_coefficient(2, 3, 0, 0); }));
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [] { fusion::fusion_coefficient(-1, 0, 0, 0); }));
}

TEST_CASE("level-2 fusion matrices") {
  fusion::FusionRing ring(2);
  IntMatrix n0{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  IntMatrix n1{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  IntMatrix n2{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  CHECK(ring.n_matrix(0) == n0);
  CHECK(ring.n_matrix(1) == n1);
  CHECK(ring.n_matrix(2) == n2);
  IntMatrix handle{{3, 0, 1}, {0, 4, 0}, {1, 0, 3}};
  CHECK(ring.handle_matrix() == handle);
}

TEST_CASE("the fusion ring is commutative and fully symmetric") {
  fusion::FusionRing ring(4);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      CHECK(multiply(ring.n_matrix(a), ring.n_matrix(b)) ==
            multiply(ring.n_matrix(b), ring.n_matrix(a)));
      for (int c = 0; c <= 4; ++c) {
        Int n = fusion::fusion_coefficient(4, a, b, c);
        CHECK(n == fusion::fusion_coefficient(4, b, a, c));
        CHECK(n == fusion::fusion_coefficient(4, c, b, a));
        CHECK(n == fusion::fusion_coefficient(4, a, c, b));
      }
    }
}

TEST_CASE("Verlinde dimensions: frozen values") {
  auto vd = [](int level, long long genus, std::vector<int> ins) {
    return fusion::verlinde_dim(level, genus, ins);
  };
  CHECK(vd(0, 5, {}) == 1);
  CHECK(vd(1, 2, {}) == 4);
  CHECK(vd(3, 1, {}) == 4);
  CHECK(vd(2, 2, {1, 1}) == 16);
  CHECK(vd(2, 0, {2, 2, 2}) == 0);
  CHECK(vd(4, 3, {1, 2}) == 0); // odd total parity
  CHECK(vd(3, 2, {3}) == 0);    // odd total parity
  CHECK(vd(5, 2, {2, 4}) == 140);
  CHECK(vd(8, 4, {}) == 294525);
  CHECK(vd(8, 10, {}) == Int("5916727707553125"));
  for (long long g = 0; g <= 10; ++g)
    CHECK(vd(1, g, {}) == Int(1) << g);
  for (int k = 0; k <= 20; ++k)
    CHECK(vd(k, 1, {}) == k + 1);
}

TEST_CASE("Verlinde dimension is insertion-order independent") {
  std::vector<int> fwd{1, 2, 3};
  std::vector<int> rev{3, 2, 1};
  std::vector<int> mix{2, 3, 1};
  CHECK(fusion::verlinde_dim(3, 1, fwd) == fusion::verlinde_dim(3, 1, rev));
  CHECK(fusion::verlinde_dim(3, 1, fwd) == fusion::verlinde_dim(3, 1, mix));
}

TEST_CASE("trigonometric cross-check stays within 1e-6 of the exact value") {
  for (int level = 1; level <= 6; ++level)
    for (long long genus = 0; genus <= 3; ++genus)
      for (std::vector<int> ins :
           {std::vector<int>{}, {1, 1}, {1, 1, 2}, {level}, {level, level}}) {
        bool in_range = true;
        for (int a : ins)
          in_range = in_range && a <= level;
        if (!in_range)
          continue;
        fusion::FusionRing ring(level);
        const double exact = ring.verlinde_dim(genus, ins).convert_to<double>();
        CHECK(std::abs(ring.verlinde_dim_trig(genus, ins) - exact) < 1e-6);
      }
}

TEST_CASE("validation") {
  CHECK(testutil::throws_code(errc::invalid_argument, [] { fusion::FusionRing r(-1); }));
  fusion::FusionRing ring(2);
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { ring.n_matrix(5); }));
  std::vector<int> bad{3};
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { ring.verlinde_dim(0, bad); }));
  std::vector<int> none;
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { ring.verlinde_dim(-1, none); }));
}
