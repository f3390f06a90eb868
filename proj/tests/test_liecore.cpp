#include <map>

#include "doctest.h"

#include "error.hpp"
#include "liecore.hpp"
#include "test_util.hpp"

using namespace bunblocks;
using liecore::GroupType;
using liecore::Series;
using liecore::SL2Character;

TEST_CASE("group type parsing enforces the rank bounds") {
  CHECK(GroupType::parse('A', 1).name() == "A1");
  CHECK(GroupType::parse('D', 3).name() == "D3");
  CHECK(GroupType::parse('E', 8).name() == "E8");
  for (auto [s, r] : {std::pair{'A', 0}, {'B', 1}, {'C', 1}, {'D', 2}, {'E', 5}, {'E', 9},
                      {'F', 3}, {'G', 3}, {'H', 2}})
    CHECK(testutil::throws_code(errc::invalid_argument, [s = s, r = r] {
      GroupType::parse(s, r);
    }));
}

TEST_CASE("Cartan matrices satisfy the generalized-Cartan constraints") {
  for (auto t : {GroupType(Series::A, 3), GroupType(Series::B, 3), GroupType(Series::C, 2),
                 GroupType(Series::D, 4), GroupType(Series::E, 6), GroupType(Series::F, 4),
                 GroupType(Series::G, 2)}) {
    auto a = liecore::cartan_matrix(t);
    REQUIRE(a.size() == static_cast<size_t>(t.rank));
    for (int i = 0; i < t.rank; ++i) {
      CHECK(a[i][i] == 2);
      for (int j = 0; j < t.rank; ++j) {
        if (i == j)
          continue;
        CHECK(a[i][j] <= 0);
        CHECK((a[i][j] == 0) == (a[j][i] == 0));
        CHECK(a[i][j] * a[j][i] <= 3);
      }
    }
  }
}

TEST_CASE("positive-root counts match (dim g - rank) / 2") {
  auto count = [](Series s, int r) { return liecore::positive_roots(GroupType(s, r)).size(); };
  CHECK(count(Series::A, 1) == 1);
  CHECK(count(Series::A, 2) == 3);
  CHECK(count(Series::A, 3) == 6);
  CHECK(count(Series::B, 3) == 9);
  CHECK(count(Series::C, 3) == 9);
  CHECK(count(Series::D, 4) == 12);
  CHECK(count(Series::G, 2) == 6);
  CHECK(count(Series::F, 4) == 24);
  CHECK(count(Series::E, 6) == 36);
  CHECK(count(Series::E, 7) == 63);
  CHECK(count(Series::E, 8) == 120);
}

TEST_CASE("dual Coxeter numbers reproduce the classical table") {
  auto h = [](char s, int r) { return liecore::dual_coxeter(GroupType::parse(s, r)); };
  for (int r = 1; r <= 8; ++r)
    CHECK(h('A', r) == r + 1);
  for (int r = 2; r <= 8; ++r)
    CHECK(h('B', r) == 2 * r - 1);
  for (int r = 2; r <= 8; ++r)
    CHECK(h('C', r) == r + 1);
  for (int r = 3; r <= 8; ++r)
    CHECK(h('D', r) == 2 * r - 2);
  CHECK(h('E', 6) == 12);
  CHECK(h('E', 7) == 18);
  CHECK(h('E', 8) == 30);
  CHECK(h('F', 4) == 9);
  CHECK(h('G', 2) == 4);
}

TEST_CASE("irreducible characters") {
  auto c = liecore::irrep_character(4);
  CHECK(c.dimension() == 5);
  CHECK(c.at(4) == 1);
  CHECK(c.at(3) == 0);
  CHECK(c.at(-4) == 1);
  CHECK(liecore::irrep_character(0).mult() == std::map<long long, Int>{{0, 1}});
  CHECK(testutil::throws_code(errc::invalid_argument, [] { liecore::irrep_character(-1); }));
}

TEST_CASE("character construction validates symmetry and nonnegativity") {
  std::map<long long, Int> asym{{1, 1}};
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { SL2Character c(asym); }));
  std::map<long long, Int> neg{{1, -1}, {-1, -1}};
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { SL2Character c(neg); }));
  std::map<long long, Int> ok{{2, 1}, {0, 2}, {-2, 1}};
  CHECK(SL2Character(ok).dimension() == 4);
}

TEST_CASE("tensor powers of the defining representation") {
  using D = liecore::Decomposition;
  CHECK(liecore::tensor_power_multiplicities(0) == D{{0, 1}});
  CHECK(liecore::tensor_power_multiplicities(1) == D{{1, 1}});
  CHECK(liecore::tensor_power_multiplicities(3) == D{{3, 1}, {1, 2}});
  CHECK(liecore::tensor_power_multiplicities(4) == D{{4, 1}, {2, 3}, {0, 2}});
  CHECK(liecore::tensor_power_character(10).dimension() == 1024);
  // Multiplicity of the trivial summand in V^{tensor 6} is the ballot number
  // C(6,3) - C(6,2) = 5.
  Int mult0 = 0;
  for (const auto& [w, mu] : liecore::tensor_power_multiplicities(6))
    if (w == 0)
      mult0 = mu;
  CHECK(mult0 == 5);
}

TEST_CASE("tensor products follow the Clebsch-Gordan ladder") {
  auto d = liecore::tensor_decompose(liecore::irrep_character(2), liecore::irrep_character(3));
  CHECK(d == liecore::Decomposition{{5, 1}, {3, 1}, {1, 1}});
  auto e = liecore::tensor_decompose(liecore::irrep_character(0), liecore::irrep_character(7));
  CHECK(e == liecore::Decomposition{{7, 1}});
}

TEST_CASE("peeling rejects characters that are not representations") {
  // Weights +-2 without the interior weight 0 cannot come from a module.
  std::map<long long, Int> holes{{2, 1}, {-2, 1}};
  SL2Character c(holes);
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { liecore::decompose(c); }));
}

TEST_CASE("central parity") {
  CHECK(liecore::central_parity(liecore::irrep_character(3)) == 1);
  CHECK(liecore::central_parity(liecore::tensor_power_character(2)) == 0);
  auto mixed = liecore::irrep_character(1) + liecore::irrep_character(2);
  CHECK(testutil::throws_code(errc::invalid_argument, [&] { liecore::central_parity(mixed); }));
}
