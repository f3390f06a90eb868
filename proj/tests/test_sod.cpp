#include <map>
#include <span>
#include <utility>
#include <vector>

#include "doctest.h"

#include "error.hpp"
#include "liecore.hpp"
#include "poly.hpp"
#include "sod.hpp"
#include "test_util.hpp"

using namespace bunblocks;
using liecore::GroupType;
using liecore::Series;
using poly::BiPoly;
using sod::BlockSpec;
using sod::Factor;
using sod::Variant;

TEST_CASE("polynomial helpers") {
  CHECK(poly::binomial(10, 3) == 120);
  CHECK(poly::binomial(5, 0) == 1);
  CHECK(poly::binomial(5, 5) == 1);
  CHECK(poly::binomial(5, 6) == 0);
  CHECK(poly::binomial(5, -1) == 0);

  auto p = BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1) + BiPoly::constant(1);
  auto q = p * p;
  CHECK(q.coeff(1, 1) == 2);
  CHECK(q.coeff(0, 0) == 1);
  CHECK(q.max_total_degree() == 2);
  auto masked = q * (BiPoly::constant(1) - BiPoly::monomial(1, 1));
  CHECK(masked.divide_one_minus(1, 1) == q);
  CHECK(testutil::throws_code(errc::check_failed,
                              [] { BiPoly::monomial(1, 0).divide_one_minus(1, 1); }));

  poly::Laurent l;
  l.add(-1, 2);
  l.add(0, 4);
  l.add(1, 2);
  CHECK(l.str() == "2s^-1+4+2s");
  CHECK(l.symmetric());
  CHECK(l.total() == 8);
  CHECK(poly::Laurent{}.str() == "0");
  poly::Laurent u;
  u.add(-2, 1);
  u.add(0, -3);
  u.add(2, 1);
  CHECK(u.str() == "s^-2-3+s^2");
}

TEST_CASE("rank-2 block tables") {
  GroupType a1(Series::A, 1);

  auto coarse = sod::enumerate_blocks(Variant::Coarse, a1, 2);
  REQUIRE(coarse.blocks.size() == 3);
  CHECK(coarse.blocks[0] == BlockSpec{0, Factor::SymPower, {0}});
  CHECK(coarse.blocks[1] == BlockSpec{0, Factor::SymPower, {1}});
  CHECK(coarse.blocks[2] == BlockSpec{1, Factor::SymPower, {0}});
  CHECK(coarse.blocks[1].label() == "sym_1");

  auto semi = sod::enumerate_blocks(Variant::Semistable, a1, 2);
  REQUIRE(semi.blocks.size() == 6);
  CHECK(semi.blocks[0] == BlockSpec{0, Factor::SymPower, {0}});
  CHECK(semi.blocks[3] == BlockSpec{1, Factor::SymPower, {1}});
  CHECK(semi.blocks[5] == BlockSpec{3, Factor::SymPower, {0}});

  sod::Caps cap2;
  cap2.max_index = 2;
  auto stack = sod::enumerate_blocks(Variant::Stack, a1, 0, cap2);
  CHECK(stack.blocks.size() == 12); // 4 twists x indices 0..2

  for (long long g = 2; g <= 12; ++g) {
    CHECK(sod::enumerate_blocks(Variant::Semistable, a1, g).blocks.size() ==
          static_cast<size_t>(4 * g - 2));
    CHECK(sod::enumerate_blocks(Variant::Coarse, a1, g).blocks.size() ==
          static_cast<size_t>(2 * g - 1));
  }
}

TEST_CASE("general-type block tables") {
  GroupType a2(Series::A, 2);
  auto gen = sod::enumerate_blocks(Variant::GeneralG, a2, 0);
  CHECK(gen.blocks.size() == 18); // 2 h^vee = 6 twists x (point + 2 curves)
  CHECK(gen.blocks[0].factor == Factor::Point);
  CHECK(gen.blocks[0].label() == "point");
  CHECK(gen.blocks[1].label() == "curve_1");
  CHECK(gen.blocks[2].label() == "curve_2");

  GroupType b2(Series::B, 2);
  CHECK(sod::enumerate_blocks(Variant::GeneralG, b2, 0).blocks.size() == 18); // h^vee = 3

  auto genc = sod::enumerate_blocks(Variant::GeneralGCoarse, a2, 3);
  CHECK(genc.blocks.size() == 6); // theta-exponents {0,1} x (point + 2 curves)

  GroupType a1(Series::A, 1);
  sod::Caps cap1;
  cap1.max_index = 1;
  auto conj = sod::enumerate_blocks(Variant::Conjecture, a1, 0, cap1);
  CHECK(conj.blocks.size() == 8); // 4 twists x exponent vectors (0), (1)
  CHECK(conj.blocks[0].label() == "sym_(0)");
  CHECK(conj.blocks[0].factor == Factor::SymVector);

  sod::Caps coarse_caps;
  coarse_caps.max_index = 2;
  coarse_caps.predicate = [](long long l, std::span<const long long>) { return l == 0; };
  auto conjc = sod::enumerate_blocks(Variant::Conjecture, a1, 2, coarse_caps);
  CHECK(conjc.blocks.size() == 3); // theta-exponent 0 only, vectors (0), (1), (2)
}

TEST_CASE("block table validation") {
  GroupType a1(Series::A, 1);
  GroupType a2(Series::A, 2);
  GroupType b2(Series::B, 2);
  CHECK(testutil::throws_code(errc::invalid_argument, [&] {
    sod::enumerate_blocks(Variant::Stack, a1, 0); // no cap
  }));
  CHECK(testutil::throws_code(errc::invalid_argument, [&] {
    sod::enumerate_blocks(Variant::Stack, a2, 0, {.max_index = 2, .predicate = {}});
  }));
  CHECK(testutil::throws_code(errc::invalid_argument, [&] {
    sod::enumerate_blocks(Variant::Semistable, a1, 1); // genus too small
  }));
  CHECK(testutil::throws_code(errc::unsupported, [&] {
    sod::enumerate_blocks(Variant::Coarse, a1, 2, {}, 0); // trivial twisting class
  }));
  CHECK(testutil::throws_code(errc::unsupported, [&] {
    sod::enumerate_blocks(Variant::GeneralGCoarse, b2, 2); // outside type A
  }));
  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::parse_variant("nope"); }));
  for (auto v : {Variant::Stack, Variant::Semistable, Variant::Coarse, Variant::GeneralG,
                 Variant::GeneralGCoarse, Variant::Conjecture})
    CHECK(sod::parse_variant(sod::variant_name(v)) == v);
}

TEST_CASE("symmetric-power Hodge polynomials") {
  CHECK(sod::hodge_sym_power(3, 0).poly() == BiPoly::constant(1));

  auto h1 = sod::hodge_sym_power(2, 1); // the curve itself
  CHECK(h1.h(0, 0) == 1);
  CHECK(h1.h(1, 0) == 2);
  CHECK(h1.h(0, 1) == 2);
  CHECK(h1.h(1, 1) == 1);

  auto h2 = sod::hodge_sym_power(2, 2);
  CHECK(h2.h(1, 1) == 5);
  CHECK(h2.poincare() == std::vector<Int>{1, 4, 7, 4, 1});

  // Genus 0: the n-th symmetric power is projective n-space.
  auto pn = sod::hodge_sym_power(0, 4);
  for (int i = 0; i <= 4; ++i)
    CHECK(pn.h(i, i) == 1);
  CHECK(pn.poly().max_total_degree() == 8);

  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::hodge_sym_power(2, 9); }));
  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::hodge_sym_power(-1, 1); }));
}

TEST_CASE("Hodge constructor gates") {
  CHECK(testutil::throws_code(errc::check_failed,
                              [] { sod::HodgePolynomial h(BiPoly::monomial(1, 0)); }));
  CHECK(testutil::throws_code(errc::check_failed,
                              [] { sod::HodgePolynomial h(BiPoly::monomial(1, 1, -1)); }));
}

TEST_CASE("moduli Hodge polynomial fixtures") {
  auto m2 = sod::hodge_moduli_rank2_odd(2);
  std::map<std::pair<int, int>, Int> expected{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 2},
                                              {{2, 1}, 2}, {{2, 2}, 1}, {{3, 3}, 1}};
  CHECK(m2.poly().terms() == expected);
  CHECK(m2.poincare() == std::vector<Int>{1, 0, 1, 4, 1, 0, 1});

  auto m3 = sod::hodge_moduli_rank2_odd(3);
  CHECK(m3.poincare() == std::vector<Int>{1, 0, 1, 6, 2, 6, 16, 6, 2, 6, 1, 0, 1});

  for (long long g = 2; g <= 6; ++g) {
    auto h = sod::hodge_moduli_rank2_odd(g);
    const int dim = static_cast<int>(3 * g - 3);
    CHECK(h.poly().max_total_degree() == 2 * dim);
    CHECK(h.h(0, 0) == 1);
    CHECK(h.h(dim, dim) == 1);
  }

  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::hodge_moduli_rank2_odd(1); }));
  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::hodge_moduli_rank2_odd(7); }));
}

TEST_CASE("Hochschild collapse and additivity") {
  auto hh = sod::hh_collapse(sod::hodge_sym_power(2, 1));
  CHECK(hh.str() == "2s^-1+2+2s");
  CHECK(hh.total() == 6);

  auto rep = sod::hh_additivity_check(2);
  CHECK(rep.pass);
  CHECK(rep.lhs.str() == "2s^-1+4+2s");
  CHECK(rep.lhs == rep.rhs);
  CHECK(rep.lhs.total() == 8);

  const std::vector<Int> totals{8, 48, 256, 1280, 6144};
  for (long long g = 2; g <= 6; ++g) {
    auto r = sod::hh_additivity_check(g);
    CHECK(r.pass);
    if (g <= 5)
      CHECK(r.lhs.total() == totals[static_cast<size_t>(g - 2)]);
  }

  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::hh_additivity_check(1); }));
  CHECK(testutil::throws_code(errc::invalid_argument, [] { sod::hh_additivity_check(7); }));
}
