#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecore.hpp"
#include "poly.hpp"

namespace bunblocks::sod {

// The six block-list variants.  The first three are the rank-2 (type A1)
// decompositions of the full stack, the semistable locus, and its coarse
// space; generalG covers any simple type; generalG-coarse is its coarse
// form, known for type A only; conjecture enumerates the expected general
// pattern with product-of-symmetric-power factors.
enum class Variant { Stack, Semistable, Coarse, GeneralG, GeneralGCoarse, Conjecture };

Variant parse_variant(const std::string& tag);
std::string variant_name(Variant v);

enum class Factor { Point, Curve, SymPower, SymVector };
std::string factor_name(Factor f);

// One semiorthogonal block.  `twist` is the exponent of the ample generator
// L, except in the coarse variants where it counts powers of theta = L^{h^vee}.
// `index` holds the fundamental-representation label for Curve factors, the
// symmetric-power exponent for SymPower, and the exponent vector for
// SymVector; it is empty for Point factors.
struct BlockSpec {
  long long twist = 0;
  Factor factor = Factor::SymPower;
  std::vector<long long> index;

  bool operator==(const BlockSpec&) const = default;
  std::string label() const; // "point", "curve_2", "sym_3", "sym_(1,0)"
};

// Enumeration bounds.  `max_index` caps the symmetric-power index (Stack) or
// the sum of the exponent vector (Conjecture); it is required for those two
// variants.  `predicate`, when set on the Conjecture variant, switches to the
// coarse form: twists become theta-exponents l in {0,1} and only blocks with
// predicate(l, index) true are kept (the conjectural linear inequality is
// supplied by the caller).
struct Caps {
  std::optional<long long> max_index;
  std::function<bool(long long, std::span<const long long>)> predicate;
};

struct BlockTable {
  Variant variant;
  liecore::GroupType type;
  long long genus = 0;
  int xi_parity = 1;
  std::vector<BlockSpec> blocks;
};

// Block list of one variant, ordered by increasing twist and then index.
// Validation: Stack/Semistable/Coarse require type A1; Semistable, Coarse
// and GeneralGCoarse require genus >= 2 and a nontrivial twisting class
// (xi_parity = 1); GeneralGCoarse outside type A is refused as unsupported;
// Stack and Conjecture require caps.max_index.
BlockTable enumerate_blocks(Variant v, const liecore::GroupType& t, long long genus,
                            const Caps& caps = {}, int xi_parity = 1);

// Hodge polynomial with nonnegative coefficients, symmetric in (p, q);
// both are checked at construction.
class HodgePolynomial {
public:
  explicit HodgePolynomial(poly::BiPoly p);

  const poly::BiPoly& poly() const { return poly_; }
  Int h(int p, int q) const { return poly_.coeff(p, q); }
  std::vector<Int> poincare() const; // coefficients of the x = y = t specialization
  bool operator==(const HodgePolynomial& o) const { return poly_ == o.poly_; }

private:
  poly::BiPoly poly_;
};

// Hochschild-graded collapse of a Hodge polynomial: coefficient of s^j is
// the sum of h^{p,q} over q - p = j; symmetric under s <-> s^-1 (checked).
class HHPolynomial {
public:
  HHPolynomial() = default;
  explicit HHPolynomial(poly::Laurent l);

  const poly::Laurent& laurent() const { return laurent_; }
  Int total() const { return laurent_.total(); }
  std::string str() const { return laurent_.str(); }
  HHPolynomial operator+(const HHPolynomial& o) const;
  bool operator==(const HHPolynomial& o) const { return laurent_ == o.laurent_; }

private:
  poly::Laurent laurent_;
};

// Hodge polynomial of the n-th symmetric power of a smooth projective curve
// of genus g, computed along two independent routes that must agree: the
// degree-n coefficient of the mixed-Hodge zeta series, and a direct count of
// the sign-graded symmetric invariants of the n-th tensor power of the
// curve's Hodge diamond.  Throws errc::check_failed on disagreement.
// g >= 0, 0 <= n <= 8.
HodgePolynomial hodge_sym_power(long long g, long long n);

// Hodge polynomial of the coarse moduli of rank-2 bundles with fixed odd
// determinant on a genus-g curve, from the classical closed form
//   ((1+x^2 y)^g (1+x y^2)^g - (xy)^g (1+x)^g (1+y)^g) / ((1-xy)(1-x^2 y^2)),
// gated by three internal validations: exact divisibility, the Poincare
// specialization, and the degree/corner checks (top term (xy)^{3g-3},
// h^{0,0} = 1).  2 <= g <= 6.
HodgePolynomial hodge_moduli_rank2_odd(long long g);

// Hochschild collapse s^j = sum over q - p = j of h^{p,q}.
HHPolynomial hh_collapse(const HodgePolynomial& h);

// Hochschild additivity across the coarse block list: lhs is the collapse of
// the moduli Hodge polynomial, rhs sums the collapses of the block factors
// (line-bundle twists leave Hochschild homology unchanged).
struct AdditivityReport {
  HHPolynomial lhs;
  HHPolynomial rhs;
  bool pass = false;
};

// 2 <= g <= 6.
AdditivityReport hh_additivity_check(long long g);

} // namespace bunblocks::sod
