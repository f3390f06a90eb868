#include "sod.hpp"

#include <algorithm>

#include "error.hpp"

namespace bunblocks::sod {

using poly::BiPoly;
using poly::binomial;
using poly::Laurent;

namespace {

constexpr long long kRank2DualCoxeterTwice = 4; // 2 h^vee for type A1

// Exponent vectors n with sum(n) <= cap, ordered by total then
// lexicographically.
std::vector<std::vector<long long>> index_vectors(int rank, long long cap) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(rank, 0);
  for (long long total = 0; total <= cap; ++total) {
    std::function<void(int, long long)> rec = [&](int pos, long long rem) {
      if (pos == rank - 1) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
      }
      for (long long e = 0; e <= rem; ++e) {
        cur[pos] = e;
        rec(pos + 1, rem - e);
      }
    };
    rec(0, total);
  }
  return out;
}

void require_type_a1(Variant v, const liecore::GroupType& t) {
  if (t.series != liecore::Series::A || t.rank != 1)
    throw_invalid("variant " + variant_name(v) + " applies to type A1 only, got " + t.name());
}

void require_stable_locus_inputs(Variant v, long long genus, int xi_parity) {
  if (genus < 2)
    throw_invalid("variant " + variant_name(v) + " needs genus >= 2");
  if (xi_parity != 1)
    throw_unsupported("variant " + variant_name(v) +
                      " is stated for a nontrivial twisting class (xi parity 1)");
}

long long require_cap(Variant v, const Caps& caps) {
  if (!caps.max_index)
    throw_invalid("variant " + variant_name(v) +
                  " enumerates an infinite family; set an index cap");
  if (*caps.max_index < 0)
    throw_invalid("index cap must be nonnegative");
  return *caps.max_index;
}

} // namespace

// ---------------------------------------------------------------------------
// Block enumeration
// ---------------------------------------------------------------------------

Variant parse_variant(const std::string& tag) {
  if (tag == "stack")
    return Variant::Stack;
  if (tag == "semistable")
    return Variant::Semistable;
  if (tag == "coarse")
    return Variant::Coarse;
  if (tag == "generalG")
    return Variant::GeneralG;
  if (tag == "generalG-coarse")
    return Variant::GeneralGCoarse;
  if (tag == "conjecture")
    return Variant::Conjecture;
  throw_invalid("unknown variant \"" + tag +
                "\" (expected stack, semistable, coarse, generalG, generalG-coarse "
                "or conjecture)");
}

std::string variant_name(Variant v) {
  switch (v) {
  case Variant::Stack:
    return "stack";
  case Variant::Semistable:
    return "semistable";
  case Variant::Coarse:
    return "coarse";
  case Variant::GeneralG:
    return "generalG";
  case Variant::GeneralGCoarse:
    return "generalG-coarse";
  case Variant::Conjecture:
    return "conjecture";
  }
  throw_invalid("unknown variant");
}

std::string factor_name(Factor f) {
  switch (f) {
  case Factor::Point:
    return "point";
  case Factor::Curve:
    return "curve";
  case Factor::SymPower:
    return "sym";
  case Factor::SymVector:
    return "sym_vector";
  }
  throw_invalid("unknown factor");
}

std::string BlockSpec::label() const {
  switch (factor) {
  case Factor::Point:
    return "point";
  case Factor::Curve:
    return "curve_" + std::to_string(index.at(0));
  case Factor::SymPower:
    return "sym_" + std::to_string(index.at(0));
  case Factor::SymVector: {
    std::string out = "sym_(";
    for (std::size_t i = 0; i < index.size(); ++i)
      out += (i ? "," : "") + std::to_string(index[i]);
    return out + ")";
  }
  }
  throw_invalid("unknown factor");
}

BlockTable enumerate_blocks(Variant v, const liecore::GroupType& t, long long genus,
                            const Caps& caps, int xi_parity) {
  if (genus < 0)
    throw_invalid("genus must be nonnegative");
  if (xi_parity != 0 && xi_parity != 1)
    throw_invalid("xi parity must be 0 or 1");
  BlockTable table{v, t, genus, xi_parity, {}};
  switch (v) {
  case Variant::Stack: {
    require_type_a1(v, t);
    const long long cap = require_cap(v, caps);
    for (long long k = 0; k < kRank2DualCoxeterTwice; ++k)
      for (long long n = 0; n <= cap; ++n)
        table.blocks.push_back({k, Factor::SymPower, {n}});
    break;
  }
  case Variant::Semistable: {
    require_type_a1(v, t);
    require_stable_locus_inputs(v, genus, xi_parity);
    for (long long k = 0; k < kRank2DualCoxeterTwice; ++k)
      for (long long n = 0; n < genus - k / 2; ++n)
        table.blocks.push_back({k, Factor::SymPower, {n}});
    break;
  }
  case Variant::Coarse: {
    require_type_a1(v, t);
    require_stable_locus_inputs(v, genus, xi_parity);
    for (long long l = 0; l < 2; ++l)
      for (long long n = 0; n < genus - l; ++n)
        table.blocks.push_back({l, Factor::SymPower, {n}});
    break;
  }
  case Variant::GeneralG: {
    const long long twists = 2LL * liecore::dual_coxeter(t);
    for (long long k = 0; k < twists; ++k) {
      table.blocks.push_back({k, Factor::Point, {}});
      for (long long i = 1; i <= t.rank; ++i)
        table.blocks.push_back({k, Factor::Curve, {i}});
    }
    break;
  }
  case Variant::GeneralGCoarse: {
    if (t.series != liecore::Series::A)
      throw_unsupported("the coarse decomposition for general groups is known for type A only "
                        "(semistable = stable is open otherwise)");
    require_stable_locus_inputs(v, genus, xi_parity);
    for (long long l = 0; l < 2; ++l) {
      table.blocks.push_back({l, Factor::Point, {}});
      for (long long i = 1; i <= t.rank; ++i)
        table.blocks.push_back({l, Factor::Curve, {i}});
    }
    break;
  }
  case Variant::Conjecture: {
    const long long cap = require_cap(v, caps);
    const auto vectors = index_vectors(t.rank, cap);
    const long long twists = caps.predicate ? 2 : 2LL * liecore::dual_coxeter(t);
    for (long long k = 0; k < twists; ++k)
      for (const auto& n : vectors) {
        if (caps.predicate && !caps.predicate(k, n))
          continue;
        table.blocks.push_back({k, Factor::SymVector, n});
      }
    break;
  }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Hodge / Hochschild polynomials
// ---------------------------------------------------------------------------

HodgePolynomial::HodgePolynomial(BiPoly p) : poly_(std::move(p)) {
  for (const auto& [pq, c] : poly_.terms()) {
    if (c < 0)
      throw_check_failed("Hodge polynomial has a negative coefficient");
    if (poly_.coeff(pq.second, pq.first) != c)
      throw_check_failed("Hodge polynomial is not symmetric in (p, q)");
  }
}

std::vector<Int> HodgePolynomial::poincare() const {
  return poly_.specialize_diagonal().x_coefficients();
}

HHPolynomial::HHPolynomial(Laurent l) : laurent_(std::move(l)) {
  if (!laurent_.symmetric())
    throw_check_failed("Hochschild polynomial is not symmetric under s <-> s^-1");
}

HHPolynomial HHPolynomial::operator+(const HHPolynomial& o) const {
  return HHPolynomial(laurent_ + o.laurent_);
}

HodgePolynomial hodge_sym_power(long long g, long long n) {
  if (g < 0)
    throw_invalid("genus must be nonnegative");
  if (n < 0 || n > 8)
    throw_invalid("symmetric power index supports 0 <= n <= 8");

  // Route (a): degree-n z-coefficient of (1+xz)^g (1+yz)^g / ((1-z)(1-xyz)).
  std::vector<BiPoly> cz(n + 1);
  for (long long j = 0; j <= n; ++j)
    for (long long i = 0; i <= j; ++i)
      cz[j] += BiPoly::monomial(static_cast<int>(i), static_cast<int>(j - i),
                                binomial(g, i) * binomial(g, j - i));
  for (long long j = 1; j <= n; ++j)
    cz[j] += cz[j - 1]; // divide by (1 - z)
  const BiPoly xy = BiPoly::monomial(1, 1);
  for (long long j = 1; j <= n; ++j)
    cz[j] += xy * cz[j - 1]; // divide by (1 - xyz)
  const BiPoly series_route = cz[n];

  // Route (b): count the sign-graded symmetric invariants of the n-th tensor
  // power of the diamond {1, g x's, g y's, one xy}: a multiset of the even
  // classes and a subset of the odd ones, k of type (1,0), l of type (0,1),
  // j copies of the point class, the rest copies of the unit.
  BiPoly invariant_route;
  for (long long k = 0; k <= std::min(g, n); ++k)
    for (long long l = 0; l <= std::min(g, n - k); ++l)
      for (long long j = 0; j + k + l <= n; ++j)
        invariant_route += BiPoly::monomial(static_cast<int>(j + k), static_cast<int>(j + l),
                                            binomial(g, k) * binomial(g, l));

  if (!(series_route == invariant_route))
    throw_check_failed("symmetric-power Hodge routes disagree at g=" + std::to_string(g) +
                       ", n=" + std::to_string(n));
  return HodgePolynomial(series_route);
}

HodgePolynomial hodge_moduli_rank2_odd(long long g) {
  if (g < 2 || g > 6)
    throw_invalid("moduli Hodge polynomial supports 2 <= g <= 6");
  const int gi = static_cast<int>(g);
  const BiPoly one = BiPoly::constant(1);
  const BiPoly numerator = (one + BiPoly::monomial(2, 1)).pow(g) * (one + BiPoly::monomial(1, 2)).pow(g) -
                           BiPoly::monomial(gi, gi) * (one + BiPoly::monomial(1, 0)).pow(g) *
                               (one + BiPoly::monomial(0, 1)).pow(g);
  const BiPoly quotient = numerator.divide_one_minus(1, 1).divide_one_minus(2, 2);

  // Poincare validation against the univariate closed form.
  const BiPoly uni_num = (one + BiPoly::monomial(3, 0)).pow(2 * g) -
                         BiPoly::monomial(2 * gi, 0) * (one + BiPoly::monomial(1, 0)).pow(2 * g);
  const BiPoly uni = uni_num.divide_one_minus(2, 0).divide_one_minus(4, 0);
  if (!(quotient.specialize_diagonal() == uni))
    throw_check_failed("moduli Hodge polynomial fails the Poincare specialization");

  // Degree and corner validation: dimension 3g-3, connected.
  const int dim = 3 * gi - 3;
  if (quotient.max_total_degree() != 2 * dim || quotient.coeff(dim, dim) != 1 ||
      quotient.coeff(0, 0) != 1)
    throw_check_failed("moduli Hodge polynomial fails the degree checks");

  return HodgePolynomial(quotient);
}

HHPolynomial hh_collapse(const HodgePolynomial& h) {
  Laurent l;
  for (const auto& [pq, c] : h.poly().terms())
    l.add(pq.second - pq.first, c);
  return HHPolynomial(std::move(l));
}

AdditivityReport hh_additivity_check(long long g) {
  if (g < 2 || g > 6)
    throw_invalid("additivity check supports 2 <= g <= 6");
  AdditivityReport report;
  report.lhs = hh_collapse(hodge_moduli_rank2_odd(g));
  const BlockTable table =
      enumerate_blocks(Variant::Coarse, liecore::GroupType(liecore::Series::A, 1), g);
  HHPolynomial rhs;
  for (const BlockSpec& b : table.blocks)
    rhs = rhs + hh_collapse(hodge_sym_power(g, b.index.at(0)));
  report.rhs = rhs;
  report.pass = report.lhs == report.rhs;
  return report;
}

} // namespace bunblocks::sod
