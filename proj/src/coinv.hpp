#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"
#include "liecore.hpp"

namespace bunblocks::coinv {

// SL2 module graded by nonnegative q-degree.  Two indexings are reported:
// the native degree (position in `pieces`) and the mirrored filtration index
// i <-> top_degree() - i, which places the highest-weight piece on top.
struct GradedModule {
  std::vector<liecore::SL2Character> pieces; // index = q-degree

  long long top_degree() const; // largest nonzero degree, -1 for the zero module
  liecore::SL2Character piece(long long degree) const;
  liecore::SL2Character filtration_piece(long long index) const;
  liecore::SL2Character total() const; // sum over all degrees
  bool operator==(const GradedModule& o) const { return pieces == o.pieces; }
};

// Truncated presentation of Q[t_1..t_m] / (sigma_1..sigma_m), the quotient by
// the elementary symmetric polynomials: per-degree monomial bases and
// normal-form tables, computed once by exact Gaussian elimination with
// lexicographic pivoting.  Immutable after construction.
class QuotientPresentation {
public:
  // 1 <= m <= 4 (desk scale; matrices stay small).
  explicit QuotientPresentation(int m);

  int m() const { return m_; }
  int truncation_degree() const { return trunc_; } // m(m-1)/2 + 1
  int top_degree() const { return trunc_ - 1; }    // top nonzero degree

  // Graded dimension, index = degree, size top_degree() + 1.
  const std::vector<Int>& hilbert() const { return hilbert_; }

  // Basis monomials (exponent vectors, length m) of one degree; empty above
  // top_degree().
  const std::vector<std::vector<int>>& basis(int degree) const;

  // Coordinates of a monomial's class in basis(degree of the monomial);
  // empty when the class is zero (any degree above top_degree()).
  std::vector<Rat> normal_form(const std::vector<int>& mono) const;

private:
  int m_;
  int trunc_;
  std::vector<Int> hilbert_;
  // Per degree 0..trunc_: all monomials in descending lexicographic order,
  // the chosen (non-pivot) basis monomials, and one normal-form row per
  // monomial with coordinates over the basis monomials.
  std::vector<std::vector<std::vector<int>>> monos_;
  std::vector<std::vector<std::vector<int>>> basis_;
  std::vector<std::vector<std::vector<Rat>>> nf_;
};

// Graded dimension of Q[t_1..t_m]/(sigma_1..sigma_m); equals the q-factorial
// [m]_q! with total m!.  1 <= m <= 4.
std::vector<Int> coinvariant_hilbert(int m);

// q-graded SL2 character of (V^{tensor m} x coinvariant algebra)^{S_m} under
// the diagonal symmetric-group action, computed by exact averaging
// projectors per degree and weight.  The degree-wise sum of characters
// equals ch(V^{tensor m}).  1 <= m <= 4.
GradedModule graded_character_R(int m);

// The two character models for the rank-n quotient module S_n.
enum class SModel { QuotientByT, FiberTensor };

// Parses "quotient-by-t" / "fiber-tensor"; throws on an unknown tag.
SModel parse_s_model(const std::string& tag);

// quotient-by-t gives ch(Sym^n V); fiber-tensor gives ch(V^{tensor n}).
// n >= 0 (n = 0 yields the trivial character in both models).
liecore::SL2Character character_S(long long n, SModel model);

// Multiplicity of the irreducible Sym^m V in a character.  Throws when the
// character is not a nonnegative combination of irreducibles.
Int hom_mult(long long m, const liecore::SL2Character& c);

// Checks by exact rank computation that the degree-0 subspace (a copy of
// Sym^m V) generates the whole quotient model of R_m under the operators
// e t^a, f t^a, h t^a for a up to the coinvariant top degree.  1 <= m <= 3.
bool gtgen_check(int m);

} // namespace bunblocks::coinv
