#pragma once

#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace bunblocks::liecore {

// ---------------------------------------------------------------------------
// Root data
// ---------------------------------------------------------------------------

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Lie type.  Rank constraints: A >= 1, B >= 2, C >= 2, D >= 3,
// E in {6,7,8}, F = 4, G = 2.
struct GroupType {
  Series series;
  int rank;

  GroupType(Series s, int r);
  static GroupType parse(char series, int rank);
  std::string name() const; // e.g. "A3"
};

// Cartan matrix in the convention a[i][j] = <alpha_j, alpha_i^vee>, i.e.
// a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).  Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(const GroupType& t);

// Positive roots in simple-root coordinates, generated by string closure
// from the Cartan matrix, ordered by height then lexicographically.
std::vector<std::vector<int>> positive_roots(const GroupType& t);

// Dual Coxeter number h^vee = 1 + <rho, theta^vee>, computed from the root
// system (highest root and symmetrizer), not from a lookup table.
int dual_coxeter(const GroupType& t);

// ---------------------------------------------------------------------------
// SL2 character calculus
// ---------------------------------------------------------------------------

// Formal character of a finite-dimensional SL2 representation: a finitely
// supported weight -> multiplicity map, symmetric under weight negation.
class SL2Character {
public:
  SL2Character() = default;
  // Validates symmetry and nonnegativity.
  explicit SL2Character(std::map<long long, Int> mult);

  const std::map<long long, Int>& mult() const { return mult_; }
  Int at(long long weight) const;
  Int dimension() const; // sum of multiplicities
  bool empty() const { return mult_.empty(); }

  SL2Character operator+(const SL2Character& other) const;
  SL2Character operator*(const SL2Character& other) const; // pointwise-product character
  bool operator==(const SL2Character& other) const { return mult_ == other.mult_; }

private:
  std::map<long long, Int> mult_;
};

// Multiset of irreducibles, listed as (highest weight, multiplicity) in the
// order produced by highest-weight peeling: strictly decreasing weights.
using Decomposition = std::vector<std::pair<long long, Int>>;

// Character of Sym^m V (weights m, m-2, ..., -m with multiplicity one).
SL2Character irrep_character(long long m);

// Peel a character into irreducibles.  Throws errc::invalid_argument when
// the input is not a nonnegative integer combination of irreducible
// characters (peeling produces a negative multiplicity).
Decomposition decompose(const SL2Character& c);

// Clebsch-Gordan decomposition of the product of two characters.
Decomposition tensor_decompose(const SL2Character& a, const SL2Character& b);

// Decomposition of V^{tensor m}.
Decomposition tensor_power_multiplicities(long long m);

// Character of V^{tensor m} (no peeling).
SL2Character tensor_power_character(long long m);

// Common parity of all weights in the character: 0 or 1.  Throws
// errc::invalid_argument when weights of both parities occur.
int central_parity(const SL2Character& c);

} // namespace bunblocks::liecore
