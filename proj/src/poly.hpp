#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace bunblocks::poly {

// Bivariate polynomial in x, y with exact integer coefficients.
class BiPoly {
public:
  BiPoly() = default;
  static BiPoly constant(Int c);
  static BiPoly monomial(int p, int q, Int c = 1);

  // Nonzero terms keyed by (p, q).
  const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
  Int coeff(int p, int q) const;
  bool is_zero() const { return terms_.empty(); }
  int max_total_degree() const; // -1 for the zero polynomial

  BiPoly& operator+=(const BiPoly& other);
  BiPoly operator+(const BiPoly& other) const;
  BiPoly operator-(const BiPoly& other) const;
  BiPoly operator*(const BiPoly& other) const;
  BiPoly pow(long long e) const;
  bool operator==(const BiPoly& other) const { return terms_ == other.terms_; }

  // Exact quotient by (1 - x^a y^b) with a, b >= 0, (a, b) != (0, 0).
  // Throws errc::check_failed when the division leaves a remainder.
  BiPoly divide_one_minus(int a, int b) const;

  // Substitution x = y = t, returned as a polynomial in x alone.
  BiPoly specialize_diagonal() const;

  // Coefficient list (index = degree in x) for a polynomial with no y terms;
  // throws errc::internal otherwise.
  std::vector<Int> x_coefficients() const;

private:
  std::map<std::pair<int, int>, Int> terms_;
  void add_term(int p, int q, const Int& c);
};

// Laurent polynomial in one variable s with exact integer coefficients.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(std::map<int, Int> coeffs);

  const std::map<int, Int>& coeffs() const { return coeffs_; }
  Int coeff(int e) const;
  Int total() const; // sum of coefficients
  bool is_zero() const { return coeffs_.empty(); }
  bool symmetric() const; // invariant under s <-> s^-1

  Laurent operator+(const Laurent& other) const;
  bool operator==(const Laurent& other) const { return coeffs_ == other.coeffs_; }

  void add(int e, const Int& c);

  // Compact form in ascending exponent, e.g. "2s^-1+4+2s"; "0" when zero.
  std::string str() const;

private:
  std::map<int, Int> coeffs_;
};

// Binomial coefficient with exact arithmetic; zero when k < 0 or k > n.
Int binomial(long long n, long long k);

} // namespace bunblocks::poly
