#include "poly.hpp"

#include <algorithm>

#include "error.hpp"

namespace bunblocks::poly {

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

BiPoly BiPoly::constant(Int c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(int p, int q, Int c) {
  if (p < 0 || q < 0)
    throw_invalid("polynomial exponents must be nonnegative");
  BiPoly out;
  if (c != 0)
    out.terms_.emplace(std::make_pair(p, q), std::move(c));
  return out;
}

Int BiPoly::coeff(int p, int q) const {
  const auto it = terms_.find({p, q});
  return it == terms_.end() ? Int(0) : it->second;
}

int BiPoly::max_total_degree() const {
  int deg = -1;
  for (const auto& [pq, c] : terms_)
    deg = std::max(deg, pq.first + pq.second);
  return deg;
}

void BiPoly::add_term(int p, int q, const Int& c) {
  if (c == 0)
    return;
  const auto key = std::make_pair(p, q);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0)
    terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [pq, c] : other.terms_)
    add_term(pq.first, pq.second, c);
  return *this;
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
  BiPoly out = *this;
  out += other;
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& other) const {
  BiPoly out = *this;
  for (const auto& [pq, c] : other.terms_)
    out.add_term(pq.first, pq.second, -c);
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
  BiPoly out;
  for (const auto& [pq, c] : terms_)
    for (const auto& [rs, d] : other.terms_)
      out.add_term(pq.first + rs.first, pq.second + rs.second, c * d);
  return out;
}

BiPoly BiPoly::pow(long long e) const {
  if (e < 0)
    throw_invalid("polynomial exponent must be nonnegative");
  BiPoly out = constant(1);
  for (long long i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

BiPoly BiPoly::divide_one_minus(int a, int b) const {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw_invalid("divisor 1 - x^a y^b needs a, b >= 0 and (a, b) != (0, 0)");
  int maxp = 0, maxq = 0;
  for (const auto& [pq, c] : terms_) {
    maxp = std::max(maxp, pq.first);
    maxq = std::max(maxq, pq.second);
  }
  // q[p][q] = self[p][q] + q[p - a][q - b], filled in increasing (p, q).
  BiPoly quot;
  for (int p = 0; p <= maxp; ++p) {
    for (int q = 0; q <= maxq; ++q) {
      Int c = coeff(p, q);
      if (p >= a && q >= b)
        c += quot.coeff(p - a, q - b);
      quot.add_term(p, q, c);
    }
  }
  if (quot * (constant(1) - monomial(a, b)) != *this)
    throw_check_failed("division by (1 - x^" + std::to_string(a) + " y^" + std::to_string(b) +
                       ") leaves a remainder");
  return quot;
}

BiPoly BiPoly::specialize_diagonal() const {
  BiPoly out;
  for (const auto& [pq, c] : terms_)
    out.add_term(pq.first + pq.second, 0, c);
  return out;
}

std::vector<Int> BiPoly::x_coefficients() const {
  std::vector<Int> out;
  for (const auto& [pq, c] : terms_) {
    if (pq.second != 0)
      throw Error(errc::internal, "polynomial is not univariate in x");
    if (static_cast<int>(out.size()) <= pq.first)
      out.resize(pq.first + 1, Int(0));
    out[pq.first] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Laurent
// ---------------------------------------------------------------------------

Laurent::Laurent(std::map<int, Int> coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Int Laurent::coeff(int e) const {
  const auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int Laurent::total() const {
  Int t = 0;
  for (const auto& [e, c] : coeffs_)
    t += c;
  return t;
}

bool Laurent::symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (coeff(-e) != c)
      return false;
  return true;
}

Laurent Laurent::operator+(const Laurent& other) const {
  Laurent out = *this;
  for (const auto& [e, c] : other.coeffs_)
    out.add(e, c);
  return out;
}

void Laurent::add(int e, const Int& c) {
  if (c == 0)
    return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0)
    coeffs_.erase(it);
}

std::string Laurent::str() const {
  if (coeffs_.empty())
    return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    std::string term;
    const Int abs = c < 0 ? Int(-c) : c;
    if (e == 0) {
      term = abs.str();
    } else {
      if (abs != 1)
        term = abs.str();
      term += "s";
      if (e != 1)
        term += "^" + std::to_string(e);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

Int binomial(long long n, long long k) {
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Int num = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(n - i);
    num /= Int(i + 1); // exact: a product of j consecutive integers is divisible by j!
  }
  return num;
}

} // namespace bunblocks::poly
