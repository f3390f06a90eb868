#include "fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace bunblocks::fusion {

namespace {

void check_level(int level) {
  if (level < 0)
    throw_invalid("fusion level must be nonnegative");
}

void check_label(int level, int a) {
  if (a < 0 || a > level)
    throw_invalid("label " + std::to_string(a) + " out of range 0.." + std::to_string(level));
}

} // namespace

Int fusion_coefficient(int level, int a, int b, int c) {
  check_level(level);
  check_label(level, a);
  check_label(level, b);
  check_label(level, c);
  if ((a + b + c) % 2 != 0)
    return 0;
  if (std::abs(a - b) <= c && c <= std::min(a + b, 2 * level - a - b))
    return 1;
  return 0;
}

FusionRing::FusionRing(int level) : level_(level) {
  check_level(level);
  const int n = level + 1;
  n_.reserve(n);
  for (int a = 0; a < n; ++a) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        m[b][c] = fusion_coefficient(level, a, b, c);
    n_.push_back(std::move(m));
  }
  handle_.assign(n, std::vector<Int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          handle_[b][d] += n_[a][b][c] * n_[a][c][d];
}

const IntMatrix& FusionRing::n_matrix(int a) const {
  check_label(a);
  return n_[a];
}

void FusionRing::check_label(int a) const {
  fusion::check_label(level_, a);
}

Int FusionRing::verlinde_dim(long long genus, std::span<const int> insertions) const {
  if (genus < 0)
    throw_invalid("genus must be nonnegative");
  for (int a : insertions)
    check_label(a);
  const int n = level_ + 1;
  // e_0^T (prod_i N_i) C^g e_0, evaluated right-to-left as matrix-vector
  // products.
  std::vector<Int> v(n, 0);
  v[0] = 1;
  auto apply = [&](const IntMatrix& m) {
    std::vector<Int> w(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[i][j] != 0 && v[j] != 0)
          w[i] += m[i][j] * v[j];
    v = std::move(w);
  };
  for (long long i = 0; i < genus; ++i)
    apply(handle_);
  for (auto it = insertions.rbegin(); it != insertions.rend(); ++it)
    apply(n_[*it]);
  return v[0];
}

double FusionRing::verlinde_dim_trig(long long genus, std::span<const int> insertions) const {
  if (genus < 0)
    throw_invalid("genus must be nonnegative");
  for (int a : insertions)
    check_label(a);
  const double kp = level_ + 2;
  auto s = [&](int a, int b) {
    return std::sqrt(2.0 / kp) * std::sin((a + 1) * (b + 1) * std::numbers::pi / kp);
  };
  double total = 0.0;
  const double expo = 2.0 - 2.0 * static_cast<double>(genus) -
                      static_cast<double>(insertions.size());
  for (int j = 0; j <= level_; ++j) {
    double term = std::pow(s(0, j), expo);
    for (int a : insertions)
      term *= s(a, j);
    total += term;
  }
  return total;
}

Int verlinde_dim(int level, long long genus, std::span<const int> insertions) {
  return FusionRing(level).verlinde_dim(genus, insertions);
}

double verlinde_dim_trig(int level, long long genus, std::span<const int> insertions) {
  return FusionRing(level).verlinde_dim_trig(genus, insertions);
}

} // namespace bunblocks::fusion
