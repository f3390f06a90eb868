#pragma once

#include <span>
#include <vector>

#include "bigint.hpp"

namespace bunblocks::fusion {

using IntMatrix = std::vector<std::vector<Int>>;

// Truncated Clebsch-Gordan rule for type A1 at level k: 1 when a+b+c is
// even and |a-b| <= c <= min(a+b, 2k-a-b), else 0.
Int fusion_coefficient(int level, int a, int b, int c);

// Level-k type A1 fusion ring: labels 0..k, one integer matrix N_a per
// label with (N_a)_{bc} = fusion_coefficient(level, a, b, c).  All data is
// built eagerly in the constructor and immutable afterwards.
class FusionRing {
public:
  explicit FusionRing(int level);

  int level() const { return level_; }
  const IntMatrix& n_matrix(int a) const;
  const IntMatrix& handle_matrix() const { return handle_; } // C = sum_a N_a^2

  // Entry (0,0) of (prod_i N_{ins[i]}) * C^genus, all-integer.
  Int verlinde_dim(long long genus, std::span<const int> insertions) const;

  // Trigonometric S-matrix evaluation of the same dimension; floating
  // cross-check only, never the source of an exact result.
  double verlinde_dim_trig(long long genus, std::span<const int> insertions) const;

private:
  void check_label(int a) const;

  int level_;
  std::vector<IntMatrix> n_;
  IntMatrix handle_;
};

// One-shot conveniences (construct the ring, evaluate, discard).
Int verlinde_dim(int level, long long genus, std::span<const int> insertions);
double verlinde_dim_trig(int level, long long genus, std::span<const int> insertions);

} // namespace bunblocks::fusion
