#pragma once

#include <span>
#include <vector>

#include "liecore.hpp"

namespace bunblocks::alcove {

// Affine Weyl classification of a dominant weight at a nonnegative level.
// The rho-shifted weight is reduced at shifted level kappa = level + h^vee;
// walls sit at integer multiples of kappa.
struct AlcoveClass {
  bool regular = false;
  long long length = 0;            // minimal affine word length (regular case)
  std::vector<long long> reduced;  // level-integrable dominant weight (regular case)
  std::vector<int> word;           // reflection indices, filled by the BFS route only

  bool operator==(const AlcoveClass& o) const {
    if (regular != o.regular)
      return false;
    return !regular || (length == o.length && reduced == o.reduced);
  }
};

inline constexpr int kDefaultBfsRadius = 64;

// Closed form for SL2: with kappa = level + 2 and n = weight + 1, the class
// is singular iff kappa | n; otherwise length = floor(n / kappa) and the
// reduced weight depends on its parity.
AlcoveClass classify_sl2(long long level, long long weight);

// Residue algorithm for type A_rank: strictly decreasing coordinates of
// lambda + rho, singular iff two coordinates agree mod kappa, length =
// number of affine walls separating the weight from the fundamental alcove.
AlcoveClass classify_type_a(int rank, long long level, std::span<const long long> lambda);

// Breadth-first search over words in the affine simple reflections.  The
// independent oracle for both closed-form routes.  Throws
// errc::search_limit when no resolution is found within the radius.
AlcoveClass classify_bfs(int rank, long long level, std::span<const long long> lambda,
                         int radius = kDefaultBfsRadius);

// Strictly decreasing coordinate vector of lambda + rho used by the type-A
// routes (rank + 1 entries, last one 0).
std::vector<long long> shifted_coordinates(int rank, std::span<const long long> lambda);

// Apply the i-th affine simple reflection (i = 0 affine, 1..rank finite) to
// a coordinate vector at shifted level kappa.  Exposed for path replay.
std::vector<long long> apply_reflection(const std::vector<long long>& point, int i,
                                        long long kappa);

} // namespace bunblocks::alcove
