#pragma once

#include <span>

#include "bigint.hpp"

namespace bunblocks::bwb {

// Either everything vanishes, or cohomology sits in a single degree.
struct CohomologyAnswer {
  bool vanishes = true;
  long long degree = 0; // sum of insertion lengths (concentrated case)
  Int dim = 0;          // conformal-block dimension (concentrated case)

  bool operator==(const CohomologyAnswer& o) const {
    if (vanishes != o.vanishes)
      return false;
    return vanishes || (degree == o.degree && dim == o.dim);
  }
};

// Parity of the twisting gerbe class; carried everywhere, numerically inert
// for -4 < level <= 0 and refused for positive level.
struct TwistFlag {
  int parity = 0; // 0 or 1
};

// Cohomology of the level-c tautological bundle with the given insertions
// on the genus-g moduli.  Levels in (-4, 0) vanish outright; at level >= 0
// each insertion is alcove-classified, any singular one kills everything,
// and otherwise the answer concentrates in the total length with dimension
// a Verlinde number of the reduced insertions.  Levels <= -4 are refused
// (Serre-dual range), as is a nontrivial twist at positive level.
CohomologyAnswer cohomology(long long level, long long genus,
                            std::span<const long long> insertions, TwistFlag xi);

// True when every Hom between the m- and n-indexed skyscraper images is
// killed by the central character, i.e. m and n have different parity.
bool hom_parity_obstruction(long long m, long long n);

// Cohomological amplitude window [0, (m+n)/2] for equal-parity m, n, with
// the enumerated maximum of total lengths over the regular components of
// V^{tensor (m+n)} at level 0 (always <= the bound; checked).
struct HomAmplitude {
  long long lo = 0;
  long long hi = 0;
  long long enumerated_max = 0;
};
HomAmplitude hom_amplitude(long long m, long long n);

// Degree-counting certificate that backward Homs die against the diagonal
// codimension: after removing degree 0 the amplitude has length
// (m+n)/2 - 1 < m+n-1.
struct SemiorthogonalityCertificate {
  long long amplitude_length_after_degree0 = 0;
  long long diagonal_codim = 0;
  bool pass = false;
};
SemiorthogonalityCertificate semiorthogonality_certificate(long long m, long long n);

} // namespace bunblocks::bwb
