#include "bwb.hpp"

#include <string>
#include <vector>

#include "alcove.hpp"
#include "error.hpp"
#include "fusion.hpp"
#include "liecore.hpp"

namespace bunblocks::bwb {

namespace {
constexpr long long kDualCoxeterSL2 = 2;
} // namespace

CohomologyAnswer cohomology(long long level, long long genus,
                            std::span<const long long> insertions, TwistFlag xi) {
  if (xi.parity != 0 && xi.parity != 1)
    throw_invalid("twist parity must be 0 or 1");
  if (genus < 0)
    throw_invalid("genus must be nonnegative");
  for (long long w : insertions)
    if (w < 0)
      throw_invalid("insertion weights must be nonnegative");
  if (level <= -2 * kDualCoxeterSL2)
    throw_unsupported("level " + std::to_string(level) +
                      " is in the Serre-dual range (need level > -4)");
  if (level < 0)
    return CohomologyAnswer{}; // vanishes for -4 < level < 0, any insertions
  if (xi.parity == 1 && level > 0)
    throw_unsupported("unsupported: twisted positive level");

  long long degree = 0;
  std::vector<int> reduced;
  reduced.reserve(insertions.size());
  for (long long w : insertions) {
    const auto cls = alcove::classify_sl2(level, w);
    if (!cls.regular)
      return CohomologyAnswer{};
    degree += cls.length;
    reduced.push_back(static_cast<int>(cls.reduced.at(0)));
  }
  CohomologyAnswer out;
  out.vanishes = false;
  out.degree = degree;
  out.dim = fusion::verlinde_dim(static_cast<int>(level), genus, reduced);
  return out;
}

bool hom_parity_obstruction(long long m, long long n) {
  if (m < 0 || n < 0)
    throw_invalid("indices must be nonnegative");
  return (m - n) % 2 != 0;
}

HomAmplitude hom_amplitude(long long m, long long n) {
  if (m < 0 || n < 0)
    throw_invalid("indices must be nonnegative");
  if ((m - n) % 2 != 0)
    throw_invalid("parity mismatch: amplitude is defined for m = n mod 2");
  HomAmplitude out;
  out.lo = 0;
  out.hi = (m + n) / 2;
  // Enumerate the regular components of V^{tensor (m+n)} at level 0; each
  // surviving even weight w contributes length w/2.
  out.enumerated_max = 0;
  for (const auto& [w, mult] : liecore::tensor_power_multiplicities(m + n)) {
    (void)mult;
    const auto cls = alcove::classify_sl2(0, w);
    if (cls.regular)
      out.enumerated_max = std::max(out.enumerated_max, cls.length);
  }
  if (out.enumerated_max > out.hi)
    throw_check_failed("enumerated amplitude exceeds the (m+n)/2 bound");
  return out;
}

SemiorthogonalityCertificate semiorthogonality_certificate(long long m, long long n) {
  if (n < 0 || m <= n)
    throw_invalid("need m > n >= 0");
  if ((m - n) % 2 != 0)
    throw_invalid("parity mismatch: certificate applies to m = n mod 2");
  if (m + n == 0)
    throw_invalid("need m + n > 0");
  SemiorthogonalityCertificate out;
  out.amplitude_length_after_degree0 = (m + n) / 2 - 1;
  out.diagonal_codim = m + n - 1;
  out.pass = out.amplitude_length_after_degree0 < out.diagonal_codim;
  return out;
}

} // namespace bunblocks::bwb
