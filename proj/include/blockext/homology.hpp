#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "blockext/omodule.hpp"
#include "blockext/ring_matrix.hpp"

namespace blockext {

/// Cochain complex C^0 -> C^1 -> ... of free modules over a chain ring.
/// differentials[k] maps C^k to C^{k+1} (rows = dim C^{k+1}, cols = dim C^k).
struct ChainComplex {
  RingPtr ring;
  std::vector<int> dims;
  std::vector<RingMatrix> differentials;

  /// Shapes compose and consecutive composites vanish exactly.
  bool is_complex() const;
};

/// O-module class of the cohomology at `position` read off at the ring's
/// precision.  Torsion comes from the incoming differential's Smith form,
/// the free rank from dim - rank(in) - rank(out).  `outgoing_rank`, when
/// given, replaces the rank of the outgoing differential.
OModuleClass homology_at(const ChainComplex& c, int position, std::optional<int> outgoing_rank = std::nullopt);

/// Homology at precision N, re-verified at N + 2.  `build` realizes the
/// complex over a given precision.  Throws PrecisionUnstable on mismatch.
OModuleClass homology_class(const std::function<ChainComplex(int precision)>& build, int position, int N,
                            std::optional<int> outgoing_rank = std::nullopt);

/// Valuation of pi^k in a ring of ramification e, with v(p) = 1.
Valuation pi_power_valuation(const ChainRing& ring, int k);

}  // namespace blockext
