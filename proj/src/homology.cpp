#include "blockext/homology.hpp"

#include "blockext/errors.hpp"

namespace blockext {

bool ChainComplex::is_complex() const {
  if (differentials.size() + 1 > dims.size()) return false;
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& d = differentials[k];
    if (d.cols() != dims[k] || d.rows() != dims[k + 1]) return false;
  }
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k)
    if (!(differentials[k + 1] * differentials[k]).is_zero()) return false;
  return true;
}

Valuation pi_power_valuation(const ChainRing& ring, int k) {
  return Valuation(ring.p(), k, ring.ramification());
}

OModuleClass homology_at(const ChainComplex& c, int position, std::optional<int> outgoing_rank) {
  if (position < 0 || position >= static_cast<int>(c.dims.size()))
    throw Error(Errc::InvalidInput, "homology position out of range");
  const ChainRing& R = *c.ring;
  const int threshold = R.length() - R.margin();
  int dim = c.dims[static_cast<std::size_t>(position)];
  int rank_in = 0;
  std::vector<Valuation> torsion;
  if (position >= 1 && position - 1 < static_cast<int>(c.differentials.size())) {
    SmithForm s = snf_chain_ring(c.differentials[static_cast<std::size_t>(position - 1)], false);
    for (int k : s.exponents) {
      if (k >= threshold) continue;
      ++rank_in;
      if (k > 0) torsion.push_back(pi_power_valuation(R, k));
    }
  }
  int rank_out = 0;
  if (outgoing_rank) {
    rank_out = *outgoing_rank;
  } else if (position < static_cast<int>(c.differentials.size())) {
    SmithForm s = snf_chain_ring(c.differentials[static_cast<std::size_t>(position)], false);
    rank_out = nonzero_pivots(s.exponents, R);
  }
  int free = dim - rank_in - rank_out;
  if (free < 0) throw Error(Errc::DimensionCheck, "ranks exceed the cochain dimension");
  return OModuleClass(free, std::move(torsion));
}

OModuleClass homology_class(const std::function<ChainComplex(int precision)>& build, int position, int N,
                            std::optional<int> outgoing_rank) {
  OModuleClass low = homology_at(build(N), position, outgoing_rank);
  OModuleClass high = homology_at(build(N + 2), position, outgoing_rank);
  if (!(low == high))
    throw Error(Errc::PrecisionUnstable, "homology " + low.to_string() + " at precision " + std::to_string(N) +
                                             " but " + high.to_string() + " at " + std::to_string(N + 2));
  return low;
}

}  // namespace blockext
