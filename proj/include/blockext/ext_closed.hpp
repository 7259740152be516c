#pragma once

#include <cstdint>
#include <vector>

#include "blockext/block_spec.hpp"
#include "blockext/omodule.hpp"

namespace blockext {

/// Ext^i over O of an abelian p-group with invariants p^{n_1}, ..., p^{n_t}
/// between two linear characters whose quotient has order `char_order`.
OModuleClass ext_abelian_closed(std::int64_t p, const std::vector<int>& invariants, std::int64_t char_order, int i);

/// Ext^i_{OD}(O_lambda1, O_lambda2) for the whole of D.
OModuleClass ext_abelian_closed(const AbelianPGroup& D, int lambda1, int lambda2, int i);

/// Order of lambda_y restricted to the elements `part` of D.
std::int64_t restricted_char_order(const AbelianPGroup& D, int y, const std::vector<int>& part);

}  // namespace blockext
