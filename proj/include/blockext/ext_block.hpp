#pragma once

#include <string>
#include <vector>

#include "blockext/ext_closed.hpp"
#include "blockext/ext_oracle.hpp"

namespace blockext {

enum class ExtMode { Closed, Oracle, Crosscheck };
/// Which character is moved to its inertial subgroup by Shapiro's lemma.
enum class ShapiroSide { First, Second };

/// Ext^i over D' x| E between the modules of c1 and c2 built on D' (D' = D
/// or D1), reduced by Shapiro's lemma to D' x| E_lambda of the chosen side.
OModuleClass ext_shapiro(const SemidirectGroup& G, const std::vector<int>& d_part, const BlockCharacter& c1,
                         const BlockCharacter& c2, int i, ShapiroSide side, const ExtOptions& opt = {});

/// Closed mode: D2-side closed forms combined with D1 x| E data (Kunneth).
OModuleClass ext_block_closed(const SemidirectGroup& G, const BlockCharacter& c1, const BlockCharacter& c2, int i,
                              const ExtOptions& opt = {});

/// Ext^i_{OG}(M_c1, M_c2), 0 <= i <= 2.  Crosscheck runs closed and oracle
/// mode and throws CrossCheckMismatch on disagreement.
OModuleClass ext_block(const SemidirectGroup& G, const BlockCharacter& c1, const BlockCharacter& c2, int i,
                       ExtMode mode, const ExtOptions& opt = {});

/// dim_k Ext^1_{kG} between the reductions of M_c1 and M_c2.
int ext1_modp(const SemidirectGroup& G, const BlockCharacter& c1, const BlockCharacter& c2, const ExtOptions& opt = {});

struct ShapeReport {
  bool conforming = true;
  std::string detail;
};
/// Degree 0: free only.  Degree 1: torsion, valuations of some 1 - zeta.
/// Degree 2: torsion.
ShapeReport ext_shape_classify(const OModuleClass& e, int i);

}  // namespace blockext
