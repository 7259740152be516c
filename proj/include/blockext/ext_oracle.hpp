#pragma once

#include <cstdint>

#include "blockext/homology.hpp"
#include "blockext/module_rep.hpp"

namespace blockext {

struct ExtOptions {
  int precision = 0;                 // 0: chosen from exp(D)
  std::int64_t size_guard = 250000;  // bound on (|D'| - 1)^(i+1) * rank C
  bool memoize = true;
};

/// Precision at which torsion up to O/exp(D) reads correctly with margin.
int default_precision(const SemidirectGroup& G);

/// Ext^i over D' x| F between two modules on that group, computed as
/// H^i(D', M1^* (x) M2)^F: normalized bar cochains of D' restricted to
/// F-equivariant ones, read at precision N and re-checked at N + 2.
/// Throws SizeGuard, PrecisionUnstable.
OModuleClass ext_oracle(const SemidirectGroup& G, const ModuleRecipe& M1, const ModuleRecipe& M2, int i,
                        const ExtOptions& opt = {});

/// dim_k H^i(D', M1bar^* (x) M2bar)^F over the residue field k.
int ext_modp(const SemidirectGroup& G, const ModuleRecipe& M1, const ModuleRecipe& M2, int i,
             const ExtOptions& opt = {});

/// F-equivariant normalized bar complex of C in degrees 0..top, all
/// differentials filled in.  For tests and small cases.
ChainComplex fixed_bar_complex(const ModuleRep& C, int top);

void clear_ext_cache();

}  // namespace blockext
