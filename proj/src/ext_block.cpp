#include "blockext/ext_block.hpp"

#include "blockext/errors.hpp"
#include "blockext/valuation.hpp"

namespace blockext {

namespace {

void check_degree(int i) {
  if (i < 0 || i > 2) throw Error(Errc::InvalidInput, "Ext degree must lie in 0..2");
}

// Recipes for (V_chi on D' x| E_lambda of `moved`, M_other restricted there).
std::pair<ModuleRecipe, ModuleRecipe> shapiro_pair(const SemidirectGroup& G, const std::vector<int>& d_part,
                                                   const BlockCharacter& moved, const BlockCharacter& other) {
  const std::vector<int> f = in_e(G, *moved.E_lambda);
  ModuleRecipe line = [&G, d_part, moved](const RingPtr& R) {
    return line_module(G, d_part, moved.lambda, moved.chi, R);
  };
  ModuleRecipe rest = [&G, d_part, f, other](const RingPtr& R) {
    return restrict_module(build_module_rep(G, d_part, other, R), d_part, f);
  };
  return {line, rest};
}

}  // namespace

OModuleClass ext_shapiro(const SemidirectGroup& G, const std::vector<int>& d_part, const BlockCharacter& c1,
                         const BlockCharacter& c2, int i, ShapiroSide side, const ExtOptions& opt) {
  if (side == ShapiroSide::First) {
    auto [line, rest] = shapiro_pair(G, d_part, c1, c2);
    return ext_oracle(G, line, rest, i, opt);
  }
  auto [line, rest] = shapiro_pair(G, d_part, c2, c1);
  return ext_oracle(G, rest, line, i, opt);
}

OModuleClass ext_block_closed(const SemidirectGroup& G, const BlockCharacter& c1, const BlockCharacter& c2, int i,
                              const ExtOptions& opt) {
  check_degree(i);
  const AbelianPGroup& D = G.D;
  const std::int64_t ord = restricted_char_order(D, D.add(c2.lambda, D.neg(c1.lambda)), G.D2);
  const std::vector<int>& inv2 = G.D2_invariants;
  auto left = [&](int j) { return ext_shapiro(G, G.D1, c1, c2, j, ShapiroSide::First, opt); };

  if (i < 2) {
    std::vector<OModuleClass> L, R;
    for (int j = 0; j <= i + 1; ++j) {
      L.push_back(left(j));
      R.push_back(ext_abelian_closed(G.p, inv2, ord, j));
    }
    return kunneth_assemble(L, R, i);
  }

  const OModuleClass L0 = left(0), L1 = left(1), L2 = left(2);
  auto tensor = [](const OModuleClass& a, const OModuleClass& b) { return tensor_tor(a, b, TensorKind::Tensor); };
  OModuleClass out;
  if (ord == 1) {
    for (int n : inv2) out = out + tensor(OModuleClass(0, {Valuation(G.p, n)}), L0);
    out = out + L2;
    for (int n : inv2) out = out + tensor(OModuleClass(0, {Valuation(G.p, n)}), L1);
    return out;
  }
  const OModuleClass Q(0, {val_one_minus_zeta(G.p, p_adic_order(ord, G.p))});
  const int r = static_cast<int>(inv2.size());
  for (int k = 0; k < r - 1; ++k) out = out + tensor(Q, L0);
  for (int k = 0; k < r; ++k) out = out + tensor(Q, L1);
  return out + tensor(Q, L2);
}

OModuleClass ext_block(const SemidirectGroup& G, const BlockCharacter& c1, const BlockCharacter& c2, int i,
                       ExtMode mode, const ExtOptions& opt) {
  check_degree(i);
  if (mode == ExtMode::Closed) return ext_block_closed(G, c1, c2, i, opt);
  const OModuleClass oracle = ext_shapiro(G, all_of_d(G), c1, c2, i, ShapiroSide::First, opt);
  if (mode == ExtMode::Oracle) return oracle;
  const OModuleClass closed = ext_block_closed(G, c1, c2, i, opt);
  if (!(closed == oracle))
    throw Error(Errc::CrossCheckMismatch,
                "closed form gives " + closed.to_string() + " but the oracle gives " + oracle.to_string());
  return oracle;
}

int ext1_modp(const SemidirectGroup& G, const BlockCharacter& c1, const BlockCharacter& c2, const ExtOptions& opt) {
  auto [line, rest] = shapiro_pair(G, all_of_d(G), c1, c2);
  return ext_modp(G, line, rest, 1, opt);
}

ShapeReport ext_shape_classify(const OModuleClass& e, int i) {
  ShapeReport r;
  if (i == 0) {
    if (!e.torsion().empty()) r = {false, "torsion in degree 0"};
    return r;
  }
  if (e.free_rank() != 0) return {false, "free summand in degree " + std::to_string(i)};
  if (i == 1)
    for (const Valuation& v : e.torsion()) {
      // v(1 - zeta_{p^n}) = 1 / (p^(n-1) (p - 1))
      const std::int64_t p = v.prime();
      std::int64_t q = v.den() % (p - 1) == 0 ? v.den() / (p - 1) : 0;
      while (q > 1 && q % p == 0) q /= p;
      if (v.num() != 1 || q != 1) return {false, "valuation " + v.to_string() + " is not that of 1 - zeta"};
    }
  return r;
}

}  // namespace blockext
