#include "blockext/block_chars.hpp"

#include <numeric>

#include "blockext/char_table.hpp"
#include "blockext/errors.hpp"

namespace blockext {

CycloNumber linear_char_value(const AbelianPGroup& D, int y, int x) {
  return CycloNumber::root_of_unity(static_cast<int>(D.exponent()), D.pairing(y, x));
}

int linear_char_order(const AbelianPGroup& D, int y) { return D.element_order(y); }

std::vector<ClassFunction> irr_over_phi(const GroupPtr& F, int z, std::int64_t phi_exponent) {
  for (int g : F->generators())
    if (F->mul(g, z) != F->mul(z, g)) throw Error(Errc::ZNotCentral, "Z is not central in the subgroup");
  const int zo = F->element_order(z);
  const CycloNumber phi = CycloNumber::root_of_unity(zo, phi_exponent);
  std::vector<ClassFunction> out;
  for (const auto& chi : char_table(F))
    if (chi.at(z) == chi.values[0] * phi) out.push_back(chi);
  return out;
}

ClassFunction lambda_chi(const SemidirectGroup& G, int lambda, const ClassFunction& chi) {
  const FiniteGroup& El = *chi.group;
  std::vector<int> elems;
  for (int e = 0; e < El.order(); ++e)
    for (int x = 0; x < G.d_order(); ++x) elems.push_back(G.g_index(x, El.to_root(e)));
  GroupPtr H = G.G->subgroup(elems);
  std::vector<CycloNumber> v;
  for (int c = 0; c < H->num_classes(); ++c) {
    const int g = H->to_parent(H->class_rep(c));
    const int x = g % G.d_order(), e = g / G.d_order();
    v.push_back(linear_char_value(G.D, lambda, x) * chi.at(El.from_root(e)));
  }
  return ClassFunction(H, std::move(v));
}

std::vector<int> reduce_to_brauer(const BlockCharacter& c, const std::vector<ClassFunction>& ibr, const GroupPtr& E) {
  const ClassFunction up = induce(c.chi, E);
  std::vector<int> mult;
  Rational accounted = 0;
  for (const auto& psi : ibr) {
    const Rational m = inner_product(up, psi);
    if (m.get_den() != 1 || m < 0) throw Error(Errc::DimensionCheck, "non-integral multiplicity");
    mult.push_back(static_cast<int>(m.get_num().get_si()));
    accounted += m * psi.degree();
  }
  if (accounted != up.degree()) throw Error(Errc::DimensionCheck, "reduction leaves Irr(E | phi)");
  return mult;
}

BlockCharacters build_irr_B(const SemidirectGroup& G) {
  BlockCharacters B;
  B.orbits = orbits_and_stabilizers(G);
  const int z_root = G.z_generator;
  B.ibr = irr_over_phi(G.E, z_root, G.phi_exponent);
  for (std::size_t o = 0; o < B.orbits.size(); ++o) {
    GroupPtr El = G.E->subgroup(B.orbits[o].stabilizer);
    B.stabilizers.push_back(El);
    const int z = El->from_root(z_root);
    if (z < 0) throw Error(Errc::NotSubgroup, "stabilizer does not contain Z");
    auto chis = irr_over_phi(El, z, G.phi_exponent);
    for (std::size_t i = 0; i < chis.size(); ++i) {
      BlockCharacter c;
      c.orbit = static_cast<int>(o);
      c.lambda = B.orbits[o].representative;
      c.E_lambda = El;
      c.chi = chis[i];
      c.chi_index = static_cast<int>(i);
      c.degree = c.chi.degree().get_num().get_si() * static_cast<std::int64_t>(B.orbits[o].orbit.size());
      c.induced = induce(lambda_chi(G, c.lambda, c.chi), G.G);
      B.irr.push_back(std::move(c));
    }
  }
  std::int64_t sum = 0;
  for (const auto& c : B.irr) sum += c.degree * c.degree;
  if (sum != G.G->order() / G.z_order())
    throw Error(Errc::DimensionCheck, "sum of squared degrees " + std::to_string(sum) + " differs from |G|/|Z|");
  for (std::size_t a = 0; a < B.irr.size(); ++a) {
    if (B.irr[a].induced.degree() != B.irr[a].degree) throw Error(Errc::DimensionCheck, "induced degree mismatch");
    for (std::size_t b = 0; b < a; ++b)
      if (B.irr[a].induced == B.irr[b].induced) throw Error(Errc::DimensionCheck, "two parameters give one character");
  }
  for (const auto& c : B.irr) B.decomposition.push_back(reduce_to_brauer(c, B.ibr, G.E));
  return B;
}

std::vector<int> lifts_of(int psi, const BlockCharacters& B) {
  std::vector<int> out;
  for (std::size_t i = 0; i < B.irr.size(); ++i) {
    const auto& row = B.decomposition[i];
    bool exact = true;
    for (std::size_t j = 0; j < row.size(); ++j) exact = exact && row[j] == (static_cast<int>(j) == psi ? 1 : 0);
    if (exact) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace blockext
