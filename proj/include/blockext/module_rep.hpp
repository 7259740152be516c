#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blockext/block_chars.hpp"
#include "blockext/ring_matrix.hpp"

namespace blockext {

/// O/p^N with roots of unity of order exp(E) exp(D).
RingPtr ring_for(const SemidirectGroup& G, int N);
/// Prime field F_l with l = 1 mod the conductor of ring_for(G, N).
RingPtr aux_field_for(const SemidirectGroup& G);
/// The residue field k = O/pi of ring_for(G, N).
RingPtr residue_field_for(const SemidirectGroup& G);

/// Representation of a subgroup D' x| F of G (D' <= D, F <= E, F stabilizing
/// D') over a chain ring.  Matrices are stored for every element of D' and of
/// F; the element (x, e) of G acts as on_d(x) * on_f(e).
struct ModuleRep {
  const SemidirectGroup* G = nullptr;
  std::vector<int> d_part;         // sorted indices of D
  std::vector<int> f_part;         // sorted local indices of E
  RingPtr ring;
  int rank = 0;
  std::vector<RingMatrix> d_mats;  // indexed by D, empty outside D'
  std::vector<RingMatrix> f_mats;  // indexed by E, empty outside F
  std::string provenance;

  const RingMatrix& on_d(int x) const;
  const RingMatrix& on_f(int e) const;
  RingMatrix on(int g) const;
};

/// A module given independently of the coefficient ring.
using ModuleRecipe = std::function<ModuleRep(const RingPtr&)>;

ChainRing::Elem trace(const RingMatrix& m);

/// Matrices of V_chi, indexed by the local elements of chi's group (a
/// subgroup of E).  V_chi is cut out of the regular module by e_chi e_nu for a
/// linear character nu of a small subgroup with <chi|_S, nu> = 1.
std::vector<RingMatrix> realize_character(const ClassFunction& chi, const RingPtr& R);

/// (lambda restricted to D', chi) on D' x| E_lambda.
ModuleRep line_module(const SemidirectGroup& G, const std::vector<int>& d_part, int lambda, const ClassFunction& chi,
                      const RingPtr& R);
/// Induction from D' x| F0 to D' x| F, F0 <= F.
ModuleRep induce_module(const ModuleRep& M, const std::vector<int>& f_part);
ModuleRep restrict_module(const ModuleRep& M, const std::vector<int>& d_part, const std::vector<int>& f_part);
/// Contragredient: g acts by the transpose of g^-1.
ModuleRep dual(const ModuleRep& M);
/// M1^* (x) M2 with the diagonal action.
ModuleRep hom_module(const ModuleRep& M1, const ModuleRep& M2);
/// Entries reduced modulo pi into the residue field k of M's ring.
ModuleRep reduce_to_residue(const ModuleRep& M, const RingPtr& k);

/// M_c = V_chi extended by lambda and induced to D' x| E.  With d_part = D
/// this is the module of c itself; its trace is checked against c.induced.
ModuleRep build_module_rep(const SemidirectGroup& G, const BlockCharacter& c, const RingPtr& R);
ModuleRep build_module_rep(const SemidirectGroup& G, const std::vector<int>& d_part, const BlockCharacter& c,
                           const RingPtr& R);

/// Homomorphism property and compatibility with the action of F on D'.
/// Throws DimensionCheck.
void verify_module(const ModuleRep& M);

/// All elements of D, sorted.
std::vector<int> all_of_d(const SemidirectGroup& G);
/// All elements of E, sorted.
std::vector<int> all_of_e(const SemidirectGroup& G);
/// Elements of a subgroup of E as local indices of E, sorted.
std::vector<int> in_e(const SemidirectGroup& G, const FiniteGroup& F);

}  // namespace blockext
