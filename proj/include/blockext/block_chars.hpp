#pragma once

#include <cstdint>
#include <vector>

#include "blockext/block_spec.hpp"
#include "blockext/class_function.hpp"

namespace blockext {

/// lambda_y(x) in Q(zeta_exp D).
CycloNumber linear_char_value(const AbelianPGroup& D, int y, int x);
/// Order of lambda_y in the dual group.
int linear_char_order(const AbelianPGroup& D, int y);

/// {chi in Irr(F) : chi(z) = chi(1) zeta_|z|^phi_exponent} for z generating
/// the central cyclic subgroup Z; z is a local index of F.
std::vector<ClassFunction> irr_over_phi(const GroupPtr& F, int z, std::int64_t phi_exponent);

/// (lambda, chi) with lambda an orbit representative and chi in Irr(E_lambda | phi).
struct BlockCharacter {
  int orbit = 0;
  int lambda = 0;
  GroupPtr E_lambda;      // subgroup of E
  ClassFunction chi;      // on E_lambda
  int chi_index = 0;      // position within irr_over_phi(E_lambda)
  std::int64_t degree = 0;
  ClassFunction induced;  // (lambda, chi) induced to G
};

/// Everything character-theoretic about B, built once per validated spec.
struct BlockCharacters {
  std::vector<CharOrbit> orbits;
  std::vector<GroupPtr> stabilizers;   // per orbit, subgroup of E
  std::vector<BlockCharacter> irr;     // ordered by orbit, then chi_index
  std::vector<ClassFunction> ibr;      // Irr(E | phi)
  std::vector<std::vector<int>> decomposition;  // irr x ibr multiplicities
};

/// Irr(B) with the degree-square check sum = |G|/|Z| and pairwise
/// distinctness of the induced characters.
BlockCharacters build_irr_B(const SemidirectGroup& G);

/// (lambda, chi) on D x| E_lambda, as a class function of that subgroup of G.
ClassFunction lambda_chi(const SemidirectGroup& G, int lambda, const ClassFunction& chi);

/// chi induced from E_lambda to E, expanded in Irr(E | phi).
std::vector<int> reduce_to_brauer(const BlockCharacter& c, const std::vector<ClassFunction>& ibr, const GroupPtr& E);

/// Indices of irr whose reduction is exactly ibr[psi].
std::vector<int> lifts_of(int psi, const BlockCharacters& B);

}  // namespace blockext
