#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blockext/finite_group.hpp"

namespace blockext {

/// D = C_{p^n_1} x ... x C_{p^n_t}.  Elements are exponent vectors, indexed
/// in mixed radix with the last coordinate fastest, so index order is
/// lexicographic order.  Linear characters use the same indexing: lambda_y
/// sends x to zeta_{exp D}^{pairing(y, x)}.
class AbelianPGroup {
 public:
  AbelianPGroup() = default;
  AbelianPGroup(std::int64_t p, std::vector<int> exponents);

  std::int64_t p() const { return p_; }
  const std::vector<int>& exponents() const { return n_; }
  int rank() const { return static_cast<int>(n_.size()); }
  int order() const { return size_; }
  /// exp(D) = p^max n_i.
  std::int64_t exponent() const { return exp_; }
  std::int64_t modulus(int i) const { return mod_[i]; }
  /// All n_i > 1 when p = 2.
  bool no_c2_factor() const;

  int index(const std::vector<std::int64_t>& v) const;
  std::vector<std::int64_t> vec(int index) const;
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int scale(int a, std::int64_t k) const;
  const std::vector<int>& add_table() const { return add_; }
  /// Index of the i-th standard basis vector.
  int basis(int i) const;
  /// sum_i y_i x_i exp/p^{n_i} mod exp.
  std::int64_t pairing(int y, int x) const;
  int element_order(int a) const;

 private:
  std::int64_t p_ = 2;
  std::vector<int> n_;
  std::vector<std::int64_t> mod_;
  int size_ = 1;
  std::int64_t exp_ = 1;
  std::vector<int> add_, neg_;
};

using ActionMatrix = std::vector<std::vector<std::int64_t>>;

/// Entry (i,j) divisible by p^max(0, n_i - n_j) and the induced map bijective.
void check_action_matrix(const AbelianPGroup& D, const ActionMatrix& A);
/// Image of every element of D, as an index permutation.
std::vector<int> action_permutation(const AbelianPGroup& D, const ActionMatrix& A);

/// Abelian invariants (exponents n_i, ascending) of a subgroup of D.
std::vector<int> abelian_invariants(const AbelianPGroup& D, const std::vector<int>& elements);
/// Sorted element set of the subgroup of D generated by `gens`.
std::vector<int> span(const AbelianPGroup& D, const std::vector<int>& gens);

/// Raw block specification before validation.
struct BlockSpec {
  std::int64_t p = 0;
  std::vector<int> exponents;
  std::vector<Perm> generators;
  std::vector<ActionMatrix> actions;
  std::optional<std::int64_t> phi;
  std::int64_t order_bound = 512;
  bool allow_c2_factors = false;
};

/// Validated G = D x| E with Z = C_E(D), phi in Irr(Z), D = D1 x D2.
struct SemidirectGroup {
  std::int64_t p = 0;
  AbelianPGroup D;
  GroupPtr E;
  GroupPtr G;                     // element (x, e) has index x + |D| e
  std::vector<int> act;           // act[e |D| + x] = e.x
  std::vector<int> char_act;      // char_act[e |D| + y] = index of e.lambda_y
  std::vector<int> Z;             // element set of E
  int z_generator = 0;
  std::int64_t phi_exponent = 0;  // phi(z_generator) = zeta_|Z|^phi_exponent
  std::vector<int> D1, D2;        // element sets of D
  std::vector<int> D1_invariants, D2_invariants;
  bool no_c2_factor = true;

  int d_order() const { return D.order(); }
  int g_index(int x, int e) const { return x + D.order() * e; }
  int z_order() const { return static_cast<int>(Z.size()); }
  /// k with phi(z) = zeta_|Z|^k; z must lie in Z.
  std::int64_t phi_exponent_at(int z) const;
  /// The E-action on D restricted to elements in `subset` is closed there.
  int act_on(int e, int x) const { return act[static_cast<std::size_t>(e) * D.order() + x]; }
  int act_on_char(int e, int y) const { return char_act[static_cast<std::size_t>(e) * D.order() + y]; }
};

SemidirectGroup validate_block_spec(const BlockSpec& spec);

struct CharOrbit {
  std::vector<int> orbit;        // character indices, ascending
  int representative = 0;        // least index
  std::vector<int> stabilizer;   // element set of E
};

/// Orbits of E on Irr(D), ordered by representative.
std::vector<CharOrbit> orbits_and_stabilizers(const SemidirectGroup& G);

}  // namespace blockext
