#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace blockext {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
using Perm = std::vector<int>;

/// Finite group on element indices 0..order-1, identity at 0.
///
/// Three storage kinds share one interface: an explicit Cayley table, a
/// semidirect product D x| E multiplied by formula (index x + |D| e), and a
/// subgroup of another group that delegates multiplication to its parent.
/// Conjugacy classes are computed at construction.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  /// Closure of permutation generators, elements in breadth-first order from
  /// the identity with generators tried in the given order.
  static GroupPtr from_permutations(const std::vector<Perm>& gens, std::int64_t order_bound = 512);
  /// `table[a * n + b]` is the index of a*b; identity must be 0.
  static GroupPtr from_table(int n, std::vector<int> table, std::vector<int> generators);
  /// D x| E with D abelian given by its addition table, `act[e * |D| + x]` the
  /// image of x under e.  Element (x, e) has index x + |D| e.
  static GroupPtr semidirect(int d_order, std::vector<int> d_add, std::vector<int> d_gens, GroupPtr E,
                             std::vector<int> act);

  /// Subgroup on the given element set (any order); throws NotSubgroup.
  GroupPtr subgroup(std::vector<int> elements) const;
  GroupPtr generated_subgroup(const std::vector<int>& gens) const;

  int order() const { return n_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int pow(int a, std::int64_t k) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int a) const { return elt_order_[a]; }
  int exponent() const { return exponent_; }
  const std::vector<int>& generators() const { return gens_; }
  bool is_abelian() const;

  /// Parent group for subgroups, null otherwise.
  const GroupPtr& parent() const { return parent_; }
  int to_parent(int a) const { return parent_ ? to_parent_[a] : a; }
  /// Local index of a parent element, -1 when not a member.
  int from_parent(int a) const { return parent_ ? from_parent_[a] : a; }
  /// Outermost ancestor and the index map into it.
  const FiniteGroup& root() const;
  int to_root(int a) const;
  /// Local index of a root element, -1 when not a member.
  int from_root(int a) const;
  std::vector<int> elements_in_root() const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int a) const { return class_of_[a]; }
  const std::vector<int>& class_elements(int c) const { return classes_[c]; }
  int class_rep(int c) const { return classes_[c].front(); }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }

  /// Permutation images when built from permutations.
  const std::vector<Perm>& permutations() const { return perms_; }

 private:
  enum class Kind { Table, Semidirect, Sub };
  FiniteGroup() = default;
  void finish();  // inverses, orders, classes

  Kind kind_ = Kind::Table;
  int n_ = 1;
  std::vector<int> gens_;
  std::vector<int> table_;
  // semidirect
  int d_ = 1;
  std::vector<int> d_add_, d_neg_, act_;
  GroupPtr e_;
  // subgroup
  GroupPtr parent_;
  std::vector<int> to_parent_, from_parent_;

  std::vector<int> inv_, elt_order_;
  int exponent_ = 1;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<Perm> perms_;
};

/// Sorted element set of the subgroup generated by `gens` inside G.
std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens);

/// True when the set is non-empty and closed under multiplication.
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elements);

/// Representatives of H\G/K: least element index of each double coset.
/// H and K are element sets of G.
std::vector<int> double_cosets(const FiniteGroup& G, const std::vector<int>& H, const std::vector<int>& K);

/// Least representatives of the left cosets gH.
std::vector<int> left_transversal(const FiniteGroup& G, const std::vector<int>& H);

std::vector<int> centralizer(const FiniteGroup& G, const std::vector<int>& S);
std::vector<int> center(const FiniteGroup& G);

}  // namespace blockext
