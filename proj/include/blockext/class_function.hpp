#pragma once

#include <vector>

#include "blockext/cyclo.hpp"
#include "blockext/finite_group.hpp"

namespace blockext {

/// Values on the conjugacy classes of a group, in the group's class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<CycloNumber> values;

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<CycloNumber> v);
  static ClassFunction constant(GroupPtr g, const Rational& c);
  /// Value |G| at the identity, 0 elsewhere.
  static ClassFunction regular(GroupPtr g);

  const CycloNumber& at(int element) const { return values[group->class_of(element)]; }
  /// Value at the identity; integral for characters.
  Rational degree() const;
  ClassFunction conj() const;

  ClassFunction& operator+=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(ClassFunction a, const Rational& r);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

/// (1/|G|) sum_g a(g) conj(b(g)); throws MismatchedGroups.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Restriction to H; H must share a root with the function's group and lie in it.
ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& H);
/// Induction to G; the function's group must lie in G (same root).
ClassFunction induce(const ClassFunction& chi, const GroupPtr& G);

/// Total order on cyclotomic numbers (coefficients in a common conductor).
bool cyclo_less(const CycloNumber& a, const CycloNumber& b);
/// Degree first, then the trivial character, then values in class order.
bool character_less(const ClassFunction& a, const ClassFunction& b);

/// One summand of (chi induced from K to G) restricted to H.
struct MackeyPiece {
  int representative;    // double coset representative g in G
  ClassFunction piece;   // induced from H n gKg^-1 to H of the conjugate of chi
};

/// Mackey decomposition; H and K subgroups of G (by root).  The sum of the
/// pieces is checked against the direct restriction.
std::vector<MackeyPiece> mackey_restrict_induced(const GroupPtr& H, const ClassFunction& chi_K, const GroupPtr& G);

}  // namespace blockext
