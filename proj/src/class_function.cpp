#include "blockext/class_function.hpp"

#include <algorithm>
#include <numeric>

#include "blockext/errors.hpp"

namespace blockext {

namespace {

void same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group.get() != b.group.get()) throw Error(Errc::MismatchedGroups, "class functions on different groups");
}

// Elements of `sub` as local indices of `G`; throws unless sub lies in G.
std::vector<int> embed_elements(const FiniteGroup& sub, const FiniteGroup& G) {
  if (&sub.root() != &G.root()) throw Error(Errc::MismatchedGroups, "groups do not share an ambient group");
  std::vector<int> out(static_cast<std::size_t>(sub.order()));
  for (int a = 0; a < sub.order(); ++a) {
    out[a] = G.from_root(sub.to_root(a));
    if (out[a] < 0) throw Error(Errc::NotSubgroup, "group is not contained in the target");
  }
  return out;
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<CycloNumber> v) : group(std::move(g)), values(std::move(v)) {
  if (static_cast<int>(values.size()) != group->num_classes())
    throw Error(Errc::InvalidInput, "class function needs one value per class");
}

ClassFunction ClassFunction::constant(GroupPtr g, const Rational& c) {
  std::vector<CycloNumber> v(static_cast<std::size_t>(g->num_classes()), CycloNumber(1, c));
  return ClassFunction(std::move(g), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr g) {
  std::vector<CycloNumber> v(static_cast<std::size_t>(g->num_classes()), CycloNumber(1));
  v[0] = CycloNumber(1, Rational(g->order()));
  return ClassFunction(std::move(g), std::move(v));
}

Rational ClassFunction::degree() const {
  auto r = values[0].rational_value();
  if (!r) throw Error(Errc::InvalidInput, "value at the identity is not rational");
  return *r;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction out = *this;
  for (auto& v : out.values) v = v.conj();
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  same_group(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

ClassFunction operator*(ClassFunction a, const Rational& r) {
  for (auto& v : a.values) v *= r;
  return a;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group.get() == b.group.get() && a.values == b.values;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  CycloNumber s(1);
  for (int c = 0; c < a.group->num_classes(); ++c)
    s += a.values[c] * b.values[c].conj() * Rational(a.group->class_size(c));
  auto r = s.rational_value();
  if (!r) throw Error(Errc::InvalidInput, "inner product is not rational");
  return *r / a.group->order();
}

ClassFunction restrict_to(const ClassFunction& chi, const GroupPtr& H) {
  auto emb = embed_elements(*H, *chi.group);
  std::vector<CycloNumber> v;
  v.reserve(static_cast<std::size_t>(H->num_classes()));
  for (int c = 0; c < H->num_classes(); ++c) v.push_back(chi.at(emb[H->class_rep(c)]));
  return ClassFunction(H, std::move(v));
}

ClassFunction induce(const ClassFunction& chi, const GroupPtr& G) {
  const FiniteGroup& H = *chi.group;
  auto emb = embed_elements(H, *G);
  std::vector<int> local(static_cast<std::size_t>(G->order()), -1);
  for (int a = 0; a < H.order(); ++a) local[emb[a]] = a;
  auto T = left_transversal(*G, emb);
  std::vector<CycloNumber> v(static_cast<std::size_t>(G->num_classes()), CycloNumber(1));
  for (int c = 0; c < G->num_classes(); ++c) {
    const int g = G->class_rep(c);
    for (int t : T) {
      const int y = local[G->conj(G->inv(t), g)];
      if (y >= 0) v[c] += chi.at(y);
    }
  }
  return ClassFunction(G, std::move(v));
}

bool cyclo_less(const CycloNumber& a, const CycloNumber& b) {
  const int m = std::lcm(a.conductor(), b.conductor());
  auto ea = a.embed(m), eb = b.embed(m);
  return std::lexicographical_compare(ea.coeffs().begin(), ea.coeffs().end(), eb.coeffs().begin(),
                                      eb.coeffs().end(), [](const Rational& x, const Rational& y) { return x < y; });
}

bool character_less(const ClassFunction& a, const ClassFunction& b) {
  const Rational da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto trivial = [](const ClassFunction& f) {
    return std::all_of(f.values.begin(), f.values.end(), [](const CycloNumber& v) { return v == CycloNumber(1, 1); });
  };
  const bool ta = trivial(a), tb = trivial(b);
  if (ta != tb) return ta;
  for (std::size_t i = 0; i < a.values.size() && i < b.values.size(); ++i) {
    if (cyclo_less(a.values[i], b.values[i])) return true;
    if (cyclo_less(b.values[i], a.values[i])) return false;
  }
  return false;
}

std::vector<MackeyPiece> mackey_restrict_induced(const GroupPtr& H, const ClassFunction& chi_K, const GroupPtr& G) {
  const GroupPtr& K = chi_K.group;
  auto h_in_g = embed_elements(*H, *G);
  auto k_in_g = embed_elements(*K, *G);
  std::vector<int> k_local(static_cast<std::size_t>(G->order()), -1);
  for (int a = 0; a < K->order(); ++a) k_local[k_in_g[a]] = a;

  std::vector<MackeyPiece> out;
  for (int g : double_cosets(*G, h_in_g, k_in_g)) {
    // H n gKg^-1 as local indices of H, and chi^g(y) = chi(g^-1 y g) on it
    std::vector<int> inter;
    for (int a = 0; a < H->order(); ++a)
      if (k_local[G->conj(G->inv(g), h_in_g[a])] >= 0) inter.push_back(a);
    GroupPtr S = H->subgroup(inter);
    std::vector<CycloNumber> v;
    for (int c = 0; c < S->num_classes(); ++c) {
      const int y = h_in_g[S->to_parent(S->class_rep(c))];
      v.push_back(chi_K.at(k_local[G->conj(G->inv(g), y)]));
    }
    out.push_back({g, induce(ClassFunction(S, std::move(v)), H)});
  }
  ClassFunction sum = ClassFunction::constant(H, 0);
  for (const auto& p : out) sum += p.piece;
  if (!(sum == restrict_to(induce(chi_K, G), H)))
    throw Error(Errc::DimensionCheck, "Mackey pieces do not sum to the restriction");
  return out;
}

}  // namespace blockext
