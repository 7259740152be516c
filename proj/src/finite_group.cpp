#include "blockext/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "blockext/errors.hpp"

namespace blockext {

namespace {

Perm compose(const Perm& a, const Perm& b) {  // (a b)(x) = a(b(x))
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

// Minimal generating set found greedily in index order.
std::vector<int> greedy_generators(const FiniteGroup& G, const std::vector<int>& elements) {
  std::vector<int> gens;
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  in[0] = 1;
  for (int x : elements) {
    if (in[x]) continue;
    gens.push_back(x);
    for (int y : closure(G, gens)) in[y] = 1;
  }
  return gens;
}

}  // namespace

GroupPtr FiniteGroup::from_permutations(const std::vector<Perm>& gens, std::int64_t order_bound) {
  std::size_t deg = 0;
  for (const Perm& g : gens) {
    if (deg == 0) deg = g.size();
    if (g.size() != deg) throw Error(Errc::InvalidInput, "generators act on different point sets");
    std::vector<char> seen(deg, 0);
    for (int x : g) {
      if (x < 0 || static_cast<std::size_t>(x) >= deg || seen[x])
        throw Error(Errc::InvalidInput, "generator is not a permutation");
      seen[x] = 1;
    }
  }
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm y = compose(elems[head], g);
      if (index.count(y)) continue;
      if (static_cast<std::int64_t>(elems.size()) >= order_bound)
        throw Error(Errc::OrderBoundExceeded, "group order exceeds bound " + std::to_string(order_bound));
      index.emplace(y, static_cast<int>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const int n = static_cast<int>(elems.size());
  G->n_ = n;
  G->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G->table_[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  for (const Perm& g : gens) G->gens_.push_back(index.at(g));
  G->perms_ = std::move(elems);
  G->finish();
  return G;
}

GroupPtr FiniteGroup::from_table(int n, std::vector<int> table, std::vector<int> generators) {
  if (n < 1 || table.size() != static_cast<std::size_t>(n) * n) throw Error(Errc::InvalidInput, "bad table size");
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->n_ = n;
  G->table_ = std::move(table);
  G->gens_ = std::move(generators);
  G->finish();
  return G;
}

GroupPtr FiniteGroup::semidirect(int d_order, std::vector<int> d_add, std::vector<int> d_gens, GroupPtr E,
                                 std::vector<int> act) {
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->kind_ = Kind::Semidirect;
  G->d_ = d_order;
  G->n_ = d_order * E->order();
  G->d_add_ = std::move(d_add);
  G->d_neg_.assign(static_cast<std::size_t>(d_order), 0);
  for (int x = 0; x < d_order; ++x)
    for (int y = 0; y < d_order; ++y)
      if (G->d_add_[static_cast<std::size_t>(x) * d_order + y] == 0) G->d_neg_[x] = y;
  G->act_ = std::move(act);
  G->e_ = E;
  G->gens_ = std::move(d_gens);
  for (int e : E->generators()) G->gens_.push_back(d_order * e);
  G->finish();
  return G;
}

int FiniteGroup::mul(int a, int b) const {
  switch (kind_) {
    case Kind::Table:
      return table_[static_cast<std::size_t>(a) * n_ + b];
    case Kind::Semidirect: {
      const int x = a % d_, e = a / d_, y = b % d_, f = b / d_;
      const int ey = act_[static_cast<std::size_t>(e) * d_ + y];
      return d_add_[static_cast<std::size_t>(x) * d_ + ey] + d_ * e_->mul(e, f);
    }
    case Kind::Sub:
      return from_parent_[parent_->mul(to_parent_[a], to_parent_[b])];
  }
  return 0;
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  k %= elt_order_.empty() ? 1 : elt_order_[a];
  if (k < 0) k += elt_order_[a];
  int r = 0, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const FiniteGroup& FiniteGroup::root() const { return parent_ ? parent_->root() : *this; }

int FiniteGroup::to_root(int a) const { return parent_ ? parent_->to_root(to_parent_[a]) : a; }

int FiniteGroup::from_root(int a) const {
  if (!parent_) return a;
  const int b = parent_->from_root(a);
  return b < 0 ? -1 : from_parent_[b];
}

std::vector<int> FiniteGroup::elements_in_root() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) out[a] = to_root(a);
  return out;
}

void FiniteGroup::finish() {
  const int n = n_;
  inv_.assign(static_cast<std::size_t>(n), -1);
  if (kind_ == Kind::Semidirect) {
    for (int a = 0; a < n; ++a) {
      const int x = a % d_, e = a / d_;
      const int ei = e_->inv(e);
      inv_[a] = act_[static_cast<std::size_t>(ei) * d_ + d_neg_[x]] + d_ * ei;
    }
  } else {
    for (int a = 0; a < n; ++a) {
      if (inv_[a] >= 0) continue;
      // walk powers until the identity; the previous power is the inverse
      int prev = 0, cur = a;
      while (cur != 0) {
        prev = cur;
        cur = mul(cur, a);
      }
      inv_[a] = prev;
      inv_[prev] = a;
    }
  }
  elt_order_.assign(static_cast<std::size_t>(n), 0);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1, cur = a;
    while (cur != 0) {
      cur = mul(cur, a);
      ++k;
    }
    elt_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  class_of_.assign(static_cast<std::size_t>(n), -1);
  classes_.clear();
  std::vector<int> gens = gens_;
  if (gens.empty() && n > 1) gens = greedy_generators(*this, [&] {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    std::vector<int> cls{a};
    class_of_[a] = c;
    for (std::size_t h = 0; h < cls.size(); ++h)
      for (int g : gens) {
        int y = conj(g, cls[h]);
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

GroupPtr FiniteGroup::subgroup(std::vector<int> elements) const {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup(*this, elements)) throw Error(Errc::NotSubgroup, "element set is not a subgroup");
  auto H = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  H->kind_ = Kind::Sub;
  H->n_ = static_cast<int>(elements.size());
  H->parent_ = shared_from_this();
  H->from_parent_.assign(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < H->n_; ++i) H->from_parent_[elements[i]] = i;
  H->to_parent_ = elements;
  for (int g : greedy_generators(*this, elements)) H->gens_.push_back(H->from_parent_[g]);
  H->finish();
  return H;
}

GroupPtr FiniteGroup::generated_subgroup(const std::vector<int>& gens) const { return subgroup(closure(*this, gens)); }

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (int g : gens) {
      int y = G.mul(out[h], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= G.order()) return false;
  // a finite set is a subgroup iff it is the closure of generators drawn from it
  return closure(G, greedy_generators(G, sorted)) == sorted;
}

std::vector<int> double_cosets(const FiniteGroup& G, const std::vector<int>& H, const std::vector<int>& K) {
  if (!is_subgroup(G, H) || !is_subgroup(G, K)) throw Error(Errc::NotSubgroup, "double_cosets needs subgroups");
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (int h : H) {
      int hg = G.mul(h, g);
      for (int k : K) seen[G.mul(hg, k)] = 1;
    }
  }
  return reps;
}

std::vector<int> left_transversal(const FiniteGroup& G, const std::vector<int>& H) {
  if (!is_subgroup(G, H)) throw Error(Errc::NotSubgroup, "left_transversal needs a subgroup");
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (int h : H) seen[G.mul(g, h)] = 1;
  }
  return reps;
}

std::vector<int> centralizer(const FiniteGroup& G, const std::vector<int>& S) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int s : S)
      if (G.mul(g, s) != G.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<int> center(const FiniteGroup& G) { return centralizer(G, G.generators()); }

}  // namespace blockext
