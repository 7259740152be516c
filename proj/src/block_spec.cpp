#include "blockext/block_spec.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

#include "blockext/errors.hpp"
#include "blockext/valuation.hpp"

namespace blockext {

AbelianPGroup::AbelianPGroup(std::int64_t p, std::vector<int> exponents) : p_(p), n_(std::move(exponents)) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "p must be prime");
  std::int64_t size = 1;
  for (int n : n_) {
    if (n < 1) throw Error(Errc::InvalidInput, "cyclic factor exponents must be positive");
    mod_.push_back(ipow(p, n));
    size *= mod_.back();
    exp_ = std::max(exp_, mod_.back());
    if (size > 2048) throw Error(Errc::OrderBoundExceeded, "|D| exceeds 2048");
  }
  size_ = static_cast<int>(size);
  add_.resize(static_cast<std::size_t>(size_) * size_);
  neg_.resize(static_cast<std::size_t>(size_));
  for (int a = 0; a < size_; ++a) {
    auto va = vec(a);
    std::vector<std::int64_t> w(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) w[i] = (mod_[i] - va[i]) % mod_[i];
    neg_[a] = index(w);
    for (int b = 0; b < size_; ++b) {
      auto vb = vec(b);
      for (std::size_t i = 0; i < va.size(); ++i) w[i] = (va[i] + vb[i]) % mod_[i];
      add_[static_cast<std::size_t>(a) * size_ + b] = index(w);
    }
  }
}

bool AbelianPGroup::no_c2_factor() const {
  if (p_ != 2) return true;
  return std::all_of(n_.begin(), n_.end(), [](int n) { return n > 1; });
}

int AbelianPGroup::index(const std::vector<std::int64_t>& v) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < n_.size(); ++i) {
    std::int64_t c = v[i] % mod_[i];
    if (c < 0) c += mod_[i];
    idx = idx * mod_[i] + c;
  }
  return static_cast<int>(idx);
}

std::vector<std::int64_t> AbelianPGroup::vec(int index) const {
  std::vector<std::int64_t> v(n_.size());
  std::int64_t r = index;
  for (std::size_t i = n_.size(); i-- > 0;) {
    v[i] = r % mod_[i];
    r /= mod_[i];
  }
  return v;
}

int AbelianPGroup::scale(int a, std::int64_t k) const {
  auto v = vec(a);
  for (auto& c : v) c *= k;
  return index(v);
}

int AbelianPGroup::basis(int i) const {
  std::vector<std::int64_t> v(n_.size(), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return index(v);
}

std::int64_t AbelianPGroup::pairing(int y, int x) const {
  auto vy = vec(y), vx = vec(x);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_.size(); ++i) s = (s + vy[i] * vx[i] % mod_[i] * (exp_ / mod_[i])) % exp_;
  return s;
}

int AbelianPGroup::element_order(int a) const {
  int k = 1;
  for (int cur = a; cur != 0; cur = add(cur, a)) ++k;
  return k;
}

void check_action_matrix(const AbelianPGroup& D, const ActionMatrix& A) {
  const int t = D.rank();
  if (static_cast<int>(A.size()) != t) throw Error(Errc::ActionInvalid, "action matrix has wrong row count");
  for (int i = 0; i < t; ++i) {
    if (static_cast<int>(A[i].size()) != t) throw Error(Errc::ActionInvalid, "action matrix has wrong column count");
    for (int j = 0; j < t; ++j) {
      const int gap = std::max(0, D.exponents()[i] - D.exponents()[j]);
      if (A[i][j] % ipow(D.p(), gap) != 0)
        throw Error(Errc::ActionInvalid, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") does not respect the factor orders");
    }
  }
  auto perm = action_permutation(D, A);
  std::vector<char> seen(static_cast<std::size_t>(D.order()), 0);
  for (int y : perm) {
    if (seen[y]) throw Error(Errc::ActionInvalid, "action matrix is not an automorphism of D");
    seen[y] = 1;
  }
}

std::vector<int> action_permutation(const AbelianPGroup& D, const ActionMatrix& A) {
  std::vector<int> out(static_cast<std::size_t>(D.order()));
  const int t = D.rank();
  for (int x = 0; x < D.order(); ++x) {
    auto v = D.vec(x);
    std::vector<std::int64_t> w(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; ++i) {
      const std::int64_t m = D.modulus(i);
      for (int j = 0; j < t; ++j) w[i] = (w[i] + (A[i][j] % m + m) % m * v[j]) % m;
    }
    out[x] = D.index(w);
  }
  return out;
}

std::vector<int> span(const AbelianPGroup& D, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(D.order()), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (int g : gens) {
      int y = D.add(out[h], g);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> abelian_invariants(const AbelianPGroup& D, const std::vector<int>& elements) {
  // |Omega_k| / |Omega_{k-1}| = p^(number of factors of order >= p^k)
  std::vector<int> at_least;
  std::int64_t prev = 1;
  for (int k = 1;; ++k) {
    std::int64_t cnt = 0;
    for (int x : elements)
      if (D.scale(x, ipow(D.p(), k)) == 0) ++cnt;
    if (cnt == prev) break;
    at_least.push_back(static_cast<int>(p_adic_order(cnt / prev, D.p())));
    prev = cnt;
  }
  std::vector<int> inv;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - next; ++c) inv.push_back(static_cast<int>(k) + 1);
  }
  return inv;
}

std::int64_t SemidirectGroup::phi_exponent_at(int z) const {
  int cur = 0;
  for (int j = 0; j < z_order(); ++j) {
    if (cur == z) return (j * phi_exponent) % z_order();
    cur = E->mul(cur, z_generator);
  }
  throw Error(Errc::InvalidInput, "element is not in Z");
}

SemidirectGroup validate_block_spec(const BlockSpec& spec) {
  SemidirectGroup G;
  G.p = spec.p;
  G.D = AbelianPGroup(spec.p, spec.exponents);
  const AbelianPGroup& D = G.D;
  G.no_c2_factor = D.no_c2_factor();
  if (!G.no_c2_factor && !spec.allow_c2_factors)
    throw Error(Errc::AssumptionViolated, "p = 2 and D has a direct factor of order 2");
  if (spec.generators.size() != spec.actions.size())
    throw Error(Errc::InvalidInput, "one action matrix is needed per generator");
  G.E = FiniteGroup::from_permutations(spec.generators, spec.order_bound);
  const FiniteGroup& E = *G.E;
  if (E.order() % spec.p == 0) throw Error(Errc::PrimeDividesE, "p divides |E| = " + std::to_string(E.order()));

  const int nd = D.order(), ne = E.order();
  std::vector<std::vector<int>> gen_perm;
  for (const auto& A : spec.actions) {
    check_action_matrix(D, A);
    gen_perm.push_back(action_permutation(D, A));
  }
  // Extend along the breadth-first construction, then check every product.
  G.act.assign(static_cast<std::size_t>(nd) * ne, -1);
  for (int x = 0; x < nd; ++x) G.act[x] = x;
  std::vector<char> done(static_cast<std::size_t>(ne), 0);
  done[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int a = queue[h];
    for (std::size_t g = 0; g < gen_perm.size(); ++g) {
      const int b = E.mul(a, E.generators()[g]);
      if (done[b]) continue;
      done[b] = 1;
      queue.push_back(b);
      for (int x = 0; x < nd; ++x)
        G.act[static_cast<std::size_t>(b) * nd + x] = G.act[static_cast<std::size_t>(a) * nd + gen_perm[g][x]];
    }
  }
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b) {
      const int ab = E.mul(a, b);
      for (int x = 0; x < nd; ++x)
        if (G.act_on(ab, x) != G.act_on(a, G.act_on(b, x)))
          throw Error(Errc::ActionInvalid, "the action does not extend to a homomorphism on E");
    }

  // Action on characters: (e.lambda)(x) = lambda(e^-1 . x), read off on the basis.
  G.char_act.assign(static_cast<std::size_t>(nd) * ne, 0);
  for (int e = 0; e < ne; ++e) {
    const int ei = E.inv(e);
    for (int y = 0; y < nd; ++y) {
      std::vector<std::int64_t> w(static_cast<std::size_t>(D.rank()));
      for (int j = 0; j < D.rank(); ++j)
        w[j] = D.pairing(y, G.act_on(ei, D.basis(j))) / (D.exponent() / D.modulus(j));
      G.char_act[static_cast<std::size_t>(e) * nd + y] = D.index(w);
    }
  }

  for (int e = 0; e < ne; ++e) {
    bool trivial = true;
    for (int x = 0; x < nd && trivial; ++x) trivial = G.act_on(e, x) == x;
    if (trivial) G.Z.push_back(e);
  }
  for (int z : G.Z)
    for (int e = 0; e < ne; ++e)
      if (E.mul(z, e) != E.mul(e, z)) throw Error(Errc::ZNotCentral, "C_E(D) is not central in E");
  const int zo = G.z_order();
  G.z_generator = -1;
  for (int z : G.Z)
    if (E.element_order(z) == zo) {
      G.z_generator = z;
      break;
    }
  if (G.z_generator < 0) throw Error(Errc::ZNotCyclic, "C_E(D) is not cyclic");
  G.phi_exponent = spec.phi.value_or(zo == 1 ? 0 : 1) % zo;
  if (G.phi_exponent < 0) G.phi_exponent += zo;
  if (std::gcd(G.phi_exponent, static_cast<std::int64_t>(zo)) != 1)
    throw Error(Errc::PhiNotFaithful, "phi is not faithful on Z");

  std::vector<int> comm;
  for (int g : E.generators())
    for (int j = 0; j < D.rank(); ++j) {
      const int x = D.basis(j);
      comm.push_back(D.add(G.act_on(g, x), D.neg(x)));
    }
  G.D1 = span(D, comm);
  for (int x = 0; x < nd; ++x) {
    bool fixed = true;
    for (int g : E.generators()) fixed = fixed && G.act_on(g, x) == x;
    if (fixed) G.D2.push_back(x);
  }
  std::vector<int> both;
  std::set_intersection(G.D1.begin(), G.D1.end(), G.D2.begin(), G.D2.end(), std::back_inserter(both));
  if (both.size() != 1 || G.D1.size() * G.D2.size() != static_cast<std::size_t>(nd))
    throw Error(Errc::DecompositionFailed, "D is not the direct product of [D,E] and C_D(E)");
  G.D1_invariants = abelian_invariants(D, G.D1);
  G.D2_invariants = abelian_invariants(D, G.D2);

  std::vector<int> d_gens;
  for (int j = 0; j < D.rank(); ++j) d_gens.push_back(D.basis(j));
  G.G = FiniteGroup::semidirect(nd, D.add_table(), d_gens, G.E, G.act);
  return G;
}

std::vector<CharOrbit> orbits_and_stabilizers(const SemidirectGroup& G) {
  const int nd = G.d_order();
  std::vector<char> seen(static_cast<std::size_t>(nd), 0);
  std::vector<CharOrbit> out;
  for (int y = 0; y < nd; ++y) {
    if (seen[y]) continue;
    CharOrbit o;
    o.representative = y;
    for (int e = 0; e < G.E->order(); ++e) {
      const int z = G.act_on_char(e, y);
      if (!seen[z]) {
        seen[z] = 1;
        o.orbit.push_back(z);
      }
      if (z == y) o.stabilizer.push_back(e);
    }
    std::sort(o.orbit.begin(), o.orbit.end());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace blockext
