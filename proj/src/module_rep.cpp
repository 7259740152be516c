#include "blockext/module_rep.hpp"

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "blockext/char_table.hpp"
#include "blockext/errors.hpp"
#include "blockext/valuation.hpp"

namespace blockext {

namespace {

RingPtr cached_ring(std::int64_t p, int N, std::int64_t m_prime, int a) {
  static std::mutex mu;
  static std::map<std::tuple<std::int64_t, int, std::int64_t, int>, RingPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, N, m_prime, a);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RingPtr R = ChainRing::create(p, N, m_prime, a);
  cache.emplace(key, R);
  return R;
}

int p_level(const SemidirectGroup& G) { return p_adic_order(G.D.exponent(), G.p); }

RingMatrix scalar(const RingPtr& R, int n, const ChainRing::Elem& s) {
  RingMatrix m(R, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, s);
  return m;
}

ModuleRep empty_like(const ModuleRep& M, const RingPtr& R, int rank) {
  ModuleRep out;
  out.G = M.G;
  out.d_part = M.d_part;
  out.f_part = M.f_part;
  out.ring = R;
  out.rank = rank;
  out.d_mats.resize(M.d_mats.size());
  out.f_mats.resize(M.f_mats.size());
  return out;
}

// Greedy generating set of the elements `part` of D.
std::vector<int> d_generators(const AbelianPGroup& D, const std::vector<int>& part) {
  std::set<int> span{0};
  std::vector<int> gens;
  for (int x : part) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::vector<int> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int y : frontier)
        for (int g : gens) {
          int z = D.add(y, g);
          if (span.insert(z).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

RingPtr ring_for(const SemidirectGroup& G, int N) {
  return cached_ring(G.p, N, G.E->exponent(), p_level(G));
}

RingPtr aux_field_for(const SemidirectGroup& G) {
  const std::int64_t M = static_cast<std::int64_t>(G.E->exponent()) * G.D.exponent();
  return cached_ring(prime_one_mod(M, std::int64_t{1} << 30), 1, M, 0);
}

RingPtr residue_field_for(const SemidirectGroup& G) { return cached_ring(G.p, 1, G.E->exponent(), 0); }

const RingMatrix& ModuleRep::on_d(int x) const {
  const RingMatrix& m = d_mats[static_cast<std::size_t>(x)];
  if (m.rows() != rank) throw Error(Errc::InvalidInput, "element outside the module's group");
  return m;
}

const RingMatrix& ModuleRep::on_f(int e) const {
  const RingMatrix& m = f_mats[static_cast<std::size_t>(e)];
  if (m.rows() != rank) throw Error(Errc::InvalidInput, "element outside the module's group");
  return m;
}

RingMatrix ModuleRep::on(int g) const {
  const int n = G->d_order();
  return on_d(g % n) * on_f(g / n);
}

ChainRing::Elem trace(const RingMatrix& m) {
  const ChainRing& R = *m.ring();
  ChainRing::Elem t = R.zero();
  for (int i = 0; i < m.rows() && i < m.cols(); ++i) R.add(t.data(), t.data(), m.at(i, i));
  return t;
}

std::vector<RingMatrix> realize_character(const ClassFunction& chi, const RingPtr& R) {
  const FiniteGroup& F = *chi.group;
  const int n = F.order();
  const Rational deg_q = chi.degree();
  const int d = static_cast<int>(deg_q.get_num().get_si());
  std::vector<ChainRing::Elem> value(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) value[g] = R->from_cyclo(chi.at(g));

  std::vector<RingMatrix> out;
  if (d == 1) {
    for (int g = 0; g < n; ++g) out.push_back(scalar(R, 1, value[g]));
    return out;
  }

  // Cyclic subgroups first, then two-generator ones.
  std::vector<std::vector<int>> candidates;
  std::set<std::vector<int>> seen;
  for (int g = 1; g < n; ++g) {
    auto s = closure(F, {g});
    if (seen.insert(s).second) candidates.push_back(s);
  }
  for (int g = 1; g < n; ++g)
    for (int h = g + 1; h < n; ++h) {
      auto s = closure(F, {g, h});
      if (static_cast<int>(s.size()) < n && seen.insert(s).second) candidates.push_back(s);
    }

  for (const auto& elems : candidates) {
    GroupPtr S = chi.group->subgroup(elems);
    const ClassFunction res = restrict_to(chi, S);
    for (const auto& nu : char_table(S)) {
      if (nu.degree() != 1 || inner_product(res, nu) != 1) continue;
      // a = e_chi e_nu in the group algebra of F.
      Rational c_chi(d, n), c_nu(1, S->order());
      c_chi.canonicalize();
      c_nu.canonicalize();
      const ChainRing::Elem scale = R->from_rational(c_chi * c_nu);
      std::vector<ChainRing::Elem> nu_inv(static_cast<std::size_t>(S->order()));
      for (int s = 0; s < S->order(); ++s) nu_inv[s] = R->from_cyclo(nu.at(S->inv(s)));
      std::vector<ChainRing::Elem> a(static_cast<std::size_t>(n), R->zero());
      for (int g = 0; g < n; ++g) {
        const ChainRing::Elem cg = R->mul(value[F.inv(g)], scale);
        for (int s = 0; s < S->order(); ++s) {
          const int gs = F.mul(g, S->to_parent(s));
          R->mul_add(a[gs].data(), cg.data(), nu_inv[s].data());
        }
      }
      RingMatrix gens(R, n, n);
      for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) gens.set(F.mul(h, g), h, a[g]);
      SummandBasis sb = summand_basis(gens);
      if (sb.basis.cols() != d) throw Error(Errc::DimensionCheck, "isotypic piece has the wrong rank");
      for (int h = 0; h < n; ++h) {
        RingMatrix moved(R, n, d);
        for (int g = 0; g < n; ++g)
          for (int j = 0; j < d; ++j) moved.set(F.mul(h, g), j, sb.basis.get(g, j));
        out.push_back(sb.left_inverse * moved);
      }
      for (int h = 0; h < n; ++h)
        if (!R->equal(trace(out[h]).data(), value[h].data()))
          throw Error(Errc::DimensionCheck, "realized module does not afford the character");
      return out;
    }
  }
  throw Error(Errc::DecompositionFailed, "no subgroup character isolates a single copy");
}

std::vector<int> all_of_d(const SemidirectGroup& G) {
  std::vector<int> v(static_cast<std::size_t>(G.d_order()));
  for (int x = 0; x < G.d_order(); ++x) v[x] = x;
  return v;
}

std::vector<int> all_of_e(const SemidirectGroup& G) {
  std::vector<int> v(static_cast<std::size_t>(G.E->order()));
  for (int e = 0; e < G.E->order(); ++e) v[e] = e;
  return v;
}

std::vector<int> in_e(const SemidirectGroup& G, const FiniteGroup& F) {
  std::vector<int> v;
  for (int a = 0; a < F.order(); ++a) {
    const int e = G.E->from_root(F.to_root(a));
    if (e < 0) throw Error(Errc::NotSubgroup, "group does not lie in E");
    v.push_back(e);
  }
  std::sort(v.begin(), v.end());
  return v;
}

ModuleRep line_module(const SemidirectGroup& G, const std::vector<int>& d_part, int lambda, const ClassFunction& chi,
                      const RingPtr& R) {
  auto V = realize_character(chi, R);
  const int d = V.front().rows();
  ModuleRep M;
  M.G = &G;
  M.d_part = d_part;
  M.ring = R;
  M.rank = d;
  M.d_mats.resize(static_cast<std::size_t>(G.d_order()));
  M.f_mats.resize(static_cast<std::size_t>(G.E->order()));
  for (int x : d_part) M.d_mats[x] = scalar(R, d, R->from_cyclo(linear_char_value(G.D, lambda, x)));
  const FiniteGroup& F = *chi.group;
  for (int a = 0; a < F.order(); ++a) {
    const int e = G.E->from_root(F.to_root(a));
    M.f_mats[e] = V[a];
    M.f_part.push_back(e);
  }
  std::sort(M.f_part.begin(), M.f_part.end());
  M.provenance = d == 1 ? "linear" : "V_chi";
  return M;
}

ModuleRep induce_module(const ModuleRep& M, const std::vector<int>& f_part) {
  const FiniteGroup& E = *M.G->E;
  std::vector<char> in_f0(static_cast<std::size_t>(E.order()), 0);
  for (int e : M.f_part) in_f0[e] = 1;
  // Left cosets t F0 inside F, and for each element of F its (coset, h).
  std::vector<int> T, coset(static_cast<std::size_t>(E.order()), -1), tail(static_cast<std::size_t>(E.order()), -1);
  for (int t : f_part) {
    if (coset[t] >= 0) continue;
    for (int h : M.f_part) {
      const int th = E.mul(t, h);
      coset[th] = static_cast<int>(T.size());
      tail[th] = h;
    }
    T.push_back(t);
  }
  for (int f : f_part)
    if (coset[f] < 0) throw Error(Errc::NotSubgroup, "inducing group does not contain the subgroup");
  const int k = static_cast<int>(T.size()), r = M.rank;
  ModuleRep out = empty_like(M, M.ring, k * r);
  out.f_part = f_part;
  for (int x : M.d_part) {
    RingMatrix m(M.ring, k * r, k * r);
    for (int j = 0; j < k; ++j) m.set_block(j * r, j * r, M.on_d(M.G->act_on(E.inv(T[j]), x)));
    out.d_mats[x] = std::move(m);
  }
  for (int f : f_part) {
    RingMatrix m(M.ring, k * r, k * r);
    for (int j = 0; j < k; ++j) {
      const int ft = E.mul(f, T[j]);
      m.set_block(coset[ft] * r, j * r, M.on_f(tail[ft]));
    }
    out.f_mats[f] = std::move(m);
  }
  out.provenance = "induced";
  return out;
}

ModuleRep restrict_module(const ModuleRep& M, const std::vector<int>& d_part, const std::vector<int>& f_part) {
  ModuleRep out = empty_like(M, M.ring, M.rank);
  out.d_part = d_part;
  out.f_part = f_part;
  for (int x : d_part) out.d_mats[x] = M.on_d(x);
  for (int e : f_part) out.f_mats[e] = M.on_f(e);
  out.provenance = M.provenance + " restricted";
  return out;
}

ModuleRep dual(const ModuleRep& M) {
  ModuleRep out = empty_like(M, M.ring, M.rank);
  for (int x : M.d_part) out.d_mats[x] = M.on_d(M.G->D.neg(x)).transpose();
  for (int e : M.f_part) out.f_mats[e] = M.on_f(M.G->E->inv(e)).transpose();
  out.provenance = "dual";
  return out;
}

ModuleRep hom_module(const ModuleRep& M1, const ModuleRep& M2) {
  if (M1.d_part != M2.d_part || M1.f_part != M2.f_part || M1.ring != M2.ring)
    throw Error(Errc::MismatchedGroups, "modules over different groups or rings");
  ModuleRep out = empty_like(M1, M1.ring, M1.rank * M2.rank);
  for (int x : M1.d_part) out.d_mats[x] = M1.on_d(M1.G->D.neg(x)).transpose().kron(M2.on_d(x));
  for (int e : M1.f_part) out.f_mats[e] = M1.on_f(M1.G->E->inv(e)).transpose().kron(M2.on_f(e));
  out.provenance = "hom-space";
  return out;
}

ModuleRep reduce_to_residue(const ModuleRep& M, const RingPtr& k) {
  const ChainRing& R = *M.ring;
  const int f = R.unramified_degree();
  if (k->unramified_degree() != f || !k->is_field() || k->p() != R.p())
    throw Error(Errc::InvalidInput, "not the residue field of the module's ring");
  auto reduce = [&](const RingMatrix& m) {
    RingMatrix out(k, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        const std::int64_t* a = m.at(i, j);
        std::int64_t* b = out.at(i, j);
        for (int c = 0; c < f; ++c) b[c] = a[c] % R.p();
      }
    return out;
  };
  ModuleRep out = empty_like(M, k, M.rank);
  for (int x : M.d_part) out.d_mats[x] = reduce(M.d_mats[x]);
  for (int e : M.f_part) out.f_mats[e] = reduce(M.f_mats[e]);
  out.provenance = M.provenance + " mod pi";
  return out;
}

ModuleRep build_module_rep(const SemidirectGroup& G, const std::vector<int>& d_part, const BlockCharacter& c,
                           const RingPtr& R) {
  ModuleRep M = induce_module(line_module(G, d_part, c.lambda, c.chi, R), all_of_e(G));
  M.provenance = M.rank == 1 ? "linear" : "induced";
  return M;
}

ModuleRep build_module_rep(const SemidirectGroup& G, const BlockCharacter& c, const RingPtr& R) {
  ModuleRep M = build_module_rep(G, all_of_d(G), c, R);
  const FiniteGroup& H = *G.G;
  for (int cl = 0; cl < H.num_classes(); ++cl) {
    const int g = H.class_rep(cl);
    if (!R->equal(trace(M.on(g)).data(), R->from_cyclo(c.induced.at(g)).data()))
      throw Error(Errc::DimensionCheck, "module does not afford the block character");
  }
  return M;
}

void verify_module(const ModuleRep& M) {
  const SemidirectGroup& G = *M.G;
  const FiniteGroup& E = *G.E;
  auto fail = [] { throw Error(Errc::DimensionCheck, "matrices violate a group relation"); };
  const auto gens = d_generators(G.D, M.d_part);
  for (int x : gens)
    for (int y : M.d_part)
      if (!(M.on_d(x) * M.on_d(y) == M.on_d(G.D.add(x, y)))) fail();
  for (int e1 : M.f_part)
    for (int e2 : M.f_part)
      if (!(M.on_f(e1) * M.on_f(e2) == M.on_f(E.mul(e1, e2)))) fail();
  for (int e : M.f_part)
    for (int x : gens)
      if (!(M.on_f(e) * M.on_d(x) == M.on_d(G.act_on(e, x)) * M.on_f(e))) fail();
}

}  // namespace blockext
