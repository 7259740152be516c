#include "blockext/ext_oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "blockext/errors.hpp"
#include "blockext/modp.hpp"
#include "blockext/valuation.hpp"

namespace blockext {

namespace {

// F-orbits on n-tuples of non-identity elements of D'.  Tuples are coded in
// base m = |D'| - 1, first entry most significant.
struct BarOrbits {
  int n = 0, m = 0;
  std::vector<int> elems;        // non-identity elements of D'
  std::vector<int> pos_of;       // D index -> position in elems, or -1
  std::vector<int> orbit_of;     // per code
  std::vector<int> transporter;  // per code: f in E with code = f . rep
  std::vector<int> reps;         // per orbit
  std::vector<std::vector<int>> stab;

  int encode(const std::vector<int>& pos) const {
    int c = 0;
    for (int x : pos) c = c * m + x;
    return c;
  }
  std::vector<int> decode(int c) const {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      pos[k] = c % m;
      c /= m;
    }
    return pos;
  }
};

BarOrbits make_orbits(const ModuleRep& C, int n) {
  const SemidirectGroup& G = *C.G;
  BarOrbits b;
  b.n = n;
  b.pos_of.assign(static_cast<std::size_t>(G.d_order()), -1);
  for (int x : C.d_part)
    if (x != 0) {
      b.pos_of[x] = static_cast<int>(b.elems.size());
      b.elems.push_back(x);
    }
  b.m = static_cast<int>(b.elems.size());
  std::int64_t count = 1;
  for (int k = 0; k < n; ++k) count *= b.m;
  std::vector<std::vector<int>> perm;
  for (int f : C.f_part) {
    std::vector<int> pm(static_cast<std::size_t>(b.m));
    for (int k = 0; k < b.m; ++k) pm[k] = b.pos_of[G.act_on(f, b.elems[k])];
    perm.push_back(std::move(pm));
  }
  b.orbit_of.assign(static_cast<std::size_t>(count), -1);
  b.transporter.assign(static_cast<std::size_t>(count), -1);
  for (int code = 0; code < count; ++code) {
    if (b.orbit_of[code] >= 0) continue;
    const int o = static_cast<int>(b.reps.size());
    b.reps.push_back(code);
    b.stab.emplace_back();
    const auto pos = b.decode(code);
    for (std::size_t fi = 0; fi < C.f_part.size(); ++fi) {
      std::vector<int> img(pos.size());
      for (std::size_t k = 0; k < pos.size(); ++k) img[k] = perm[fi][pos[k]];
      const int c2 = b.encode(img);
      if (c2 == code) b.stab[o].push_back(C.f_part[fi]);
      if (b.orbit_of[c2] < 0) {
        b.orbit_of[c2] = o;
        b.transporter[c2] = C.f_part[fi];
      }
    }
  }
  return b;
}

// Coordinates of equivariant cochains: phi(rep_t) = B_t c_t with c_t free.
struct FixedLevel {
  const BarOrbits* orb = nullptr;
  std::vector<RingMatrix> B, P;
  std::vector<int> offset;
  int dim = 0;
};

FixedLevel make_level(const ModuleRep& C, const BarOrbits& orb) {
  const RingPtr& R = C.ring;
  std::map<std::vector<int>, SummandBasis> cache;
  FixedLevel L;
  L.orb = &orb;
  for (const auto& S : orb.stab) {
    auto it = cache.find(S);
    if (it == cache.end()) {
      SummandBasis sb;
      if (S.size() == 1) {
        sb.basis = RingMatrix::identity(R, C.rank);
        sb.left_inverse = RingMatrix::identity(R, C.rank);
      } else {
        RingMatrix e(R, C.rank, C.rank);
        for (int f : S) e = e + C.on_f(f);
        Rational w(1, static_cast<long>(S.size()));
        w.canonicalize();
        sb = summand_basis(e.scaled(R->from_rational(w)));
      }
      it = cache.emplace(S, std::move(sb)).first;
    }
    L.offset.push_back(L.dim);
    L.dim += it->second.basis.cols();
    L.B.push_back(it->second.basis);
    L.P.push_back(it->second.left_inverse);
  }
  return L;
}

// Rows of the differential C^n -> C^{n+1} belonging to row orbit s of `hi`.
RingMatrix row_block(const ModuleRep& C, const FixedLevel& lo, const FixedLevel& hi, int s) {
  const RingPtr& R = C.ring;
  const AbelianPGroup& D = C.G->D;
  const BarOrbits& ob = *hi.orb;
  const BarOrbits& ol = *lo.orb;
  const int n = ol.n;
  const auto pos = ob.decode(ob.reps[s]);
  std::vector<int> g(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) g[k] = ob.elems[pos[k]];
  RingMatrix out(R, hi.P[s].rows(), lo.dim);
  if (out.rows() == 0) return out;

  auto add_term = [&](int sign, const RingMatrix* A, const std::vector<int>& u) {
    std::vector<int> upos(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) upos[k] = ol.pos_of[u[k]];
    const int code = ol.encode(upos);
    const int t = ol.orbit_of[code];
    if (lo.B[t].cols() == 0) return;
    RingMatrix X = C.on_f(ol.transporter[code]) * lo.B[t];
    if (A) X = *A * X;
    X = hi.P[s] * X;
    if (sign < 0) X = X.scaled(R->from_int(-1));
    for (int i = 0; i < X.rows(); ++i)
      for (int j = 0; j < X.cols(); ++j) {
        std::int64_t* dst = out.at(i, lo.offset[t] + j);
        R->add(dst, dst, X.at(i, j));
      }
  };

  add_term(1, &C.on_d(g[0]), std::vector<int>(g.begin() + 1, g.end()));
  for (int j = 1; j <= n; ++j) {
    const int merged = D.add(g[j - 1], g[j]);
    if (merged == 0) continue;
    std::vector<int> u(g.begin(), g.begin() + (j - 1));
    u.push_back(merged);
    u.insert(u.end(), g.begin() + j + 1, g.end());
    add_term(j % 2 ? -1 : 1, nullptr, u);
  }
  add_term((n + 1) % 2 ? -1 : 1, nullptr, std::vector<int>(g.begin(), g.begin() + n));
  return out;
}

RingMatrix differential(const ModuleRep& C, const FixedLevel& lo, const FixedLevel& hi) {
  RingMatrix d(C.ring, hi.dim, lo.dim);
  for (std::size_t s = 0; s < hi.B.size(); ++s) {
    if (hi.B[s].cols() == 0) continue;
    d.set_block(hi.offset[s], 0, row_block(C, lo, hi, static_cast<int>(s)));
  }
  return d;
}

// Rank of the differential over a prime field, rows fed in a fixed random
// order; stops once `target` independent rows are found.
int streamed_rank(const ModuleRep& C, const FixedLevel& lo, const FixedLevel& hi, int target) {
  const std::int64_t l = C.ring->modulus();
  std::vector<int> order(hi.B.size());
  for (std::size_t s = 0; s < order.size(); ++s) order[s] = static_cast<int>(s);
  std::mt19937 rng(20240611u);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pivot_col;
  std::vector<std::vector<std::int64_t>> pivot_row;
  for (int s : order) {
    if (static_cast<int>(pivot_col.size()) >= target) break;
    if (hi.B[s].cols() == 0) continue;
    RingMatrix blk = row_block(C, lo, hi, s);
    for (int r = 0; r < blk.rows(); ++r) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(lo.dim));
      for (int j = 0; j < lo.dim; ++j) v[j] = blk.at(r, j)[0];
      for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        const std::int64_t c = v[pivot_col[k]];
        if (!c) continue;
        const auto& w = pivot_row[k];
        for (int j = 0; j < lo.dim; ++j)
          if (w[j]) v[j] = static_cast<std::int64_t>((v[j] + static_cast<unsigned __int128>(l - c) * w[j]) % l);
      }
      int lead = -1;
      for (int j = 0; j < lo.dim && lead < 0; ++j)
        if (v[j]) lead = j;
      if (lead < 0) continue;
      const std::int64_t s_inv = modp::inv(v[lead], l);
      for (auto& x : v) x = static_cast<std::int64_t>(static_cast<unsigned __int128>(x) * s_inv % l);
      pivot_col.push_back(lead);
      pivot_row.push_back(std::move(v));
    }
  }
  return static_cast<int>(pivot_col.size());
}

int count_rank(const RingMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return nonzero_pivots(snf_chain_ring(m, false).exponents, *m.ring());
}

void check_size(const ModuleRep& C, int degree, const ExtOptions& opt) {
  std::int64_t cells = C.rank;
  const std::int64_t m = static_cast<std::int64_t>(C.d_part.size()) - 1;
  for (int k = 0; k < degree; ++k) {
    cells *= m;
    if (cells > opt.size_guard) break;
  }
  if (cells > opt.size_guard)
    throw Error(Errc::SizeGuard, "bar complex in degree " + std::to_string(degree) + " exceeds the size guard " +
                                     std::to_string(opt.size_guard));
}

std::string memo_key(const std::string& kind, const ModuleRep& C, int i, int N) {
  std::string key = kind + ":" + std::to_string(i) + ":" + std::to_string(N) + ":" +
                    std::to_string(C.ring->p()) + ":" + std::to_string(C.ring->conductor()) + ":" +
                    std::to_string(C.rank) + "|";
  for (int x : C.d_part) key += std::to_string(x) + ",";
  key += "|";
  for (int e : C.f_part) key += std::to_string(e) + ",";
  key += "|";
  auto put = [&](const RingMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        for (int w = 0; w < C.ring->width(); ++w) key += std::to_string(m.at(r, c)[w]) + " ";
  };
  for (int x : C.d_part) put(C.on_d(x));
  for (int e : C.f_part) put(C.on_f(e));
  return key;
}

std::mutex cache_mu;
std::map<std::string, OModuleClass> ext_cache;
std::map<std::string, int> modp_cache;

// Cohomology at degree i >= 1 read off over C's ring with a known outgoing rank.
OModuleClass read_at(const ModuleRep& C, const std::vector<BarOrbits>& orbs, int i, std::optional<int> out_rank) {
  ChainComplex cc;
  cc.ring = C.ring;
  cc.dims.assign(static_cast<std::size_t>(i) + 2, 0);
  cc.differentials.resize(static_cast<std::size_t>(i) + 1);
  FixedLevel mid = make_level(C, orbs[i]);
  cc.dims[i] = mid.dim;
  if (i >= 1) {
    FixedLevel lo = make_level(C, orbs[i - 1]);
    cc.dims[i - 1] = lo.dim;
    cc.differentials[i - 1] = differential(C, lo, mid);
  }
  if (!out_rank) {
    FixedLevel hi = make_level(C, orbs[i + 1]);
    cc.dims[i + 1] = hi.dim;
    cc.differentials[i] = differential(C, mid, hi);
  }
  return homology_at(cc, i, out_rank);
}

}  // namespace

int default_precision(const SemidirectGroup& G) {
  int n_max = 0;
  for (int n : G.D.exponents()) n_max = std::max(n_max, n);
  const int a = p_adic_order(G.D.exponent(), G.p);
  const std::int64_t e = a == 0 ? 1 : totient(ipow(G.p, a));
  return n_max + (e == 1 ? 3 : 2);
}

void clear_ext_cache() {
  std::lock_guard<std::mutex> lock(cache_mu);
  ext_cache.clear();
  modp_cache.clear();
}

ChainComplex fixed_bar_complex(const ModuleRep& C, int top) {
  std::vector<BarOrbits> orbs;
  for (int n = 0; n <= top; ++n) orbs.push_back(make_orbits(C, n));
  std::vector<FixedLevel> levels;
  for (int n = 0; n <= top; ++n) levels.push_back(make_level(C, orbs[n]));
  ChainComplex cc;
  cc.ring = C.ring;
  for (int n = 0; n <= top; ++n) cc.dims.push_back(levels[n].dim);
  for (int n = 0; n < top; ++n) cc.differentials.push_back(differential(C, levels[n], levels[n + 1]));
  return cc;
}

OModuleClass ext_oracle(const SemidirectGroup& G, const ModuleRecipe& M1, const ModuleRecipe& M2, int i,
                        const ExtOptions& opt) {
  if (i < 0 || i > 3) throw Error(Errc::InvalidInput, "oracle degree must lie in 0..3");
  const int N = opt.precision > 0 ? opt.precision : default_precision(G);
  const RingPtr RN = ring_for(G, N);
  const ModuleRep C = hom_module(M1(RN), M2(RN));
  check_size(C, i + 1, opt);
  std::string key;
  if (opt.memoize) {
    key = memo_key("ext", C, i, N);
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = ext_cache.find(key);
    if (it != ext_cache.end()) return it->second;
  }

  std::vector<BarOrbits> orbs;
  for (int n = 0; n <= i + 1; ++n) orbs.push_back(n + 1 < i ? BarOrbits{} : make_orbits(C, n));
  const RingPtr RH = ring_for(G, N + 2);
  const ModuleRep CH = hom_module(M1(RH), M2(RH));

  std::optional<int> out_rank;
  if (i >= 1) {
    // Incoming rank over K from the Smith form at N; the outgoing rank can be
    // at most dim C^i minus that.  Reaching the bound over F_l certifies it.
    FixedLevel lo = make_level(C, orbs[i - 1]);
    FixedLevel mid = make_level(C, orbs[i]);
    const int bound = mid.dim - count_rank(differential(C, lo, mid));
    int found = 0;
    if (bound > 0) {
      const RingPtr Fl = aux_field_for(G);
      const ModuleRep CL = hom_module(M1(Fl), M2(Fl));
      FixedLevel lmid = make_level(CL, orbs[i]);
      FixedLevel lhi = make_level(CL, orbs[i + 1]);
      found = streamed_rank(CL, lmid, lhi, bound);
    }
    if (found == bound) {
      out_rank = bound;
    } else {
      FixedLevel hi = make_level(C, orbs[i + 1]);
      out_rank = count_rank(differential(C, mid, hi));
    }
  }
  const OModuleClass low = read_at(C, orbs, i, out_rank);
  const OModuleClass high = read_at(CH, orbs, i, out_rank);
  if (!(low == high))
    throw Error(Errc::PrecisionUnstable, "Ext " + low.to_string() + " at precision " + std::to_string(N) + " but " +
                                             high.to_string() + " at " + std::to_string(N + 2));
  if (opt.memoize) {
    std::lock_guard<std::mutex> lock(cache_mu);
    ext_cache.emplace(key, low);
  }
  return low;
}

int ext_modp(const SemidirectGroup& G, const ModuleRecipe& M1, const ModuleRecipe& M2, int i,
             const ExtOptions& opt) {
  if (i < 0 || i > 3) throw Error(Errc::InvalidInput, "degree must lie in 0..3");
  const RingPtr R1 = ring_for(G, 1);
  const RingPtr k = residue_field_for(G);
  const ModuleRep C = hom_module(reduce_to_residue(M1(R1), k), reduce_to_residue(M2(R1), k));
  check_size(C, i + 1, opt);
  std::string key;
  if (opt.memoize) {
    key = memo_key("modp", C, i, 1);
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = modp_cache.find(key);
    if (it != modp_cache.end()) return it->second;
  }
  std::vector<BarOrbits> orbs;
  for (int n = 0; n <= i + 1; ++n) orbs.push_back(n + 1 < i ? BarOrbits{} : make_orbits(C, n));
  const OModuleClass h = read_at(C, orbs, i, std::nullopt);
  const int dim = h.free_rank() + static_cast<int>(h.torsion().size());
  if (opt.memoize) {
    std::lock_guard<std::mutex> lock(cache_mu);
    modp_cache.emplace(key, dim);
  }
  return dim;
}

}  // namespace blockext
