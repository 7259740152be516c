#include "blockext/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "blockext/errors.hpp"
#include "blockext/modp.hpp"
#include "blockext/valuation.hpp"

namespace blockext {

namespace {

using modp::Mat;
using modp::Vec;

// M[r][s] = #{x in C_j : x^-1 z_s in C_r}, so that C_j C_r = sum_s M[r][s] C_s.
Mat class_matrix(const FiniteGroup& G, int j, std::int64_t ell) {
  const int k = G.num_classes();
  Mat M(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k), 0));
  for (int s = 0; s < k; ++s) {
    const int z = G.class_rep(s);
    for (int x : G.class_elements(j)) ++M[G.class_of(G.mul(G.inv(x), z))][s];
  }
  for (auto& row : M)
    for (auto& v : row) v %= ell;
  return M;
}

// Coordinates of each column of W in the basis V (columns); both given as
// lists of vectors.  The span of V must contain W.
std::vector<Vec> coordinates(const std::vector<Vec>& V, const std::vector<Vec>& W, std::int64_t ell) {
  const int k = static_cast<int>(V.front().size());
  const int d = static_cast<int>(V.size()), w = static_cast<int>(W.size());
  Mat A(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(d + w)));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < d; ++c) A[r][c] = V[c][r];
    for (int c = 0; c < w; ++c) A[r][d + c] = W[c][r];
  }
  int row = 0;
  std::vector<int> pivot_row(static_cast<std::size_t>(d), -1);
  for (int c = 0; c < d; ++c) {
    int r = row;
    while (r < k && A[r][c] == 0) ++r;
    if (r == k) throw Error(Errc::DimensionCheck, "basis is not independent");
    std::swap(A[r], A[row]);
    const std::int64_t s = modp::inv(A[row][c], ell);
    for (auto& x : A[row]) x = x * s % ell;
    for (int i = 0; i < k; ++i) {
      if (i == row || A[i][c] == 0) continue;
      const std::int64_t f = A[i][c];
      for (int j = 0; j < d + w; ++j) A[i][j] = ((A[i][j] - f * A[row][j]) % ell + ell) % ell;
    }
    pivot_row[c] = row++;
  }
  std::vector<Vec> out(static_cast<std::size_t>(w), Vec(static_cast<std::size_t>(d)));
  for (int c = 0; c < w; ++c)
    for (int i = 0; i < d; ++i) out[c][i] = A[pivot_row[i]][d + c];
  return out;
}

std::int64_t eval_poly(const Vec& f, std::int64_t x, std::int64_t ell) {
  std::int64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % ell;
  return r;
}

std::vector<ClassFunction> compute_table(const GroupPtr& Gp) {
  const FiniteGroup& G = *Gp;
  const int k = G.num_classes(), n = G.order(), e = G.exponent();
  const std::int64_t ell = dixon_prime(n, e);

  // Common eigenvectors of all class matrices, by successive splitting.
  std::vector<std::vector<Vec>> spaces(1);
  for (int r = 0; r < k; ++r) {
    Vec v(static_cast<std::size_t>(k), 0);
    v[r] = 1;
    spaces[0].push_back(std::move(v));
  }
  for (int j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    const Mat A = class_matrix(G, j, ell);
    std::vector<std::vector<Vec>> next;
    for (auto& S : spaces) {
      if (S.size() == 1) {
        next.push_back(std::move(S));
        continue;
      }
      const int d = static_cast<int>(S.size());
      std::vector<Vec> images;
      for (const Vec& b : S) {
        Vec y(static_cast<std::size_t>(k), 0);
        for (int r = 0; r < k; ++r)
          for (int s = 0; s < k; ++s) y[r] = (y[r] + A[r][s] * b[s]) % ell;
        images.push_back(std::move(y));
      }
      auto cols = coordinates(S, images, ell);
      Mat B(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d)));
      for (int c = 0; c < d; ++c)
        for (int i = 0; i < d; ++i) B[i][c] = cols[c][i];
      const Vec f = modp::charpoly(B, ell);
      int found = 0;
      for (std::int64_t mu = 0; mu < ell && found < d; ++mu) {
        if (eval_poly(f, mu, ell) != 0) continue;
        Mat Bm = B;
        for (int i = 0; i < d; ++i) Bm[i][i] = (Bm[i][i] - mu + ell) % ell;
        std::vector<Vec> sub;
        for (const Vec& c : modp::null_space(Bm, d, ell)) {
          Vec v(static_cast<std::size_t>(k), 0);
          for (int i = 0; i < d; ++i)
            for (int r = 0; r < k; ++r) v[r] = (v[r] + c[i] * S[i][r]) % ell;
          sub.push_back(std::move(v));
        }
        found += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (found != d) throw Error(Errc::DimensionCheck, "class matrix is not diagonalizable mod l");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k) throw Error(Errc::DimensionCheck, "class matrices did not separate");

  std::vector<int> inv_class(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) inv_class[r] = G.class_of(G.inv(G.class_rep(r)));
  const std::int64_t z = modp::pow(modp::primitive_root(ell), static_cast<std::uint64_t>((ell - 1) / e), ell);
  std::vector<std::vector<int>> power_class(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    const int g = G.class_rep(r);
    for (int j = 0, cur = 0; j < G.element_order(g); ++j, cur = G.mul(cur, g)) power_class[r].push_back(G.class_of(cur));
  }

  std::vector<ClassFunction> table;
  for (const auto& S : spaces) {
    Vec w = S[0];
    const std::int64_t s0 = modp::inv(w[0], ell);
    for (auto& x : w) x = x * s0 % ell;
    std::int64_t sum = 0;
    for (int r = 0; r < k; ++r)
      sum = (sum + w[r] * w[inv_class[r]] % ell * modp::inv(G.class_size(r), ell)) % ell;
    const std::int64_t d2 = static_cast<std::int64_t>(n) % ell * modp::inv(sum, ell) % ell;
    std::int64_t deg = 0;
    for (std::int64_t d = 1; d * d <= n; ++d)
      if (d * d % ell == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw Error(Errc::DimensionCheck, "no degree matches the central character");
    Vec val(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) val[r] = deg * w[r] % ell * modp::inv(G.class_size(r), ell) % ell;

    std::vector<CycloNumber> values;
    for (int r = 0; r < k; ++r) {
      const int o = static_cast<int>(power_class[r].size());
      const std::int64_t zo = modp::pow(z, static_cast<std::uint64_t>(e / o), ell);
      const std::int64_t o_inv = modp::inv(o, ell);
      std::vector<std::int64_t> mult(static_cast<std::size_t>(e), 0);
      for (int t = 0; t < o; ++t) {
        std::int64_t m = 0;
        const std::int64_t step = modp::inv(modp::pow(zo, static_cast<std::uint64_t>(t), ell), ell);
        std::int64_t zz = 1;
        for (int j = 0; j < o; ++j) {
          m = (m + val[power_class[r][j]] * zz) % ell;
          zz = zz * step % ell;
        }
        m = m * o_inv % ell;
        if (m > deg) throw Error(Errc::DimensionCheck, "eigenvalue multiplicity out of range");
        mult[static_cast<std::size_t>(t) * (e / o)] = m;
      }
      values.push_back(CycloNumber::power_sum(e, mult));
    }
    table.emplace_back(Gp, std::move(values));
  }
  std::sort(table.begin(), table.end(), character_less);
  if (!table_is_orthogonal(table)) throw Error(Errc::OrthogonalityFailure, "character table fails orthogonality");
  return table;
}

}  // namespace

std::int64_t dixon_prime(int order, int exponent) {
  const std::int64_t start = 2 * static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(order)))) + 1;
  std::int64_t t = std::max<std::int64_t>(1, (start - 1 + exponent - 1) / exponent);
  for (int tries = 0; tries < 1000000; ++tries, ++t) {
    const std::int64_t ell = exponent * t + 1;
    if (ell >= start && is_prime(ell)) return ell;
  }
  throw Error(Errc::NoSuitablePrime, "no prime 1 mod " + std::to_string(exponent) + " found");
}

bool table_is_orthogonal(const std::vector<ClassFunction>& table) {
  if (table.empty()) return false;
  const GroupPtr& G = table.front().group;
  const int k = G->num_classes();
  if (static_cast<int>(table.size()) != k) return false;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      if (inner_product(table[a], table[b]) != Rational(a == b ? 1 : 0)) return false;
  for (int r = 0; r < k; ++r)
    for (int s = r; s < k; ++s) {
      CycloNumber sum(1);
      for (const auto& chi : table) sum += chi.values[r] * chi.values[s].conj();
      Rational expect = r == s ? Rational(G->order(), G->class_size(r)) : Rational(0);
      expect.canonicalize();
      if (!(sum == CycloNumber(1, expect))) return false;
    }
  return true;
}

std::vector<ClassFunction> char_table(const GroupPtr& G) {
  static std::mutex mu;
  static std::map<const FiniteGroup*, std::pair<std::weak_ptr<const FiniteGroup>, std::vector<ClassFunction>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(G.get());
    if (it != cache.end()) {
      if (!it->second.first.expired()) return it->second.second;
      cache.erase(it);
    }
  }
  auto table = compute_table(G);
  std::lock_guard<std::mutex> lock(mu);
  for (auto it = cache.begin(); it != cache.end();)
    it = it->second.first.expired() ? cache.erase(it) : std::next(it);
  cache[G.get()] = {G, table};
  return table;
}

}  // namespace blockext
