#include "blockext/modp.hpp"

#include <utility>

#include "blockext/errors.hpp"

namespace blockext::modp {

namespace {

std::int64_t mulm(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(Mat& A, int cols, std::int64_t p) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < A.size(); ++c) {
    std::size_t r = row;
    while (r < A.size() && A[r][c] == 0) ++r;
    if (r == A.size()) continue;
    std::swap(A[r], A[row]);
    const std::int64_t s = inv(A[row][c], p);
    for (auto& x : A[row]) x = mulm(x, s, p);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c] == 0) continue;
      const std::int64_t f = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] = ((A[i][j] - mulm(f, A[row][j], p)) % p + p) % p;
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::int64_t pow(std::int64_t base, std::uint64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (e) {
    if (e & 1) r = mulm(r, base, m);
    base = mulm(base, base, m);
    e >>= 1;
  }
  return r;
}

std::int64_t inv(std::int64_t a, std::int64_t m) {
  a %= m;
  if (a < 0) a += m;
  if (a == 0) throw Error(Errc::InvalidInput, "zero has no inverse");
  return pow(a, static_cast<std::uint64_t>(m - 2), m);
}

std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> qs;
  std::int64_t n = p - 1;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) qs.push_back(n);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs) ok = ok && pow(g, static_cast<std::uint64_t>((p - 1) / q), p) != 1;
    if (ok) return g;
  }
  return 1;  // p = 2
}

std::vector<Vec> null_space(Mat A, int cols, std::int64_t p) {
  auto pivots = echelon(A, cols, p);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(static_cast<std::size_t>(cols), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - A[r][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

Vec charpoly(Mat A, std::int64_t p) {
  const int n = static_cast<int>(A.size());
  // reduce to upper Hessenberg form by similarity
  for (int m = 1; m < n - 1; ++m) {
    int i = m;
    while (i < n && A[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(A[i], A[m]);
      for (int r = 0; r < n; ++r) std::swap(A[r][i], A[r][m]);
    }
    const std::int64_t s = inv(A[m][m - 1], p);
    for (int r = m + 1; r < n; ++r) {
      const std::int64_t u = mulm(A[r][m - 1], s, p);
      if (u == 0) continue;
      for (int c = 0; c < n; ++c) A[r][c] = ((A[r][c] - mulm(u, A[m][c], p)) % p + p) % p;
      for (int c = 0; c < n; ++c) A[c][m] = (A[c][m] + mulm(u, A[c][r], p)) % p;
    }
  }
  // recurrence on leading principal minors
  std::vector<Vec> P(static_cast<std::size_t>(n) + 1);
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Vec cur(static_cast<std::size_t>(k) + 1, 0);
    const Vec& prev = P[k - 1];
    for (std::size_t j = 0; j < prev.size(); ++j) {
      cur[j + 1] = (cur[j + 1] + prev[j]) % p;
      cur[j] = ((cur[j] - mulm(A[k - 1][k - 1], prev[j], p)) % p + p) % p;
    }
    std::int64_t t = 1;
    for (int i = 1; i < k; ++i) {
      t = mulm(t, A[k - i][k - i - 1], p);
      const std::int64_t h = mulm(t, A[k - i - 1][k - 1], p);
      if (h == 0) continue;
      const Vec& q = P[k - i - 1];
      for (std::size_t j = 0; j < q.size(); ++j) cur[j] = ((cur[j] - mulm(h, q[j], p)) % p + p) % p;
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

int rank(Mat A, std::int64_t p) {
  if (A.empty()) return 0;
  return static_cast<int>(echelon(A, static_cast<int>(A[0].size()), p).size());
}

}  // namespace blockext::modp
