#include "blockext/chain_ring.hpp"

#include <algorithm>
#include <numeric>

#include "blockext/errors.hpp"
#include "blockext/valuation.hpp"

namespace blockext {
namespace {

using Poly = std::vector<std::int64_t>;  // coefficients mod p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    std::int64_t c = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(r, m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::int64_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

// Monic polynomial of degree deg from its integer encoding (base p digits).
Poly decode_monic(std::int64_t code, int deg, std::int64_t p) {
  Poly h(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    h[i] = code % p;
    code /= p;
  }
  h[deg] = 1;
  return h;
}

bool divides(const Poly& b, const Poly& a, std::int64_t p) { return poly_mod(a, b, p).empty(); }

bool is_irreducible(const Poly& h, std::int64_t p) {
  int deg = static_cast<int>(h.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::int64_t count = ipow(p, d);
    for (std::int64_t code = 0; code < count; ++code)
      if (divides(decode_monic(code, d, p), h, p)) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int multiplicative_order(std::int64_t p, std::int64_t m) {
  if (m == 1) return 1;
  int k = 1;
  std::int64_t v = p % m;
  while (v != 1) {
    v = v * p % m;
    ++k;
  }
  return k;
}

}  // namespace

std::int64_t prime_one_mod(std::int64_t M, std::int64_t start) {
  std::int64_t l = start - ((start - 1) % M);
  if (l < start) l += M;
  while (!is_prime(l)) l += M;
  return l;
}

std::shared_ptr<const ChainRing> ChainRing::create(std::int64_t p, int N, std::int64_t m_prime, int a) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "chain ring characteristic must be prime");
  if (N < 1) throw Error(Errc::InvalidInput, "precision must be at least 1");
  if (m_prime < 1 || m_prime % p == 0) throw Error(Errc::InvalidInput, "m' must be positive and prime to p");
  if (a < 0) throw Error(Errc::InvalidInput, "negative p-power level");

  std::shared_ptr<ChainRing> r(new ChainRing());
  r->p_ = p;
  r->N_ = N;
  r->a_ = a;
  r->m_prime_ = m_prime;
  r->f_ = multiplicative_order(p, m_prime);
  r->e_ = a == 0 ? 1 : static_cast<int>(totient(ipow(p, a)));
  r->d_ = r->e_ * r->f_;
  r->q_ = ipow(p, N);
  r->M_ = m_prime * ipow(p, a);
  if (r->d_ > 1 && r->q_ > (std::int64_t{1} << 26))
    throw Error(Errc::InvalidInput, "precision too large for the extension degree");
  if (r->q_ >= (std::int64_t{1} << 31)) throw Error(Errc::InvalidInput, "modulus exceeds 2^31");
  if (r->d_ > 2048) throw Error(Errc::InvalidInput, "extension degree too large");
  const int f = r->f_;
  const int e = r->e_;

  // Unramified part: lexicographically least monic irreducible of degree f over F_p.
  Poly h;
  for (std::int64_t code = 0;; ++code) {
    Poly cand = decode_monic(code, f, p);
    if (is_irreducible(cand, p)) {
      h = cand;
      break;
    }
  }
  r->gmod_.assign(h.begin(), h.begin() + f);

  // A primitive m'-th root of unity in F_{p^f}, least by encoding.
  std::int64_t field_order = ipow(p, f);
  auto factors = prime_factors(m_prime);
  Poly alpha;
  for (std::int64_t code = 1; code < field_order; ++code) {
    Poly beta(static_cast<std::size_t>(f), 0);
    std::int64_t c = code;
    for (int i = 0; i < f; ++i) {
      beta[i] = c % p;
      c /= p;
    }
    trim(beta);
    Poly gamma = poly_powmod(beta, static_cast<std::uint64_t>((field_order - 1) / m_prime), h, p);
    bool primitive = true;
    for (auto rr : factors)
      if (poly_powmod(gamma, static_cast<std::uint64_t>(m_prime / rr), h, p) == Poly{1}) primitive = false;
    if (primitive) {
      alpha = gamma;
      break;
    }
  }
  if (alpha.empty() && m_prime > 1) throw Error(Errc::InvalidInput, "no primitive root found");
  if (alpha.empty()) alpha = Poly{1};

  // Eisenstein polynomial in pi: Phi_{p^a}(pi + 1), or pi - p when a = 0.
  std::vector<std::int64_t> eis(static_cast<std::size_t>(e) + 1, 0);
  if (a == 0) {
    eis[0] = r->modq(-p);
    eis[1] = 1;
  } else {
    // sum_{i<p} (pi+1)^(i p^(a-1)), via binomial rows mod q.
    std::int64_t step = ipow(p, a - 1);
    std::int64_t top = (p - 1) * step;
    std::vector<std::int64_t> row{1};  // (pi+1)^0
    for (std::int64_t k = 0; k <= top; ++k) {
      if (k % step == 0)
        for (std::size_t j = 0; j < row.size(); ++j) eis[j] = (eis[j] + row[j]) % r->q_;
      std::vector<std::int64_t> next(row.size() + 1, 0);
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j] = (next[j] + row[j]) % r->q_;
        next[j + 1] = (next[j + 1] + row[j]) % r->q_;
      }
      row = std::move(next);
    }
  }
  r->pi_poly_ = eis;
  // pi^e = -sum_{j<e} E_j pi^j; higher powers by recursion.
  r->redpi_.assign(static_cast<std::size_t>(std::max(0, e - 1)), {});
  std::vector<std::int64_t> cur(static_cast<std::size_t>(e), 0);
  for (int j = 0; j < e; ++j) cur[j] = r->modq(-eis[j]);
  for (int j = e; j <= 2 * e - 2; ++j) {
    r->redpi_[j - e] = cur;
    std::int64_t topc = cur[e - 1];
    std::vector<std::int64_t> nxt(static_cast<std::size_t>(e), 0);
    for (int i = e - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    for (int i = 0; i < e; ++i) nxt[i] = r->modq(nxt[i] - topc * eis[i]);
    cur = std::move(nxt);
  }

  // p = pi * w with w = -eps^-1 sum_{j>=1} E_j pi^(j-1); eps = E_0 / p = +-1.
  std::int64_t eps = a == 0 ? -1 : 1;
  r->w_ = r->zero();
  for (int j = 1; j <= e; ++j) r->w_[static_cast<std::size_t>((j - 1) * f)] = r->modq(-eps * eis[j]);

  // Teichmueller lift of alpha: alpha^(p^f)^(N-1).
  Elem t = r->zero();
  for (std::size_t k = 0; k < alpha.size(); ++k) t[k] = alpha[k];
  for (int i = 1; i < N; ++i) t = r->pow(t, static_cast<std::uint64_t>(field_order));
  Elem y = a > 0 ? r->add(r->one(), r->pi()) : r->one();
  Elem zeta = r->mul(t, y);

  r->zeta_powers_.reserve(static_cast<std::size_t>(r->M_));
  Elem z = r->one();
  for (std::int64_t k = 0; k < r->M_; ++k) {
    r->zeta_powers_.push_back(z);
    z = r->mul(z, zeta);
  }
  if (!r->equal(z.data(), r->one().data())) throw Error(Errc::InvalidInput, "root of unity construction failed");
  // At N = 1 the p-power roots may collapse (-1 = 1 in O/2O); only the
  // p'-part is checked there.
  for (auto rr : prime_factors(r->M_))
    if ((N > 1 || rr != p) && r->equal(r->zeta_powers_[static_cast<std::size_t>(r->M_ / rr)].data(), r->one().data()))
      throw Error(Errc::InvalidInput, "root of unity is not primitive");
  return r;
}

ChainRing::Elem ChainRing::from_int(std::int64_t v) const {
  Elem out = zero();
  out[0] = modq(v);
  return out;
}

ChainRing::Elem ChainRing::from_rational(const Rational& r) const {
  mpz_class q(static_cast<long>(q_));
  mpz_class num = r.get_num() % q;
  mpz_class den = r.get_den() % q;
  if (num < 0) num += q;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t()) == 0)
    throw Error(Errc::InvalidInput, "denominator not invertible in the coefficient ring");
  mpz_class v = (num * inv) % q;
  return from_int(v.get_si());
}

ChainRing::Elem ChainRing::root_of_unity(std::int64_t k) const {
  std::int64_t j = ((k % M_) + M_) % M_;
  return zeta_powers_[static_cast<std::size_t>(j)];
}

ChainRing::Elem ChainRing::from_cyclo(const CycloNumber& c) const {
  int m = c.conductor();
  if (M_ % m != 0)
    throw Error(Errc::ConductorMismatch, "conductor " + std::to_string(m) + " does not divide " + std::to_string(M_));
  std::int64_t step = M_ / m;
  Elem out = zero();
  const auto& cf = c.coeffs();
  for (std::size_t k = 0; k < cf.size(); ++k) {
    if (cf[k] == 0) continue;
    Elem s = from_rational(cf[k]);
    mul_add(out.data(), s.data(), root_of_unity(static_cast<std::int64_t>(k) * step).data());
  }
  return out;
}

ChainRing::Elem ChainRing::pi() const {
  if (a_ == 0) return from_int(p_);
  if (e_ == 1) return from_int(-2);  // p = 2, a = 1: pi = zeta_2 - 1
  Elem out = zero();
  out[static_cast<std::size_t>(f_)] = 1;
  return out;
}

void ChainRing::add(std::int64_t* out, const std::int64_t* a, const std::int64_t* b) const {
  for (int i = 0; i < d_; ++i) {
    std::int64_t v = a[i] + b[i];
    out[i] = v >= q_ ? v - q_ : v;
  }
}

void ChainRing::sub(std::int64_t* out, const std::int64_t* a, const std::int64_t* b) const {
  for (int i = 0; i < d_; ++i) {
    std::int64_t v = a[i] - b[i];
    out[i] = v < 0 ? v + q_ : v;
  }
}

void ChainRing::neg(std::int64_t* out, const std::int64_t* a) const {
  for (int i = 0; i < d_; ++i) out[i] = a[i] == 0 ? 0 : q_ - a[i];
}

void ChainRing::reduce_product(std::int64_t* out, std::vector<std::int64_t>& tmp) const {
  const int f = f_, e = e_;
  const int wx = 2 * f - 1;
  for (auto& v : tmp) v %= q_;
  // x-reduction per pi-row
  if (f > 1) {
    for (int j = 0; j < 2 * e - 1; ++j) {
      std::int64_t* row = tmp.data() + static_cast<std::size_t>(j) * wx;
      for (int k = wx - 1; k >= f; --k) {
        std::int64_t c = row[k] % q_;
        row[k] = 0;
        if (c == 0) continue;
        for (int i = 0; i < f; ++i) row[k - f + i] = (row[k - f + i] - c * gmod_[i]) % q_;
      }
    }
  }
  // pi-reduction
  for (int j = 0; j < e; ++j)
    for (int k = 0; k < f; ++k) out[j * f + k] = tmp[static_cast<std::size_t>(j) * wx + k];
  for (int j = e; j <= 2 * e - 2; ++j) {
    const auto& red = redpi_[j - e];
    const std::int64_t* row = tmp.data() + static_cast<std::size_t>(j) * wx;
    for (int k = 0; k < f; ++k) {
      std::int64_t c = row[k] % q_;
      if (c == 0) continue;
      for (int i = 0; i < e; ++i)
        if (red[i]) out[i * f + k] = (out[i * f + k] + c * red[i]) % q_;
    }
  }
  for (int i = 0; i < d_; ++i) out[i] = modq(out[i]);
}

void ChainRing::mul(std::int64_t* out, const std::int64_t* a, const std::int64_t* b) const {
  if (d_ == 1) {
    out[0] = static_cast<std::int64_t>((static_cast<unsigned __int128>(a[0]) * static_cast<std::uint64_t>(b[0])) %
                                       static_cast<std::uint64_t>(q_));
    return;
  }
  thread_local std::vector<std::int64_t> tmp;
  const int f = f_, e = e_;
  const int wx = 2 * f - 1;
  tmp.assign(static_cast<std::size_t>(2 * e - 1) * wx, 0);
  for (int j1 = 0; j1 < e; ++j1)
    for (int k1 = 0; k1 < f; ++k1) {
      std::int64_t x = a[j1 * f + k1];
      if (!x) continue;
      for (int j2 = 0; j2 < e; ++j2) {
        std::int64_t* row = tmp.data() + static_cast<std::size_t>(j1 + j2) * wx + k1;
        const std::int64_t* bb = b + j2 * f;
        for (int k2 = 0; k2 < f; ++k2) row[k2] += x * bb[k2];
      }
    }
  reduce_product(out, tmp);
}

void ChainRing::mul_sub(std::int64_t* acc, const std::int64_t* a, const std::int64_t* b) const {
  thread_local std::vector<std::int64_t> t;
  t.resize(static_cast<std::size_t>(d_));
  mul(t.data(), a, b);
  sub(acc, acc, t.data());
}

void ChainRing::mul_add(std::int64_t* acc, const std::int64_t* a, const std::int64_t* b) const {
  thread_local std::vector<std::int64_t> t;
  t.resize(static_cast<std::size_t>(d_));
  mul(t.data(), a, b);
  add(acc, acc, t.data());
}

bool ChainRing::is_zero(const std::int64_t* a) const {
  for (int i = 0; i < d_; ++i)
    if (a[i]) return false;
  return true;
}

bool ChainRing::equal(const std::int64_t* a, const std::int64_t* b) const {
  return std::equal(a, a + d_, b);
}

int ChainRing::valuation(const std::int64_t* a) const {
  int best = length();
  for (int j = 0; j < e_; ++j) {
    int vp = N_;
    for (int k = 0; k < f_; ++k) {
      std::int64_t c = a[j * f_ + k];
      if (c) vp = std::min(vp, p_adic_order(c, p_));
    }
    if (vp < N_) best = std::min(best, e_ * vp + j);
  }
  return best;
}

ChainRing::Elem ChainRing::add(const Elem& a, const Elem& b) const {
  Elem out = zero();
  add(out.data(), a.data(), b.data());
  return out;
}

ChainRing::Elem ChainRing::sub(const Elem& a, const Elem& b) const {
  Elem out = zero();
  sub(out.data(), a.data(), b.data());
  return out;
}

ChainRing::Elem ChainRing::mul(const Elem& a, const Elem& b) const {
  Elem out = zero();
  mul(out.data(), a.data(), b.data());
  return out;
}

ChainRing::Elem ChainRing::neg(const Elem& a) const {
  Elem out = zero();
  neg(out.data(), a.data());
  return out;
}

ChainRing::Elem ChainRing::pow(const Elem& a, std::uint64_t k) const {
  Elem r = one();
  Elem b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

ChainRing::Elem ChainRing::inverse_unit(const Elem& u) const {
  if (valuation(u) != 0) throw Error(Errc::InvalidInput, "element is not a unit");
  // u^(p^f - 2) inverts u modulo pi; Newton steps lift it.
  Elem x = pow(u, static_cast<std::uint64_t>(ipow(p_, f_) - 2));
  Elem two = from_int(2);
  Elem unit = one();
  for (int it = 0; it < 64; ++it) {
    Elem ux = mul(u, x);
    if (equal(ux.data(), unit.data())) return x;
    x = mul(x, sub(two, ux));
  }
  throw Error(Errc::InvalidInput, "unit inversion did not converge");
}

ChainRing::Elem ChainRing::div_pi(const Elem& a) const {
  Elem c0 = zero();
  for (int k = 0; k < f_; ++k) {
    std::int64_t c = a[static_cast<std::size_t>(k)];
    if (c % p_ != 0) throw Error(Errc::InvalidInput, "element not divisible by pi");
    c0[static_cast<std::size_t>(k)] = c / p_;
  }
  Elem out = zero();
  for (int j = 1; j < e_; ++j)
    for (int k = 0; k < f_; ++k) out[static_cast<std::size_t>((j - 1) * f_ + k)] = a[static_cast<std::size_t>(j * f_ + k)];
  mul_add(out.data(), c0.data(), w_.data());
  return out;
}

ChainRing::Elem ChainRing::div_pi_pow(const Elem& a, int k) const {
  if (valuation(a) < k) throw Error(Errc::InvalidInput, "element not divisible by pi^k");
  Elem out = a;
  for (int i = 0; i < k; ++i) out = div_pi(out);
  return out;
}

}  // namespace blockext
