#include "blockext/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "blockext/errors.hpp"
#include "blockext/valuation.hpp"

namespace blockext {
namespace {

using IntPoly = std::vector<std::int64_t>;

// Reductions of x^j modulo Phi_m for 0 <= j < max(m, 2 phi(m)).
struct PowerTable {
  int phi = 0;
  std::vector<IntPoly> rows;
};

std::mutex g_cache_mutex;
std::map<int, std::unique_ptr<IntPoly>> g_phi_cache;
std::map<int, std::unique_ptr<PowerTable>> g_table_cache;

IntPoly compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const IntPoly& den = cyclotomic_polynomial(d);
    int deg_n = static_cast<int>(num.size()) - 1;
    int deg_d = static_cast<int>(den.size()) - 1;
    IntPoly quot(deg_n - deg_d + 1, 0);
    for (int i = deg_n; i >= deg_d; --i) {
      std::int64_t c = num[i];
      quot[i - deg_d] = c;
      if (c == 0) continue;
      for (int j = 0; j <= deg_d; ++j) num[i - deg_d + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

const PowerTable& power_table(int m) {
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_table_cache.find(m);
    if (it != g_table_cache.end()) return *it->second;
  }
  const IntPoly& phi_m = cyclotomic_polynomial(m);
  auto table = std::make_unique<PowerTable>();
  int phi = static_cast<int>(phi_m.size()) - 1;
  table->phi = phi;
  int count = std::max(m, 2 * phi);
  IntPoly one(phi, 0);
  one[0] = 1;
  table->rows.push_back(one);
  IntPoly v = one;
  for (int j = 1; j < count; ++j) {
    // multiply v by x and reduce
    std::int64_t top = v[phi - 1];
    IntPoly w(phi, 0);
    for (int i = phi - 1; i >= 1; --i) w[i] = v[i - 1];
    w[0] = 0;
    for (int i = 0; i < phi; ++i) w[i] -= top * phi_m[i];
    v = std::move(w);
    table->rows.push_back(v);
  }
  std::lock_guard lock(g_cache_mutex);
  auto [it, inserted] = g_table_cache.emplace(m, std::move(table));
  return *it->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(Errc::InvalidInput, "conductor must be positive");
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return *it->second;
  }
  auto poly = std::make_unique<IntPoly>(compute_cyclotomic(m));
  std::lock_guard lock(g_cache_mutex);
  auto [it, inserted] = g_phi_cache.emplace(m, std::move(poly));
  return *it->second;
}

CycloNumber::CycloNumber(int conductor) : m_(conductor) {
  if (conductor < 1) throw Error(Errc::InvalidInput, "conductor must be positive");
  c_.assign(static_cast<std::size_t>(totient(conductor)), Rational(0));
}

CycloNumber::CycloNumber(int conductor, const Rational& value) : CycloNumber(conductor) {
  c_[0] = value;
}

CycloNumber::CycloNumber(int conductor, std::vector<Rational> coeffs) : CycloNumber(conductor) {
  if (coeffs.size() != c_.size()) throw Error(Errc::InvalidInput, "coefficient vector has wrong length");
  c_ = std::move(coeffs);
}

CycloNumber CycloNumber::root_of_unity(int conductor, std::int64_t k) {
  CycloNumber z(conductor);
  const PowerTable& t = power_table(conductor);
  std::int64_t j = ((k % conductor) + conductor) % conductor;
  const IntPoly& row = t.rows[static_cast<std::size_t>(j)];
  for (int i = 0; i < t.phi; ++i) z.c_[i] = row[i];
  return z;
}

CycloNumber CycloNumber::power_sum(int conductor, const std::vector<std::int64_t>& mult) {
  CycloNumber z(conductor);
  const PowerTable& t = power_table(conductor);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(t.phi), 0);
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (mult[k] == 0) continue;
    const IntPoly& row = t.rows[k % static_cast<std::size_t>(conductor)];
    for (int i = 0; i < t.phi; ++i) acc[i] += mult[k] * row[i];
  }
  for (int i = 0; i < t.phi; ++i) z.c_[i] = Rational(static_cast<long>(acc[i]));
  return z;
}

CycloNumber CycloNumber::embed(int target) const {
  if (target % m_ != 0) throw Error(Errc::ConductorMismatch, "cannot embed Q(zeta_" + std::to_string(m_) +
                                                             ") into Q(zeta_" + std::to_string(target) + ")");
  if (target == m_) return *this;
  CycloNumber out(target);
  const PowerTable& t = power_table(target);
  int step = target / m_;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const IntPoly& row = t.rows[(k * step) % target];
    for (int i = 0; i < t.phi; ++i)
      if (row[i] != 0) out.c_[i] += c_[k] * Rational(static_cast<long>(row[i]));
  }
  return out;
}

bool CycloNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::optional<Rational> CycloNumber::rational_value() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

CycloNumber CycloNumber::galois(std::int64_t k) const {
  if (std::gcd(k, static_cast<std::int64_t>(m_)) != 1)
    throw Error(Errc::InvalidInput, "Galois exponent must be coprime to the conductor");
  CycloNumber out(m_);
  const PowerTable& t = power_table(m_);
  std::int64_t kk = ((k % m_) + m_) % m_;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const IntPoly& row = t.rows[(j * kk) % m_];
    for (int i = 0; i < t.phi; ++i)
      if (row[i] != 0) out.c_[i] += c_[j] * Rational(static_cast<long>(row[i]));
  }
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.m_ != m_) {
    int l = std::lcm(m_, o.m_);
    *this = embed(l);
    return *this += o.embed(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycloNumber& CycloNumber::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.m_ != m_) {
    int l = std::lcm(m_, o.m_);
    *this = embed(l);
    return *this *= o.embed(l);
  }
  const PowerTable& t = power_table(m_);
  int phi = t.phi;
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1), Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  for (int i = 0; i < phi; ++i) c_[i] = prod[i];
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const IntPoly& row = t.rows[k];
    for (int i = 0; i < phi; ++i)
      if (row[i] != 0) c_[i] += prod[k] * Rational(static_cast<long>(row[i]));
  }
  return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  int l = std::lcm(a.m_, b.m_);
  return a.embed(l).c_ == b.embed(l).c_;
}

std::string CycloNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) out << "-";
    Rational a = abs(c_[i]);
    if (i == 0) out << a.get_str();
    else {
      if (a != 1) out << a.get_str() << "*";
      out << "z" << m_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace blockext

namespace blockext {

bool verify_cyclotomic_identity(std::int64_t p, int n) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "p must be prime");
  if (n < 1) throw Error(Errc::InvalidInput, "n must be at least 1");
  auto m = static_cast<int>(ipow(p, n));
  CycloNumber prod(m, Rational(1));
  CycloNumber one(m, Rational(1));
  for (int i = 1; i < m; ++i) {
    if (i % p == 0) continue;
    prod *= one - CycloNumber::root_of_unity(m, i);
  }
  return prod == CycloNumber(m, Rational(static_cast<long>(p)));
}

}  // namespace blockext
