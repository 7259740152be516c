#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blockext {

using Rational = mpq_class;

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Exact element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1)
/// modulo the m-th cyclotomic polynomial.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(1) {}
  explicit CycloNumber(int conductor);
  CycloNumber(int conductor, const Rational& value);
  CycloNumber(int conductor, std::vector<Rational> coeffs);

  /// zeta_m^k.
  static CycloNumber root_of_unity(int conductor, std::int64_t k);
  /// sum_k mult[k] zeta_m^k for k < mult.size() <= m.
  static CycloNumber power_sum(int conductor, const std::vector<std::int64_t>& mult);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Same number viewed in Q(zeta_target); target must be a multiple of the conductor.
  CycloNumber embed(int target) const;
  bool is_zero() const;
  std::optional<Rational> rational_value() const;
  /// Image under zeta -> zeta^k, gcd(k, m) = 1.
  CycloNumber galois(std::int64_t k) const;
  CycloNumber conj() const { return galois(-1); }

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& r);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
  CycloNumber operator-() const;
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  std::string to_string() const;

 private:
  int m_;
  std::vector<Rational> c_;
};

}  // namespace blockext

namespace blockext {

/// Checks prod_{1 <= i < p^n, p does not divide i} (1 - zeta^i) = p in Q(zeta_{p^n}).
bool verify_cyclotomic_identity(std::int64_t p, int n);

}  // namespace blockext
