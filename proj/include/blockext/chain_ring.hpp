#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "blockext/cyclo.hpp"

namespace blockext {

/// Truncated coefficient ring O/p^N O with O = W(F_{p^f})[zeta_{p^a}].
///
/// Elements are stored in the basis pi^j x^k (0 <= j < e, 0 <= k < f) where
/// x generates the unramified part (x is a root of a monic lift of an
/// irreducible polynomial over F_p) and pi = zeta_{p^a} - 1 satisfies the
/// Eisenstein polynomial Phi_{p^a}(pi + 1).  For a = 0, pi = p and e = 1.
/// In this basis v_pi(sum c_jk pi^j x^k) = min_j (e * v_p(c_j) + j).
///
/// N = 1, a = 0 gives a finite field; this is used both for the residue
/// field of O and for auxiliary prime fields F_l with l = 1 mod M.
class ChainRing {
 public:
  using Elem = std::vector<std::int64_t>;

  /// Ring containing roots of unity of order m_prime (coprime to p) and p^a.
  static std::shared_ptr<const ChainRing> create(std::int64_t p, int N, std::int64_t m_prime, int a);

  std::int64_t p() const { return p_; }
  int precision() const { return N_; }
  int unramified_degree() const { return f_; }
  int ramification() const { return e_; }
  int p_power_level() const { return a_; }
  std::int64_t m_prime() const { return m_prime_; }
  /// Order of the distinguished primitive root of unity zeta_M, M = m' p^a.
  std::int64_t conductor() const { return M_; }
  /// Number of int64 words per element.
  int width() const { return d_; }
  std::int64_t modulus() const { return q_; }
  /// pi-exponent of zero: e * N.
  int length() const { return e_ * N_; }
  /// Exponents >= length() - margin() are read as zero.
  int margin() const { return N_ == 1 ? 0 : 2; }
  bool is_field() const { return N_ == 1 && e_ == 1; }
  /// v(pi) with v(p) = 1 is 1/e.

  Elem zero() const { return Elem(static_cast<std::size_t>(d_), 0); }
  Elem one() const { return from_int(1); }
  Elem from_int(std::int64_t v) const;
  /// Denominator must be prime to p.
  Elem from_rational(const Rational& r) const;
  /// zeta_M^k.
  Elem root_of_unity(std::int64_t k) const;
  /// Image of an element of Q(zeta_m), m | M, under zeta_m -> zeta_M^(M/m).
  Elem from_cyclo(const CycloNumber& c) const;
  Elem pi() const;

  // Raw kernels; pointers refer to width() words.
  void add(std::int64_t* out, const std::int64_t* a, const std::int64_t* b) const;
  void sub(std::int64_t* out, const std::int64_t* a, const std::int64_t* b) const;
  void neg(std::int64_t* out, const std::int64_t* a) const;
  void mul(std::int64_t* out, const std::int64_t* a, const std::int64_t* b) const;
  /// acc -= a * b
  void mul_sub(std::int64_t* acc, const std::int64_t* a, const std::int64_t* b) const;
  void mul_add(std::int64_t* acc, const std::int64_t* a, const std::int64_t* b) const;
  bool is_zero(const std::int64_t* a) const;
  bool equal(const std::int64_t* a, const std::int64_t* b) const;
  /// pi-adic valuation, length() for zero.
  int valuation(const std::int64_t* a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t k) const;
  int valuation(const Elem& a) const { return valuation(a.data()); }
  bool is_zero(const Elem& a) const { return is_zero(a.data()); }
  /// Inverse of an element of valuation 0.
  Elem inverse_unit(const Elem& u) const;
  /// Some b with pi^k * b = a; requires valuation(a) >= k.
  Elem div_pi_pow(const Elem& a, int k) const;

 private:
  ChainRing() = default;
  void reduce_product(std::int64_t* out, std::vector<std::int64_t>& tmp) const;
  Elem div_pi(const Elem& a) const;
  std::int64_t modq(std::int64_t v) const {
    v %= q_;
    return v < 0 ? v + q_ : v;
  }

  std::int64_t p_ = 2;
  int N_ = 1;
  int f_ = 1;
  int a_ = 0;
  int e_ = 1;
  int d_ = 1;
  std::int64_t q_ = 2;
  std::int64_t m_prime_ = 1;
  std::int64_t M_ = 1;
  std::vector<std::int64_t> gmod_;               // monic modulus for x, low coefficients g_0..g_{f-1}
  std::vector<std::vector<std::int64_t>> redpi_;  // pi^j, e <= j <= 2e-2, as integer vectors of length e
  Elem w_;                                       // p = pi * w
  std::vector<Elem> zeta_powers_;                // zeta_M^k, 0 <= k < M
  std::vector<std::int64_t> pi_poly_;            // Eisenstein polynomial, degree e
};

using RingPtr = std::shared_ptr<const ChainRing>;

/// Smallest prime l = 1 mod M with l >= start.
std::int64_t prime_one_mod(std::int64_t M, std::int64_t start);

}  // namespace blockext
