#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace blockext {

bool is_prime(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);
/// Euler's totient.
std::int64_t totient(std::int64_t n);
/// Largest k with p^k | n (n != 0).
int p_adic_order(std::int64_t n, std::int64_t p);

/// Valuation on O normalized so that v(p) = 1, stored as a reduced fraction.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::int64_t p, std::int64_t num, std::int64_t den = 1);

  std::int64_t prime() const { return p_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// "O/p^2", "O/(1-zeta_9)", or "O/pi^(3/4)" for anything else.
  std::string pretty_quotient() const;
  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// v(1 - zeta) for zeta a primitive p^n-th root of unity: 1 / (p^(n-1) (p-1)).
Valuation val_one_minus_zeta(std::int64_t p, int n);

}  // namespace blockext
