#include "blockext/valuation.hpp"

#include <numeric>

#include "blockext/errors.hpp"

namespace blockext {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int p_adic_order(std::int64_t n, std::int64_t p) {
  int k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Valuation::Valuation(std::int64_t p, std::int64_t num, std::int64_t den) : p_(p) {
  if (den <= 0) throw Error(Errc::InvalidInput, "valuation denominator must be positive");
  if (num < 0) throw Error(Errc::InvalidInput, "valuation must be non-negative");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Valuation::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Valuation::pretty_quotient() const {
  if (den_ == 1) {
    if (num_ == 1) return "O/p";
    return "O/p^" + std::to_string(num_);
  }
  // 1/(p^(n-1)(p-1)) is v(1 - zeta_{p^n}).
  if (num_ == 1 && p_ > 1 && den_ % (p_ - 1) == 0) {
    std::int64_t rest = den_ / (p_ - 1);
    int n = 1;
    while (rest % p_ == 0) {
      rest /= p_;
      ++n;
    }
    if (rest == 1) return "O/(1-zeta_" + std::to_string(ipow(p_, n)) + ")";
  }
  return "O/pi^(" + to_string() + ")";
}

Valuation val_one_minus_zeta(std::int64_t p, int n) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "p must be prime");
  if (n < 1) throw Error(Errc::InvalidInput, "n must be at least 1");
  return Valuation(p, 1, ipow(p, n - 1) * (p - 1));
}

}  // namespace blockext
