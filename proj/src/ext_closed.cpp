#include "blockext/ext_closed.hpp"

#include <numeric>

#include "blockext/errors.hpp"
#include "blockext/valuation.hpp"

namespace blockext {

OModuleClass ext_abelian_closed(std::int64_t p, const std::vector<int>& invariants, std::int64_t char_order, int i) {
  if (i < 0 || i > 2) throw Error(Errc::InvalidInput, "closed form covers degrees 0..2 only");
  const int t = static_cast<int>(invariants.size());
  if (char_order == 1) {
    if (i == 0) return OModuleClass::free(1);
    if (i == 1) return OModuleClass::zero();
    std::vector<Valuation> tors;
    for (int n : invariants) tors.emplace_back(p, n);
    return OModuleClass(0, std::move(tors));
  }
  const Valuation v = val_one_minus_zeta(p, p_adic_order(char_order, p));
  if (i == 0) return OModuleClass::zero();
  if (i == 1) return OModuleClass(0, {v});
  return OModuleClass(0, std::vector<Valuation>(static_cast<std::size_t>(t - 1), v));
}

OModuleClass ext_abelian_closed(const AbelianPGroup& D, int lambda1, int lambda2, int i) {
  const int y = D.add(lambda2, D.neg(lambda1));
  return ext_abelian_closed(D.p(), D.exponents(), D.element_order(y), i);
}

std::int64_t restricted_char_order(const AbelianPGroup& D, int y, const std::vector<int>& part) {
  const std::int64_t ex = D.exponent();
  std::int64_t ord = 1;
  for (int x : part) {
    const std::int64_t k = ((D.pairing(y, x) % ex) + ex) % ex;
    ord = std::lcm(ord, ex / std::gcd(ex, k));
  }
  return ord;
}

}  // namespace blockext
