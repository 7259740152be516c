#include "blockext/omodule.hpp"

#include <algorithm>
#include <sstream>

#include "blockext/errors.hpp"

namespace blockext {

OModuleClass::OModuleClass(int free_rank, std::vector<Valuation> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw Error(Errc::InvalidInput, "negative free rank");
  for (const auto& v : torsion_)
    if (v.num() == 0) throw Error(Errc::InvalidInput, "torsion valuations must be positive");
  std::sort(torsion_.begin(), torsion_.end());
}

std::string OModuleClass::to_string() const {
  std::ostringstream out;
  out << "(" << free_rank_ << ",{";
  for (std::size_t i = 0; i < torsion_.size(); ++i) out << (i ? "," : "") << torsion_[i].to_string();
  out << "})";
  return out.str();
}

std::string OModuleClass::pretty() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("O");
  if (free_rank_ > 1) parts.push_back("O^" + std::to_string(free_rank_));
  for (const auto& v : torsion_) parts.push_back(v.pretty_quotient());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

OModuleClass operator+(const OModuleClass& a, const OModuleClass& b) {
  std::vector<Valuation> t = a.torsion_;
  t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
  return OModuleClass(a.free_rank_ + b.free_rank_, std::move(t));
}

OModuleClass tensor_tor(const OModuleClass& a, const OModuleClass& b, TensorKind which) {
  std::vector<Valuation> t;
  int free = 0;
  if (which == TensorKind::Tensor) {
    free = a.free_rank() * b.free_rank();
    for (int k = 0; k < a.free_rank(); ++k) t.insert(t.end(), b.torsion().begin(), b.torsion().end());
    for (int k = 0; k < b.free_rank(); ++k) t.insert(t.end(), a.torsion().begin(), a.torsion().end());
  }
  // O/aO (x) O/bO and Tor_1(O/aO, O/bO) are both O/cO with v(c) = min(v(a), v(b)).
  for (const auto& x : a.torsion())
    for (const auto& y : b.torsion()) t.push_back(std::min(x, y));
  return OModuleClass(free, std::move(t));
}

OModuleClass kunneth_assemble(std::span<const OModuleClass> left,
                              std::span<const OModuleClass> right, int n) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative degree");
  auto need = static_cast<std::size_t>(n) + 2;
  if (left.size() < need || right.size() < need)
    throw Error(Errc::InvalidInput, "Kunneth assembly needs degrees 0.." + std::to_string(n + 1));
  OModuleClass out;
  for (int i = 0; i <= n; ++i) out = out + tensor_tor(left[i], right[n - i], TensorKind::Tensor);
  for (int i = 0; i <= n + 1; ++i)
    out = out + tensor_tor(left[i], right[n + 1 - i], TensorKind::Tor1);
  return out;
}

}  // namespace blockext
