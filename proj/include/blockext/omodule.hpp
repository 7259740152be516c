#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blockext/valuation.hpp"

namespace blockext {

/// Isomorphism class of a finitely generated O-module: O^free_rank plus
/// a sum of O/aO, recorded by the valuations v(a) > 0 (sorted ascending).
class OModuleClass {
 public:
  OModuleClass() = default;
  OModuleClass(int free_rank, std::vector<Valuation> torsion);

  static OModuleClass zero() { return {}; }
  static OModuleClass free(int rank) { return {rank, {}}; }

  int free_rank() const { return free_rank_; }
  const std::vector<Valuation>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion() const { return free_rank_ == 0; }
  /// dim_k of k (x) M.
  int residue_dimension() const { return free_rank_ + static_cast<int>(torsion_.size()); }

  std::string to_string() const;
  /// "O^2 + O/p + O/(1-zeta_3)" style; "0" for the zero module.
  std::string pretty() const;

  friend bool operator==(const OModuleClass&, const OModuleClass&) = default;
  friend OModuleClass operator+(const OModuleClass& a, const OModuleClass& b);

 private:
  int free_rank_ = 0;
  std::vector<Valuation> torsion_;
};

enum class TensorKind { Tensor, Tor1 };

/// Tensor product or Tor_1 over O, computed summand by summand.
OModuleClass tensor_tor(const OModuleClass& a, const OModuleClass& b, TensorKind which);

/// Middle term of the split Kunneth sequence in degree n:
/// sum_{i+j=n} L_i (x) R_j  +  sum_{i+j=n+1} Tor_1(L_i, R_j).
/// Both lists must cover degrees 0..n+1.
OModuleClass kunneth_assemble(std::span<const OModuleClass> left,
                              std::span<const OModuleClass> right, int n);

}  // namespace blockext
