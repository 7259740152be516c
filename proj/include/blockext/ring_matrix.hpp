#pragma once

#include <cstdint>
#include <vector>

#include "blockext/chain_ring.hpp"

namespace blockext {

/// Dense matrix over a ChainRing, row-major with width() words per entry.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingPtr ring, int rows, int cols);
  static RingMatrix identity(RingPtr ring, int n);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t* at(int i, int j) { return data_.data() + offset(i, j); }
  const std::int64_t* at(int i, int j) const { return data_.data() + offset(i, j); }
  ChainRing::Elem get(int i, int j) const;
  void set(int i, int j, const ChainRing::Elem& v);

  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix scaled(const ChainRing::Elem& s) const;
  RingMatrix transpose() const;
  /// Kronecker product: (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
  RingMatrix kron(const RingMatrix& o) const;
  RingMatrix block(int r0, int c0, int nrows, int ncols) const;
  void set_block(int r0, int c0, const RingMatrix& b);
  bool is_zero() const;
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] -= s * row[src]
  void row_sub(int dst, int src, const std::int64_t* s, int from_col = 0);
  /// col[dst] -= s * col[src]
  void col_sub(int dst, int src, const std::int64_t* s, int from_row = 0);
  void scale_row(int r, const std::int64_t* s);
  void scale_col(int c, const std::int64_t* s);

 private:
  std::size_t offset(int i, int j) const {
    return (static_cast<std::size_t>(i) * cols_ + j) * static_cast<std::size_t>(width_);
  }
  RingPtr ring_;
  int rows_ = 0;
  int cols_ = 0;
  int width_ = 1;
  std::vector<std::int64_t> data_;
};

/// U * M * V = diag(pi^k_1, ..., pi^k_r) with U, V invertible; k ascending and
/// k = ring().length() for diagonal entries that vanish at this precision.
struct SmithForm {
  std::vector<int> exponents;
  RingMatrix U, U_inv, V;
};

SmithForm snf_chain_ring(const RingMatrix& m, bool with_transforms = true);

/// Exponents strictly below length() - margin() count as non-zero.
int nonzero_pivots(const std::vector<int>& exponents, const ChainRing& ring);

/// Basis of a direct summand spanned by the columns of `gens`: B (n x d)
/// and a left inverse P (d x n) with P B = I.  Throws IdempotentNotSplit if
/// the span is not a free direct summand at this precision.
struct SummandBasis {
  RingMatrix basis;
  RingMatrix left_inverse;
};
SummandBasis summand_basis(const RingMatrix& gens);

}  // namespace blockext
