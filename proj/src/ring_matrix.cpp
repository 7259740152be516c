#include "blockext/ring_matrix.hpp"

#include <algorithm>

#include "blockext/errors.hpp"

namespace blockext {

RingMatrix::RingMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), width_(ring_->width()),
      data_(static_cast<std::size_t>(rows) * cols * ring_->width(), 0) {}

RingMatrix RingMatrix::identity(RingPtr ring, int n) {
  RingMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i)[0] = 1 % ring->modulus();
  return m;
}

ChainRing::Elem RingMatrix::get(int i, int j) const {
  const std::int64_t* p = at(i, j);
  return ChainRing::Elem(p, p + width_);
}

void RingMatrix::set(int i, int j, const ChainRing::Elem& v) { std::copy(v.begin(), v.end(), at(i, j)); }

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::InvalidInput, "matrix shape mismatch");
  RingMatrix out(ring_, rows_, o.cols_);
  const ChainRing& R = *ring_;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t* a = at(i, k);
      if (R.is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const std::int64_t* b = o.at(k, j);
        if (!R.is_zero(b)) R.mul_add(out.at(i, j), a, b);
      }
    }
  return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::InvalidInput, "matrix shape mismatch");
  RingMatrix out(ring_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) ring_->add(out.at(i, j), at(i, j), o.at(i, j));
  return out;
}

RingMatrix RingMatrix::scaled(const ChainRing::Elem& s) const {
  RingMatrix out(ring_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) ring_->mul(out.at(i, j), at(i, j), s.data());
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) std::copy(at(i, j), at(i, j) + width_, out.at(j, i));
  return out;
}

RingMatrix RingMatrix::kron(const RingMatrix& o) const {
  RingMatrix out(ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const std::int64_t* a = at(i, j);
      if (ring_->is_zero(a)) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) ring_->mul(out.at(i * o.rows_ + k, j * o.cols_ + l), a, o.at(k, l));
    }
  return out;
}

RingMatrix RingMatrix::block(int r0, int c0, int nrows, int ncols) const {
  RingMatrix out(ring_, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) std::copy(at(r0 + i, c0 + j), at(r0 + i, c0 + j) + width_, out.at(i, j));
  return out;
}

void RingMatrix::set_block(int r0, int c0, const RingMatrix& b) {
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) std::copy(b.at(i, j), b.at(i, j) + width_, at(r0 + i, c0 + j));
}

bool RingMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void RingMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap_ranges(at(a, j), at(a, j) + width_, at(b, j));
}

void RingMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap_ranges(at(i, a), at(i, a) + width_, at(i, b));
}

void RingMatrix::row_sub(int dst, int src, const std::int64_t* s, int from_col) {
  for (int j = from_col; j < cols_; ++j) {
    const std::int64_t* x = at(src, j);
    if (!ring_->is_zero(x)) ring_->mul_sub(at(dst, j), s, x);
  }
}

void RingMatrix::col_sub(int dst, int src, const std::int64_t* s, int from_row) {
  for (int i = from_row; i < rows_; ++i) {
    const std::int64_t* x = at(i, src);
    if (!ring_->is_zero(x)) ring_->mul_sub(at(i, dst), s, x);
  }
}

void RingMatrix::scale_row(int r, const std::int64_t* s) {
  ChainRing::Elem tmp(static_cast<std::size_t>(width_));
  for (int j = 0; j < cols_; ++j) {
    ring_->mul(tmp.data(), at(r, j), s);
    std::copy(tmp.begin(), tmp.end(), at(r, j));
  }
}

void RingMatrix::scale_col(int c, const std::int64_t* s) {
  ChainRing::Elem tmp(static_cast<std::size_t>(width_));
  for (int i = 0; i < rows_; ++i) {
    ring_->mul(tmp.data(), at(i, c), s);
    std::copy(tmp.begin(), tmp.end(), at(i, c));
  }
}

SmithForm snf_chain_ring(const RingMatrix& m, bool with_transforms) {
  const RingPtr& ring = m.ring();
  const ChainRing& R = *ring;
  const int rows = m.rows(), cols = m.cols();
  const int L = R.length();
  RingMatrix A = m;
  SmithForm out;
  if (with_transforms) {
    out.U = RingMatrix::identity(ring, rows);
    out.U_inv = RingMatrix::identity(ring, rows);
    out.V = RingMatrix::identity(ring, cols);
  }
  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    int best = L, bi = -1, bj = -1;
    for (int i = t; i < rows && best > 0; ++i)
      for (int j = t; j < cols; ++j) {
        int v = R.valuation(A.at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) {
      out.exponents.resize(static_cast<std::size_t>(steps), L);
      break;
    }
    A.swap_rows(t, bi);
    A.swap_cols(t, bj);
    if (with_transforms) {
      out.U.swap_rows(t, bi);
      out.U_inv.swap_cols(t, bi);
      out.V.swap_cols(t, bj);
    }
    // Normalize the pivot to pi^best.
    ChainRing::Elem unit = R.div_pi_pow(A.get(t, t), best);
    ChainRing::Elem inv = R.inverse_unit(unit);
    A.scale_row(t, inv.data());
    if (with_transforms) {
      out.U.scale_row(t, inv.data());
      out.U_inv.scale_col(t, unit.data());
    }
    for (int i = t + 1; i < rows; ++i) {
      const std::int64_t* x = A.at(i, t);
      if (R.is_zero(x)) continue;
      ChainRing::Elem qv = R.div_pi_pow(A.get(i, t), best);
      A.row_sub(i, t, qv.data(), t);
      if (with_transforms) {
        out.U.row_sub(i, t, qv.data());
        // U_inv gains col_t += q col_i
        ChainRing::Elem nq = R.neg(qv);
        out.U_inv.col_sub(t, i, nq.data());
      }
    }
    for (int j = t + 1; j < cols; ++j) {
      const std::int64_t* x = A.at(t, j);
      if (R.is_zero(x)) continue;
      ChainRing::Elem qv = R.div_pi_pow(A.get(t, j), best);
      A.col_sub(j, t, qv.data(), t);
      if (with_transforms) out.V.col_sub(j, t, qv.data());
    }
    out.exponents.push_back(best);
  }
  return out;
}

int nonzero_pivots(const std::vector<int>& exponents, const ChainRing& ring) {
  int threshold = ring.length() - ring.margin();
  return static_cast<int>(std::count_if(exponents.begin(), exponents.end(), [&](int k) { return k < threshold; }));
}

SummandBasis summand_basis(const RingMatrix& gens) {
  SmithForm s = snf_chain_ring(gens, true);
  const ChainRing& R = *gens.ring();
  int threshold = R.length() - R.margin();
  int d = 0;
  for (int k : s.exponents) {
    if (k == 0) ++d;
    else if (k < threshold)
      throw Error(Errc::IdempotentNotSplit, "span is not a direct summand at this precision");
  }
  SummandBasis out;
  out.basis = s.U_inv.block(0, 0, gens.rows(), d);
  out.left_inverse = s.U.block(0, 0, d, gens.rows());
  return out;
}

}  // namespace blockext
