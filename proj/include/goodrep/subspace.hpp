#pragma once

// Subspaces of F^n held as reduced-row-echelon bases, so equal subspaces
// compare equal syntactically. Sums stack bases; intersections run the
// Zassenhaus block trick; membership reduces against the pivots.

#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/matrix.hpp"

namespace goodrep {

class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldPtr& f, int ambient) {
    Subspace s;
    s.f_ = f;
    s.ambient_ = ambient;
    return s;
  }

  static Subspace full(const FieldPtr& f, int ambient) {
    return span(f, ambient, {Matrix::identity(f, ambient)});
  }

  static Subspace span(const FieldPtr& f, int ambient, const std::vector<Matrix>& generators) {
    std::vector<Vec> rows;
    for (const auto& g : generators) {
      require(g.cols() == ambient, Errc::DimensionMismatch, "generator width != ambient");
      for (int i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
    }
    return span_rows(f, ambient, rows);
  }

  static Subspace span_rows(const FieldPtr& f, int ambient, const std::vector<Vec>& rows) {
    Subspace s = zero(f, ambient);
    if (rows.empty()) return s;
    Matrix m = Matrix::from_rows(f, rows);
    int rank = 0;
    Matrix r = m.rref(&rank);
    if (rank == 0) return s;
    Matrix basis(f, rank, ambient);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < ambient; ++j) basis.at(i, j) = r.at(i, j);
    s.basis_ = std::move(basis);
    s.dim_ = rank;
    return s;
  }

  const FieldPtr& field() const { return f_; }
  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  bool is_full() const { return dim_ == ambient_; }
  const Matrix& basis() const { return basis_; }  // valid only when dim > 0

  Vec basis_row(int i) const { return basis_.row(i); }

  bool operator==(const Subspace& o) const {
    if (!same_field(f_, o.f_) || ambient_ != o.ambient_ || dim_ != o.dim_) return false;
    return dim_ == 0 || basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const Vec& v) const {
    require(static_cast<int>(v.size()) == ambient_, Errc::DimensionMismatch, "vector size != ambient");
    Vec r = v;
    for (int i = 0; i < dim_; ++i) {
      int p = pivot_col(i);
      if (!r[p].is_zero()) {
        Scalar c = r[p];
        for (int j = 0; j < ambient_; ++j) r[j] = r[j] - c * basis_.at(i, j);
      }
    }
    return vec_is_zero(r);
  }

  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.dim_; ++i)
      if (!contains(o.basis_row(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    check_compatible(o);
    std::vector<Vec> rows;
    for (int i = 0; i < dim_; ++i) rows.push_back(basis_row(i));
    for (int i = 0; i < o.dim_; ++i) rows.push_back(o.basis_row(i));
    return span_rows(f_, ambient_, rows);
  }

  Subspace intersect(const Subspace& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return zero(f_, ambient_);
    // Zassenhaus: rref of [B B; C 0]; rows with zero left half carry the
    // intersection in their right half.
    int n = ambient_;
    Matrix block(f_, dim_ + o.dim_, 2 * n);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < n; ++j) {
        block.at(i, j) = basis_.at(i, j);
        block.at(i, n + j) = basis_.at(i, j);
      }
    for (int i = 0; i < o.dim_; ++i)
      for (int j = 0; j < n; ++j) block.at(dim_ + i, j) = o.basis_.at(i, j);
    int rank = 0;
    Matrix r = block.rref(&rank);
    std::vector<Vec> rows;
    for (int i = 0; i < rank; ++i) {
      bool left_zero = true;
      for (int j = 0; j < n && left_zero; ++j) left_zero = r.at(i, j).is_zero();
      if (!left_zero) continue;
      Vec right(n, f_->zero());
      for (int j = 0; j < n; ++j) right[j] = r.at(i, n + j);
      if (!vec_is_zero(right)) rows.push_back(std::move(right));
    }
    return span_rows(f_, ambient_, rows);
  }

  // Image under a linear map (columns act on the ambient space).
  Subspace transform(const Matrix& m) const {
    require(m.cols() == ambient_, Errc::DimensionMismatch, "transform shape mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < dim_; ++i) rows.push_back(m.apply(basis_row(i)));
    return span_rows(f_, m.rows(), rows);
  }

  // Constraint matrix E with S = { x : E x = 0 }; rows of E span the
  // annihilator. Rank counting makes the double-duty of the standard dot
  // product safe over any field.
  Matrix constraints() const {
    if (dim_ == 0) return Matrix::identity(f_, ambient_);
    require(dim_ < ambient_, Errc::InvalidArgument, "full space has no constraints");
    Subspace k = right_kernel(basis_);
    return k.basis_;
  }

  // Right kernel { v : m v = 0 } as a subspace of F^cols.
  static Subspace right_kernel(const Matrix& m) {
    const FieldPtr& f = m.field();
    int rank = 0;
    std::vector<int> pivots;
    Matrix r = m.rref(&rank, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (int j = 0; j < m.cols(); ++j) {
      if (is_pivot[j]) continue;
      Vec v(m.cols(), f->zero());
      v[j] = f->one();
      for (int i = 0; i < rank; ++i) v[pivots[i]] = -r.at(i, j);
      rows.push_back(std::move(v));
    }
    return span_rows(f, m.cols(), rows);
  }

 private:
  int pivot_col(int i) const {
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) return j;
    fail(Errc::InvalidArgument, "zero row in canonical basis");
  }
  void check_compatible(const Subspace& o) const {
    require_same_field(f_, o.f_);
    require(ambient_ == o.ambient_, Errc::DimensionMismatch, "ambient dimensions differ");
  }

  FieldPtr f_;
  int ambient_ = 0;
  int dim_ = 0;
  Matrix basis_;
};

inline Subspace kernel(const Matrix& m) { return Subspace::right_kernel(m); }

inline bool in_union(const std::vector<Subspace>& family, const Vec& v) {
  for (const auto& s : family)
    if (s.contains(v)) return true;
  return false;
}

}  // namespace goodrep
