#pragma once

// Dense exact matrices and vectors over a field context. Determinants come
// from Gaussian elimination, adjugates from cofactor minors (sizes here stay
// small), so det/adjugate stay meaningful for singular inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/field.hpp"

namespace goodrep {

using Vec = std::vector<Scalar>;

inline Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector sizes differ");
  Vec r;
  r.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::DimensionMismatch, "vector sizes differ");
  Vec r;
  r.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

inline Vec vec_scaled(const Vec& a, const Scalar& s) {
  Vec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * s);
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, int rows, int cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, f_->zero()) {}

  static Matrix identity(const FieldPtr& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
  }

  static Matrix from_rows(const FieldPtr& f, const std::vector<Vec>& rows) {
    require(!rows.empty(), Errc::EmptyInput, "matrix needs at least one row");
    Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      require(static_cast<int>(rows[i].size()) == m.cols_, Errc::DimensionMismatch, "ragged rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  // Convenience for tests and builtins: integer entries row-major.
  static Matrix from_ints(const FieldPtr& f, int rows, int cols, const std::vector<int64_t>& vals) {
    require(static_cast<int>(vals.size()) == rows * cols, Errc::DimensionMismatch, "entry count");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = f->from_int(vals[i * cols + j]);
    return m;
  }

  const FieldPtr& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
  }

  bool operator==(const Matrix& o) const {
    return same_field(f_, o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    require_same_field(f_, o.f_);
    require(cols_ == o.rows_, Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
      }
    return r;
  }
  Matrix scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
  }
  Matrix transposed() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Vec apply(const Vec& v) const {
    require(static_cast<int>(v.size()) == cols_, Errc::DimensionMismatch, "matrix-vector shape");
    Vec r(rows_, f_->zero());
    for (int i = 0; i < rows_; ++i) {
      Scalar acc = f_->zero();
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) acc = acc + at(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (i == j && !at(i, j).is_one()) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  // Reduced row echelon form; returns the rank, records pivot columns.
  Matrix rref(int* rank_out = nullptr, std::vector<int>* pivots_out = nullptr) const {
    Matrix m = *this;
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
      int piv = -1;
      for (int i = rank; i < rows_; ++i)
        if (!m.at(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      m.swap_rows(piv, rank);
      Scalar inv = m.at(rank, col).inverse();
      for (int j = col; j < cols_; ++j) m.at(rank, j) = m.at(rank, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == rank || m.at(i, col).is_zero()) continue;
        Scalar c = m.at(i, col);
        for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - c * m.at(rank, j);
      }
      pivots.push_back(col);
      ++rank;
    }
    if (rank_out) *rank_out = rank;
    if (pivots_out) *pivots_out = pivots;
    return m;
  }

  int rank() const {
    int r = 0;
    rref(&r);
    return r;
  }

  Scalar det() const {
    require(is_square(), Errc::NotSquare, "determinant needs a square matrix");
    Matrix m = *this;
    Scalar d = f_->one();
    for (int col = 0; col < cols_; ++col) {
      int piv = -1;
      for (int i = col; i < rows_; ++i)
        if (!m.at(i, col).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return f_->zero();
      if (piv != col) {
        m.swap_rows(piv, col);
        d = -d;
      }
      d = d * m.at(col, col);
      Scalar inv = m.at(col, col).inverse();
      for (int i = col + 1; i < rows_; ++i) {
        if (m.at(i, col).is_zero()) continue;
        Scalar c = m.at(i, col) * inv;
        for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - c * m.at(col, j);
      }
    }
    return d;
  }

  Matrix inverse() const {
    require(is_square(), Errc::NotSquare, "inverse needs a square matrix");
    Matrix aug(f_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = f_->one();
    }
    int rank = 0;
    Matrix r = aug.rref(&rank);
    require(rank == rows_, Errc::SingularMatrix, "matrix is singular");
    Matrix inv(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
    return inv;
  }

  bool is_invertible() const { return is_square() && !det().is_zero(); }

  // Determinant together with the adjugate: a * adj(a) = det(a) * I holds
  // whether or not a is invertible.
  std::pair<Scalar, Matrix> det_adj() const {
    require(is_square(), Errc::NotSquare, "adjugate needs a square matrix");
    int n = rows_;
    Matrix adj(f_, n, n);
    if (n == 1) {
      adj.at(0, 0) = f_->one();
      return {at(0, 0), adj};
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix minor(f_, n - 1, n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
          if (r == i) continue;
          for (int c = 0, mc = 0; c < n; ++c) {
            if (c == j) continue;
            minor.at(mr, mc) = at(r, c);
            ++mc;
          }
          ++mr;
        }
        Scalar cof = minor.det();
        if ((i + j) % 2) cof = -cof;
        adj.at(j, i) = cof;  // adjugate = transposed cofactors
      }
    return {det(), adj};
  }

  // Block substitution: each entry m_ij becomes m_ij * I_n.
  Matrix blowup(int n) const {
    Matrix r(f_, rows_ * n, cols_ * n);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero()) continue;
        for (int k = 0; k < n; ++k) r.at(i * n + k, j * n + k) = at(i, j);
      }
    return r;
  }

  std::string key() const {
    // Dense canonical serialization, used for hashing group elements.
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const auto& x : e_) {
      s += x.str();
      s += ";";
    }
    return s;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    require_same_field(f_, o.f_);
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::DimensionMismatch, "matrix shapes differ");
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  FieldPtr f_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

// J e_i = e_{perm[i]}: entry (perm[c], c) = 1. With this convention
// perm_matrix(p o q) = perm_matrix(p) * perm_matrix(q).
inline Matrix perm_matrix(const FieldPtr& f, const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  Matrix m(f, n, n);
  for (int c = 0; c < n; ++c) {
    require(perm[c] >= 0 && perm[c] < n && !seen[perm[c]], Errc::NotBijection,
            "permutation image list is not a bijection");
    seen[perm[c]] = true;
    m.at(perm[c], c) = f->one();
  }
  return m;
}

}  // namespace goodrep
