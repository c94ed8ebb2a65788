#pragma once

// Standard representations: the Borel B_n on upper-triangular matrices with
// its L_i family, SL2 symmetric powers by the substitution action, and the
// characteristic-p invariant subspace of V_{2p-2}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/group.hpp"
#include "goodrep/matrix.hpp"
#include "goodrep/rep.hpp"
#include "goodrep/subspace.hpp"

namespace goodrep {

// Generators of the invertible upper-triangular group B_n: one-parameter
// diagonal pieces per slot (a multiplicative generator over finite fields;
// 2 and -1 per slot in characteristic zero, generating a finitely generated
// dense-enough subgroup for sampling) plus the elementary matrices 1 + e_ij.
inline std::vector<Matrix> bn_generators(const FieldPtr& f, int n) {
  require(n >= 1, Errc::InvalidArgument, "n must be at least 1");
  std::vector<Matrix> gens;
  if (f->is_finite()) {
    Scalar c = f->element_at(f->multiplicative_generator());
    for (int i = 0; i < n; ++i) {
      Matrix d = Matrix::identity(f, n);
      d.at(i, i) = c;
      if (!(c.is_one())) gens.push_back(std::move(d));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      Matrix d2 = Matrix::identity(f, n);
      d2.at(i, i) = f->from_int(2);
      gens.push_back(std::move(d2));
      Matrix dm = Matrix::identity(f, n);
      dm.at(i, i) = -f->one();
      gens.push_back(std::move(dm));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix e = Matrix::identity(f, n);
      e.at(i, j) = f->one();
      gens.push_back(std::move(e));
    }
  if (gens.empty()) gens.push_back(Matrix::identity(f, n));  // B_1 over GF(2)
  return gens;
}

inline MatrixGroup bn_group(const FieldPtr& f, int n,
                            int64_t element_cap = MatrixGroup::kDefaultCap) {
  return MatrixGroup(f, n, bn_generators(f, n), element_cap);
}

// Row-major flattening of the upper triangle: (0,0), (0,1), ..., (0,n-1),
// (1,1), ..., (n-1,n-1).
inline std::vector<std::pair<int, int>> upper_triangle_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) slots.emplace_back(r, c);
  return slots;
}

// Left multiplication by b on the flattened upper-triangular space:
// b * E_rc places column r of b into column c, which stays upper-triangular.
inline Matrix left_mult_upper(const FieldPtr& f, int n, const Matrix& b) {
  require(b.rows() == n && b.cols() == n, Errc::DimensionMismatch,
          "left multiplier size does not match n");
  auto slots = upper_triangle_slots(n);
  int dim = static_cast<int>(slots.size());
  Matrix img(f, dim, dim);
  for (int col = 0; col < dim; ++col) {
    auto [r, c] = slots[static_cast<size_t>(col)];
    for (int row = 0; row < dim; ++row) {
      auto [i, j] = slots[static_cast<size_t>(row)];
      if (j == c) img.at(row, col) = b.at(i, r);
    }
  }
  return img;
}

// L_i = { A upper-triangular : A_ii = 0 } in flattened coordinates (i 0-based).
inline Subspace upper_diag_zero_subspace(const FieldPtr& f, int n, int i) {
  require(i >= 0 && i < n, Errc::IndexOutOfRange, "diagonal slot out of range");
  auto slots = upper_triangle_slots(n);
  int dim = static_cast<int>(slots.size());
  std::vector<Vec> rows;
  for (int k = 0; k < dim; ++k) {
    auto [r, c] = slots[static_cast<size_t>(k)];
    if (r == i && c == i) continue;
    Vec e(static_cast<size_t>(dim), f->zero());
    e[static_cast<size_t>(k)] = f->one();
    rows.push_back(std::move(e));
  }
  return Subspace::span_rows(f, dim, rows);
}

struct UpperTriangularRep {
  Representation rep;
  std::vector<Subspace> family;  // L_i = { A : A_ii = 0 }
};

// B_n acting by left multiplication on the space of upper-triangular
// matrices; the complement of the union of the L_i is the invertible locus.
inline UpperTriangularRep upper_triangular_rep(
    const FieldPtr& f, int n, int64_t element_cap = MatrixGroup::kDefaultCap) {
  int dim = n * (n + 1) / 2;
  auto left_mult = [f, n](const Matrix& b) { return left_mult_upper(f, n, b); };
  MatrixGroup g = bn_group(f, n, element_cap);
  std::vector<Matrix> images;
  images.reserve(g.generators().size());
  for (const auto& gen : g.generators()) images.push_back(left_mult(gen));
  Representation rep(std::move(g), dim, std::move(images), left_mult);

  std::vector<Subspace> family;
  for (int i = 0; i < n; ++i) family.push_back(upper_diag_zero_subspace(f, n, i));
  return UpperTriangularRep{std::move(rep), std::move(family)};
}

// Standard generators of SL2: the two unipotents, plus their alpha twins
// over proper extension fields.
inline std::vector<Matrix> sl2_generators(const FieldPtr& f) {
  std::vector<Matrix> gens;
  Matrix u = Matrix::identity(f, 2), l = Matrix::identity(f, 2);
  u.at(0, 1) = f->one();
  l.at(1, 0) = f->one();
  gens.push_back(u);
  gens.push_back(l);
  if (f->kind() == FieldKind::Extension) {
    Scalar alpha = f->element_at(f->characteristic());
    Matrix ua = Matrix::identity(f, 2), la = Matrix::identity(f, 2);
    ua.at(0, 1) = alpha;
    la.at(1, 0) = alpha;
    gens.push_back(ua);
    gens.push_back(la);
  }
  return gens;
}

inline MatrixGroup sl2_group(const FieldPtr& f,
                             int64_t element_cap = MatrixGroup::kDefaultCap) {
  return MatrixGroup(f, 2, sl2_generators(f), element_cap);
}

namespace detail {

// Homogeneous form of degree m as its coefficient vector on x^m, ..., y^m.
inline std::vector<Scalar> form_mul(const FieldPtr& f, const std::vector<Scalar>& a,
                                    const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size() + b.size() - 1, f->zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

inline std::vector<Scalar> form_pow(const FieldPtr& f, const std::vector<Scalar>& a,
                                    int e) {
  std::vector<Scalar> out{f->one()};
  for (int i = 0; i < e; ++i) out = form_mul(f, out, a);
  return out;
}

}  // namespace detail

// Image of a 2x2 matrix on degree-d forms under the substitution
// y -> ay - cx, x -> -by + dx, in the monomial basis x^d, x^{d-1}y, ..., y^d.
inline Matrix sym_power_image(const FieldPtr& f, int d, const Matrix& g) {
  require(g.rows() == 2 && g.cols() == 2, Errc::DimensionMismatch,
          "symmetric power acts on 2x2 matrices");
  const Scalar &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 0), &dd = g.at(1, 1);
  std::vector<Scalar> xs{dd, -b};  // x -> dx - by
  std::vector<Scalar> ys{-c, a};   // y -> ay - cx
  Matrix img(f, d + 1, d + 1);
  for (int k = 0; k <= d; ++k) {
    auto col = detail::form_mul(f, detail::form_pow(f, xs, d - k),
                                detail::form_pow(f, ys, k));
    for (int r = 0; r <= d; ++r) img.at(r, k) = col[static_cast<size_t>(r)];
  }
  return img;
}

struct SymPowerRep {
  FieldPtr f;
  int d = 0;
  Representation rep;
};

// The (d+1)-dimensional symmetric power of the standard SL2 representation.
inline SymPowerRep sym_power(const FieldPtr& f, int d,
                             int64_t element_cap = MatrixGroup::kDefaultCap) {
  require(d >= 0, Errc::InvalidArgument, "degree must be nonnegative");
  MatrixGroup g = sl2_group(f, element_cap);
  std::vector<Matrix> images;
  images.reserve(g.generators().size());
  for (const auto& gen : g.generators()) images.push_back(sym_power_image(f, d, gen));
  auto eval = [f, d](const Matrix& m) { return sym_power_image(f, d, m); };
  Representation rep(std::move(g), d + 1, std::move(images), eval);
  return SymPowerRep{f, d, std::move(rep)};
}

// The swap [[0,1],[1,0]]; its substitution action on degree-d forms is an
// involution, and for even d it factors through PGL2.
inline Matrix swap_matrix(const FieldPtr& f) {
  Matrix s(f, 2, 2);
  s.at(0, 1) = f->one();
  s.at(1, 0) = f->one();
  return s;
}

// The subspace of V_{2p-2} of forms with no x^{p-1}y^{p-1} term; invariant
// exactly because of the characteristic, which is re-verified here rather
// than assumed.
inline Subspace char_p_subspace(const FieldPtr& f, int d) {
  require(f->is_finite(), Errc::CharacteristicZero,
          "the invariant subspace is a positive-characteristic phenomenon");
  int64_t p = f->characteristic();
  require(d == 2 * p - 2, Errc::WrongDegree,
          "degree must be 2p-2 = " + std::to_string(2 * p - 2) + ", got " +
              std::to_string(d));
  int mid = static_cast<int>(p) - 1;  // slot of x^{p-1}y^{p-1}
  std::vector<Vec> rows;
  for (int k = 0; k <= d; ++k) {
    if (k == mid) continue;
    Vec e(static_cast<size_t>(d + 1), f->zero());
    e[static_cast<size_t>(k)] = f->one();
    rows.push_back(std::move(e));
  }
  Subspace s = Subspace::span_rows(f, d + 1, rows);
  SymPowerRep v = sym_power(f, d);
  require(v.rep.is_invariant(s), Errc::NotInvariant,
          "x^{p-1}y^{p-1} complement failed the invariance check");
  return s;
}

}  // namespace goodrep
