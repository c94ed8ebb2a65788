#pragma once

// N(T)-modules: integer weight labels per basis vector, the action of the
// antidiagonal element J, and the implied torus action H(t) = diag(t^w).
// Assembled from the building blocks W_i (2-dimensional, basis (x^i, y^i)),
// W_0 (trivial) and W_0' (J acts by -1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/group.hpp"
#include "goodrep/matrix.hpp"
#include "goodrep/rep.hpp"
#include "goodrep/subspace.hpp"

namespace goodrep {

struct NTModule {
  FieldPtr f;
  int dim = 0;
  std::vector<int64_t> weights;  // one label per basis vector
  Matrix jmat;                   // action of J

  // Structural axioms: J carries weight w to weight -w, and J^2 acts on the
  // weight-w coordinate by (-1)^w.
  void validate() const {
    require(dim > 0, Errc::InvalidArgument, "module dimension must be positive");
    require(static_cast<int>(weights.size()) == dim, Errc::DimensionMismatch,
            "one weight per basis vector required");
    require(jmat.rows() == dim && jmat.cols() == dim, Errc::DimensionMismatch,
            "jmat size does not match module dimension");
    require(jmat.is_invertible(), Errc::NotInvertible, "jmat must be invertible");
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r)
        if (!jmat.at(r, c).is_zero())
          require(weights[static_cast<size_t>(r)] == -weights[static_cast<size_t>(c)],
                  Errc::InvalidArgument,
                  "jmat does not map weight " +
                      std::to_string(weights[static_cast<size_t>(c)]) +
                      " into weight " +
                      std::to_string(-weights[static_cast<size_t>(c)]));
    Matrix j2 = jmat * jmat;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        Scalar want = (r == c)
                          ? (weights[static_cast<size_t>(r)] % 2 == 0 ? f->one() : -f->one())
                          : f->zero();
        require(j2.at(r, c) == want, Errc::InvalidArgument,
                "jmat^2 must act by (-1)^w on the weight-w component");
      }
    for (auto w : distinct_weights())
      if (w > 0)
        require(weight_indices(w).size() == weight_indices(-w).size(),
                Errc::InvalidArgument, "weight multiplicities must pair across signs");
  }

  std::vector<int64_t> distinct_weights() const {
    std::vector<int64_t> out;
    for (auto w : weights)
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> weight_indices(int64_t w) const {
    std::vector<int> out;
    for (int i = 0; i < dim; ++i)
      if (weights[static_cast<size_t>(i)] == w) out.push_back(i);
    return out;
  }

  // H(t) = diag(t^w); t must be nonzero.
  Matrix ht_matrix(const Scalar& t) const {
    require(!t.is_zero(), Errc::DivisionByZero, "torus parameter must be nonzero");
    Matrix m(f, dim, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = t.pow(weights[static_cast<size_t>(i)]);
    return m;
  }

  // Component of u supported on the weight-w coordinates (full-length vector).
  Vec weight_component(const Vec& u, int64_t w) const {
    require(static_cast<int>(u.size()) == dim, Errc::DimensionMismatch,
            "vector length does not match module dimension");
    Vec out(u.size(), f->zero());
    for (int i = 0; i < dim; ++i)
      if (weights[static_cast<size_t>(i)] == w) out[static_cast<size_t>(i)] = u[static_cast<size_t>(i)];
    return out;
  }

  // Coordinate subspace of a single weight.
  Subspace weight_subspace(int64_t w) const {
    std::vector<Vec> rows;
    for (int i : weight_indices(w)) {
      Vec e(static_cast<size_t>(dim), f->zero());
      e[static_cast<size_t>(i)] = f->one();
      rows.push_back(std::move(e));
    }
    return Subspace::span_rows(f, dim, rows);
  }
};

// Direct sum of W_i^{count} over the multiplicity map (ascending weight),
// then W_0^{m0}, then W_0'^{m0prime}.  Basis per W_i copy: (x^i, y^i) with
// weights (-i, +i) and J-block [[0, (-1)^i], [1, 0]].
inline NTModule nt_module_from_blocks(const FieldPtr& f,
                                      const std::map<int64_t, int>& multiplicities,
                                      int m0, int m0prime) {
  for (const auto& [w, count] : multiplicities) {
    require(w > 0, Errc::NonpositiveWeight,
            "block weights must be positive; weight 0 goes through m0/m0prime");
    require(count >= 0, Errc::InvalidArgument, "block count must be nonnegative");
  }
  require(m0 >= 0 && m0prime >= 0, Errc::InvalidArgument, "counts must be nonnegative");
  int dim = m0 + m0prime;
  for (const auto& [w, count] : multiplicities) dim += 2 * count;
  require(dim > 0, Errc::EmptyInput, "module must have positive dimension");

  NTModule mod;
  mod.f = f;
  mod.dim = dim;
  mod.jmat = Matrix(f, dim, dim);
  int at = 0;
  for (const auto& [w, count] : multiplicities) {
    Scalar sign = (w % 2 == 0) ? f->one() : -f->one();
    for (int c = 0; c < count; ++c) {
      mod.weights.push_back(-w);  // x^i line
      mod.weights.push_back(w);   // y^i line
      mod.jmat.at(at, at + 1) = sign;
      mod.jmat.at(at + 1, at) = f->one();
      at += 2;
    }
  }
  for (int c = 0; c < m0; ++c) {
    mod.weights.push_back(0);
    mod.jmat.at(at, at) = f->one();
    ++at;
  }
  for (int c = 0; c < m0prime; ++c) {
    mod.weights.push_back(0);
    mod.jmat.at(at, at) = -f->one();
    ++at;
  }
  mod.validate();
  return mod;
}

// N(T) over a finite field as a matrix group with its module action:
// group generators H(c) = diag(c, c^{-1}) and J = [[0,-1],[1,0]], images
// diag(c^w) and jmat.  Enumerating the induced pairs doubles as an oracle
// that the weights and jmat assemble to an actual representation.
inline Representation nt_representation(const NTModule& mod,
                                        int64_t element_cap = MatrixGroup::kDefaultCap) {
  const FieldPtr& f = mod.f;
  require(f->is_finite(), Errc::CharacteristicZero,
          "N(T) enumeration needs a finite field");
  Scalar c = f->element_at(f->multiplicative_generator());
  Matrix hc(f, 2, 2);
  hc.at(0, 0) = c;
  hc.at(1, 1) = c.inverse();
  Matrix j = Matrix(f, 2, 2);
  j.at(0, 1) = -f->one();
  j.at(1, 0) = f->one();
  MatrixGroup nt(f, 2, {hc, j}, element_cap);
  return Representation(nt, mod.dim, {mod.ht_matrix(c), mod.jmat});
}

}  // namespace goodrep
