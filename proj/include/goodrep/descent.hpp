#pragma once

// Galois descent for upper-triangular representations: twisting by the
// automorphisms, the block representation Phi on V^{(+)d}, the Vandermonde
// matrix A with sigma(A) = A J_sigma, the descended Psi = A[N] Phi A[N]^{-1}
// with entries in the base field, the L-tuple subspace lattice, the closed-
// image equations, and the Frobenius reduction for the inseparable case.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goodrep/constructions.hpp"
#include "goodrep/error.hpp"
#include "goodrep/galois.hpp"
#include "goodrep/group.hpp"
#include "goodrep/matrix.hpp"
#include "goodrep/rep.hpp"
#include "goodrep/rng.hpp"
#include "goodrep/subspace.hpp"

namespace goodrep {

inline Matrix galois_entrywise(const GaloisExtension& ext, int j, const Matrix& m) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = ext.apply(j, m.at(r, c));
  return out;
}

// 0-based column permutation of sigma_s acting on the automorphism list:
// perm[c] = index of sigma_s . sigma_{c+1}, so that column c of A J_sigma
// is column perm[c] of A.
inline std::vector<int> galois_perm(const GaloisExtension& ext, int s) {
  std::vector<int> perm(static_cast<size_t>(ext.degree()));
  for (int c = 1; c <= ext.degree(); ++c)
    perm[static_cast<size_t>(c - 1)] = ext.compose(s, c) - 1;
  return perm;
}

inline Matrix galois_perm_matrix(const GaloisExtension& ext, int s) {
  return perm_matrix(ext.top(), galois_perm(ext, s));
}

// The twist ^{sigma_j} rho: same group and generators, images carried
// through sigma_j entrywise, so evaluation reads sigma_j(rho(g)).  The
// generator set is checked to be Galois-stable (entrywise sigma_j^{-1} of
// each generator stays in the group) whenever the group is enumerable;
// stability is what makes the twisted assignment a representation of the
// same subgroup rather than of a conjugate one.
inline Representation twist(const GaloisExtension& ext, int j, const Representation& rep) {
  require(same_field(rep.field(), ext.top()), Errc::MixedContext,
          "representation must live over the extension top field");
  require(j >= 1 && j <= ext.degree(), Errc::IndexOutOfRange,
          "automorphism index out of range");
  int jinv = ext.inverse_of(j);
  try {
    for (const auto& g : rep.group().generators())
      require(rep.group().contains(galois_entrywise(ext, jinv, g)),
              Errc::TwistedGeneratorNotInGroup,
              "generator set is not Galois-stable");
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;  // infinite group: skip the check
  }
  std::vector<Matrix> images;
  images.reserve(rep.images().size());
  for (const auto& m : rep.images()) images.push_back(galois_entrywise(ext, j, m));
  Representation::Evaluator eval = nullptr;
  if (rep.has_evaluator()) {
    eval = [ext, j, rep](const Matrix& g) {
      return galois_entrywise(ext, j, rep.image_of(g));
    };
  }
  return Representation(rep.group(), rep.dim(), std::move(images), std::move(eval));
}

struct DescentInput {
  GaloisExtension ext;
  Representation rep;  // n-dimensional with upper-triangular invertible images
  int n = 0;

  DescentInput(GaloisExtension e, Representation r, int size)
      : ext(std::move(e)), rep(std::move(r)), n(size) {
    require(rep.dim() == n, Errc::DimensionMismatch,
            "representation dimension must equal the block size n");
    require(same_field(rep.field(), ext.top()), Errc::MixedContext,
            "representation must live over the extension top field");
    for (const auto& m : rep.images())
      for (int r = 1; r < n; ++r)
        for (int c = 0; c < r; ++c)
          require(m.at(r, c).is_zero(), Errc::InvalidArgument,
                  "generator images must be upper triangular");
  }

  int module_dim() const { return n * (n + 1) / 2; }  // N
};

// Phi: block diagonal on V^{(+)d}, block j the left multiplication action of
// the sigma_j-twisted representation on upper-triangular matrices.
inline Representation build_phi(const DescentInput& in) {
  const FieldPtr& f = in.ext.top();
  int d = in.ext.degree(), n = in.n, N = in.module_dim();
  std::vector<Representation> twists;
  twists.reserve(static_cast<size_t>(d));
  for (int j = 1; j <= d; ++j) twists.push_back(twist(in.ext, j, in.rep));

  size_t ngens = in.rep.images().size();
  std::vector<Matrix> images;
  images.reserve(ngens);
  for (size_t gi = 0; gi < ngens; ++gi) {
    Matrix blk(f, d * N, d * N);
    for (int j = 0; j < d; ++j) {
      Matrix piece = left_mult_upper(f, n, twists[static_cast<size_t>(j)].images()[gi]);
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) blk.at(j * N + r, j * N + c) = piece.at(r, c);
    }
    images.push_back(std::move(blk));
  }
  Representation::Evaluator eval = nullptr;
  if (in.rep.has_evaluator()) {
    GaloisExtension ext = in.ext;
    Representation rep = in.rep;
    eval = [ext, rep, f, d, n, N](const Matrix& g) {
      Matrix blk(f, d * N, d * N);
      Matrix rg = rep.image_of(g);
      for (int j = 0; j < d; ++j) {
        Matrix piece = left_mult_upper(f, n, galois_entrywise(ext, j + 1, rg));
        for (int r = 0; r < N; ++r)
          for (int c = 0; c < N; ++c) blk.at(j * N + r, j * N + c) = piece.at(r, c);
      }
      return blk;
    };
  }
  return Representation(in.rep.group(), d * N, std::move(images), std::move(eval));
}

// A_ij = sigma_j(alpha^i) for i, j in 1..d; nonsingular with
// sigma(A) = A J_sigma for every automorphism.
inline Matrix vandermonde(const GaloisExtension& ext) {
  const FieldPtr& f = ext.top();
  int d = ext.degree();
  Matrix a(f, d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) a.at(i - 1, j - 1) = ext.apply(j, ext.alpha().pow(i));
  require(!a.det().is_zero(), Errc::SingularA,
          "Vandermonde matrix is singular: conjugates of alpha collide");
  for (int s = 1; s <= d; ++s)
    require(galois_entrywise(ext, s, a) == a * galois_perm_matrix(ext, s),
            Errc::SingularA, "Galois covariance sigma(A) = A J_sigma failed");
  return a;
}

struct TupleReport {
  std::vector<int> tuple;  // (j_1, ..., j_d), 1-based diagonal slots
  bool phi_invariant = false;
  bool psi_invariant = false;
  bool transported_psi_invariant = false;
};

struct DescentResult {
  Representation phi;
  Representation psi;
  Matrix a;                       // d x d Vandermonde
  Scalar det_a;
  std::vector<bool> rationality;  // per psi generator image: entries in base
  std::vector<TupleReport> subspace_report;
};

// L_{(j_1,...,j_d)} = L_{j_1} (+) ... (+) L_{j_d} inside V^{(+)d}.
inline Subspace l_tuple_subspace(const FieldPtr& f, int n, const std::vector<int>& tuple) {
  int d = static_cast<int>(tuple.size());
  int N = n * (n + 1) / 2;
  std::vector<Vec> rows;
  for (int b = 0; b < d; ++b) {
    Subspace lj = upper_diag_zero_subspace(f, n, tuple[static_cast<size_t>(b)] - 1);
    for (int i = 0; i < lj.dim(); ++i) {
      Vec row(static_cast<size_t>(d * N), f->zero());
      Vec inner = lj.basis_row(i);
      for (int k = 0; k < N; ++k) row[static_cast<size_t>(b * N + k)] = inner[static_cast<size_t>(k)];
      rows.push_back(std::move(row));
    }
  }
  return Subspace::span_rows(f, d * N, rows);
}

// All tuples (j_1,...,j_d) over {1..n} in lexicographic order.
inline std::vector<std::vector<int>> all_l_tuples(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(d), 1);
  for (;;) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n) cur[static_cast<size_t>(i--)] = 1;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

// Assembles Phi, A, Psi = A[N] Phi A[N]^{-1}; reports pointwise rationality
// of the generator images and the three invariance statuses of every
// L-tuple.  Statuses are recorded, never assumed.
inline DescentResult build_psi(const DescentInput& in) {
  const FieldPtr& f = in.ext.top();
  int d = in.ext.degree(), n = in.n, N = in.module_dim();
  Representation phi = build_phi(in);
  Matrix a = vandermonde(in.ext);
  Matrix big = a.blowup(N);
  Matrix big_inv = big.inverse();

  std::vector<Matrix> psi_images;
  psi_images.reserve(phi.images().size());
  for (const auto& m : phi.images()) psi_images.push_back(big * m * big_inv);
  Representation::Evaluator eval = nullptr;
  if (phi.has_evaluator()) {
    Representation phicopy = phi;
    eval = [phicopy, big, big_inv](const Matrix& g) {
      return big * phicopy.image_of(g) * big_inv;
    };
  }
  Representation psi(in.rep.group(), d * N, std::move(psi_images), std::move(eval));

  std::vector<bool> rationality;
  for (const auto& m : psi.images()) {
    bool rational = true;
    for (int r = 0; r < m.rows() && rational; ++r)
      for (int c = 0; c < m.cols() && rational; ++c)
        rational = m.at(r, c).in_base_subfield();
    rationality.push_back(rational);
  }

  std::vector<TupleReport> report;
  for (const auto& tuple : all_l_tuples(n, d)) {
    TupleReport tr;
    tr.tuple = tuple;
    Subspace l = l_tuple_subspace(f, n, tuple);
    tr.phi_invariant = phi.is_invariant(l);
    tr.psi_invariant = psi.is_invariant(l);
    tr.transported_psi_invariant = psi.is_invariant(l.transform(big));
    report.push_back(std::move(tr));
  }

  Scalar det_a = a.det();
  return DescentResult{std::move(phi), std::move(psi), std::move(a), std::move(det_a),
                       std::move(rationality), std::move(report)};
}

// One sample for the closed-image equations: a group element and a d-tuple
// of upper-triangular matrices with some invertible component.
struct ClosedImageSample {
  Matrix g;
  std::vector<Matrix> tuple;
};

struct EquationReport {
  int64_t samples = 0;
  int64_t failures = 0;
  bool all_hold = true;
  std::optional<std::string> first_failure;
  uint64_t seed = 0;
};

// C_l = sigma_l(g) A_l, the l-th component of the twisted action of g.
inline Matrix closed_image_c(const GaloisExtension& ext, const Matrix& g,
                             const std::vector<Matrix>& tuple, int l) {
  return galois_entrywise(ext, l, g) * tuple[static_cast<size_t>(l - 1)];
}

// Checks the d^2 equations on a C-tuple against an A-tuple,
//   sigma_j sigma_i^{-1}(det A_i) C_j = sigma_j sigma_i^{-1}(C_i Adj A_i) A_j,
// then reconstructs g = sigma_i^{-1}(C_i A_i^{-1}) from every invertible
// component and checks the reconstructions agree.  The equations
// characterize membership of the C-tuple in the closure of the image, so
// exactness matters.  Returns the reconstructed g, or nullopt with a reason
// in *why.
inline std::optional<Matrix> closed_image_solve(const GaloisExtension& ext,
                                                const std::vector<Matrix>& c,
                                                const std::vector<Matrix>& a,
                                                std::string* why = nullptr) {
  int d = ext.degree();
  require(static_cast<int>(a.size()) == d && c.size() == a.size(), Errc::DimensionMismatch,
          "C and A tuples must both have length equal to the extension degree");
  bool some_invertible = false;
  for (const auto& m : a) some_invertible = some_invertible || m.is_invertible();
  require(some_invertible, Errc::NoInvertibleComponent,
          "sample tuple needs an invertible component");

  std::optional<Matrix> g;
  for (int i = 1; i <= d; ++i) {
    auto da = a[static_cast<size_t>(i - 1)].det_adj();
    int tau_base = ext.inverse_of(i);
    for (int j = 1; j <= d; ++j) {
      int tau = ext.compose(j, tau_base);  // sigma_j sigma_i^{-1}
      Matrix lhs = c[static_cast<size_t>(j - 1)].scaled(ext.apply(tau, da.first));
      Matrix rhs = galois_entrywise(ext, tau, c[static_cast<size_t>(i - 1)] * da.second) *
                   a[static_cast<size_t>(j - 1)];
      if (lhs != rhs) {
        if (why) *why = "equation (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ") failed";
        return std::nullopt;
      }
    }
    if (a[static_cast<size_t>(i - 1)].is_invertible()) {
      Matrix rec = galois_entrywise(
          ext, tau_base, c[static_cast<size_t>(i - 1)] * a[static_cast<size_t>(i - 1)].inverse());
      if (g && rec != *g) {
        if (why) *why = "reconstructions from components disagree at " + std::to_string(i);
        return std::nullopt;
      }
      g = std::move(rec);
    }
  }
  return g;
}

inline bool closed_image_equations_hold(const GaloisExtension& ext, const Matrix& g,
                                        const std::vector<Matrix>& tuple,
                                        std::string* why = nullptr) {
  std::vector<Matrix> c;
  c.reserve(tuple.size());
  for (int l = 1; l <= ext.degree(); ++l) c.push_back(closed_image_c(ext, g, tuple, l));
  auto rec = closed_image_solve(ext, c, tuple, why);
  if (!rec) return false;
  if (*rec != g) {
    if (why) *why = "reconstruction did not recover the sampled element";
    return false;
  }
  return true;
}

// Seeded sample set: group elements by enumeration index, tuples by random
// upper-triangular entries redrawn until some component is invertible.
inline std::vector<ClosedImageSample> make_closed_image_samples(const DescentInput& in,
                                                                int64_t count,
                                                                uint64_t seed) {
  const FieldPtr& f = in.ext.top();
  require(f->is_finite(), Errc::CharacteristicZero,
          "seeded sampling draws from a finite field");
  int d = in.ext.degree(), n = in.n;
  const auto& elems = in.rep.group().enumerate();
  Rng rng(seed);
  std::vector<ClosedImageSample> out;
  auto slots = upper_triangle_slots(n);
  while (static_cast<int64_t>(out.size()) < count) {
    ClosedImageSample s;
    s.g = in.rep.image_of(elems[rng.below(elems.size())]);
    bool some_invertible = false;
    for (int l = 0; l < d; ++l) {
      Matrix m(f, n, n);
      for (auto [r, c] : slots)
        m.at(r, c) = f->element_at(static_cast<int64_t>(rng.below(static_cast<uint64_t>(f->order()))));
      some_invertible = some_invertible || m.is_invertible();
      s.tuple.push_back(std::move(m));
    }
    if (!some_invertible) continue;  // redraw; keeps determinism given seed
    out.push_back(std::move(s));
  }
  return out;
}

inline EquationReport check_closed_image_equations(const DescentInput& in,
                                                   const std::vector<ClosedImageSample>& samples,
                                                   uint64_t seed = 0) {
  EquationReport rpt;
  rpt.seed = seed;
  for (const auto& s : samples) {
    ++rpt.samples;
    std::string why;
    if (!closed_image_equations_hold(in.ext, s.g, s.tuple, &why)) {
      ++rpt.failures;
      rpt.all_hold = false;
      if (!rpt.first_failure) rpt.first_failure = why;
    }
  }
  return rpt;
}

struct FrobeniusReduction {
  Representation rep;
  std::vector<std::pair<int, int>> coincident_generator_images;
  int64_t group_order = 0;      // 0 when not enumerable
  int64_t distinct_images = 0;  // of the reduced representation
};

inline Matrix frobenius_entrywise(const Matrix& m, int power) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).frobenius(power);
  return out;
}

// Case II: compose with the m-th Frobenius power entrywise.  Stays a
// homomorphism; faithfulness can drop, which the counts report.
inline FrobeniusReduction frobenius_reduce(const Representation& rep, int m) {
  require(rep.field()->is_finite(), Errc::CharacteristicZero,
          "Frobenius reduction needs positive characteristic");
  require(m >= 0, Errc::InvalidArgument, "Frobenius power must be nonnegative");
  std::vector<Matrix> images;
  images.reserve(rep.images().size());
  for (const auto& im : rep.images()) images.push_back(frobenius_entrywise(im, m));
  Representation::Evaluator eval = nullptr;
  if (rep.has_evaluator()) {
    Representation base = rep;
    eval = [base, m](const Matrix& g) { return frobenius_entrywise(base.image_of(g), m); };
  }
  FrobeniusReduction out{Representation(rep.group(), rep.dim(), images, std::move(eval)), {}, 0, 0};
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i] == images[j])
        out.coincident_generator_images.emplace_back(static_cast<int>(i), static_cast<int>(j));
  try {
    const auto& pairs = out.rep.enumerate_pairs();
    out.group_order = static_cast<int64_t>(pairs.size());
    std::vector<std::string> keys;
    keys.reserve(pairs.size());
    for (const auto& pr : pairs) keys.push_back(pr.image.key());
    std::sort(keys.begin(), keys.end());
    out.distinct_images =
        static_cast<int64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
  }
  return out;
}

}  // namespace goodrep
