#pragma once

// Non-properness certificates for N(T)-modules: find a point outside a
// family of invariant subspaces, symmetrize it against J, build the Laurent
// curve lambda -> (v_lambda, v'_lambda) whose limit leaves the image of the
// action map, and verify every step as an exact symbolic identity.  Also the
// exact N(T) transporter (torus and J cosets) and the rescaling-closure
// argument on which the membership checks lean.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/field.hpp"
#include "goodrep/laurent.hpp"
#include "goodrep/matrix.hpp"
#include "goodrep/ntmodule.hpp"
#include "goodrep/rng.hpp"
#include "goodrep/subspace.hpp"

namespace goodrep {

using LaurentVec = std::vector<LaurentPoly>;

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// Invariance under N(T) as an algebraic group: stable under H(t) for every t
// of the closure, which for a subspace means being spanned by its own weight
// components, plus stability under J.
inline bool nt_invariant(const NTModule& mod, const Subspace& s) {
  require(s.ambient() == mod.dim, Errc::DimensionMismatch, "subspace ambient != module dim");
  for (int i = 0; i < s.dim(); ++i) {
    Vec b = s.basis_row(i);
    for (int64_t w : mod.distinct_weights())
      if (!s.contains(mod.weight_component(b, w))) return false;
    if (!s.contains(mod.jmat.apply(b))) return false;
  }
  return true;
}

inline void require_nt_invariant(const NTModule& mod, const std::vector<Subspace>& family) {
  for (const auto& s : family)
    require(nt_invariant(mod, s), Errc::NotInvariant,
            "family member is not an invariant subspace");
}

// The N(T)-submodule generated by v over the closure: span of the weight
// components, saturated under J.
inline Subspace nt_generated_submodule(const NTModule& mod, const Vec& v) {
  std::vector<Vec> rows;
  for (int64_t w : mod.distinct_weights()) {
    Vec c = mod.weight_component(v, w);
    if (!vec_is_zero(c)) rows.push_back(std::move(c));
  }
  Subspace k = Subspace::span_rows(mod.f, mod.dim, rows);
  for (;;) {
    Subspace next = k.sum(k.transform(mod.jmat));
    if (next == k) return k;
    k = std::move(next);
  }
}

// --- findU: a point outside every member of the family ---

struct FindUReport {
  Vec u;
  uint64_t seed = 0;
  int64_t sampled = 0;  // sampling-phase attempts consumed
  int64_t swept = 0;    // sweep candidates examined
  std::string path;     // which phase produced u, with its index
};

namespace detail {

// Coordinate-0-fastest odometer over a fixed value list per coordinate;
// calls visit on every tuple, stopping early when it returns true.
template <typename Visit>
bool odometer(size_t len, size_t radix, Visit visit) {
  std::vector<size_t> digits(len, 0);
  for (;;) {
    if (visit(digits)) return true;
    size_t i = 0;
    while (i < len && digits[i] == radix - 1) digits[i++] = 0;
    if (i == len) return false;
    ++digits[i];
  }
}

inline std::vector<Scalar> char_zero_box(const FieldPtr& f) {
  return {f->zero(), f->one(), -f->one(), f->from_int(2), f->from_int(-2)};
}

}  // namespace detail

inline FindUReport find_u(const NTModule& mod, const std::vector<Subspace>& family,
                          uint64_t seed, int64_t sample_budget = 0) {
  const FieldPtr& f = mod.f;
  int n = mod.dim;
  for (const auto& s : family)
    require(s.ambient() == n, Errc::DimensionMismatch, "family ambient != module dim");
  FindUReport rep;
  rep.seed = seed;

  Rng rng(seed);
  for (int64_t b = 0; b < sample_budget; ++b) {
    Vec u;
    u.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      u.push_back(f->is_finite()
                      ? f->element_at(static_cast<int64_t>(rng.below(static_cast<uint64_t>(f->order()))))
                      : f->from_int(rng.small_int(4)));
    ++rep.sampled;
    if (!in_union(family, u)) {
      rep.u = std::move(u);
      rep.path = "sample:" + std::to_string(b);
      return rep;
    }
  }

  auto try_vec = [&](Vec u, const std::string& where) -> bool {
    ++rep.swept;
    if (in_union(family, u)) return false;
    rep.u = std::move(u);
    rep.path = where;
    return true;
  };

  if (f->is_finite()) {
    bool found = detail::odometer(
        static_cast<size_t>(n), static_cast<size_t>(f->order()),
        [&](const std::vector<size_t>& d) {
          Vec u;
          u.reserve(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i) u.push_back(f->element_at(static_cast<int64_t>(d[static_cast<size_t>(i)])));
          return try_vec(std::move(u), "sweep:" + std::to_string(rep.swept));
        });
    if (found) return rep;
    fail(Errc::FieldTooSmall, "family union covers every rational point of the module");
  }

  // Characteristic zero: small box first, then the moment curve, on which
  // each proper subspace can only meet finitely many points.
  auto box = detail::char_zero_box(f);
  bool found = detail::odometer(static_cast<size_t>(n), box.size(), [&](const std::vector<size_t>& d) {
    Vec u;
    u.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) u.push_back(box[d[static_cast<size_t>(i)]]);
    return try_vec(std::move(u), "sweep:" + std::to_string(rep.swept));
  });
  if (found) return rep;
  int64_t tries = static_cast<int64_t>(family.size()) * (n > 0 ? n : 1) + 2;
  for (int64_t t = 2; t < 2 + tries; ++t) {
    Vec u;
    u.reserve(static_cast<size_t>(n));
    Scalar tv = f->from_int(t), acc = f->one();
    for (int i = 0; i < n; ++i) {
      u.push_back(acc);
      acc = acc * tv;
    }
    if (try_vec(std::move(u), "moment:t=" + std::to_string(t))) return rep;
  }
  fail(Errc::FieldTooSmall, "sweep and moment curve exhausted without leaving the family");
}

// --- rescaleClosure: span{H(t_q) u} = span of the weight components ---

struct SpanReport {
  std::vector<Scalar> ts;
  std::vector<int64_t> weights;  // distinct weights in supp(u), ascending
  Scalar det;
  bool span_equal = false;
};

inline SpanReport rescale_closure(const NTModule& mod, const Vec& u,
                                  const std::vector<Scalar>& ts) {
  const FieldPtr& f = mod.f;
  require(static_cast<int>(u.size()) == mod.dim, Errc::DimensionMismatch, "vector dim mismatch");
  for (const auto& t : ts)
    require(!t.is_zero(), Errc::InvalidArgument, "rescaling scalars must be nonzero");

  std::vector<int64_t> supp;
  std::vector<Vec> comps;
  for (int64_t w : mod.distinct_weights()) {
    Vec c = mod.weight_component(u, w);
    if (!vec_is_zero(c)) {
      supp.push_back(w);
      comps.push_back(std::move(c));
    }
  }
  int k = static_cast<int>(supp.size());
  require(static_cast<int>(ts.size()) >= k, Errc::InvalidArgument,
          "need at least one scalar per weight in the support");

  Matrix a(f, k, k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      a.at(p, q) = ts[static_cast<size_t>(q)].pow(supp[static_cast<size_t>(p)]);
  Scalar det = k > 0 ? a.det() : f->one();
  require(!det.is_zero(), Errc::SingularChoice,
          "degenerate rescaling scalars: generalized Vandermonde is singular");

  std::vector<Vec> orbit;
  for (const auto& t : ts) orbit.push_back(mod.ht_matrix(t).apply(u));
  SpanReport rep;
  rep.ts = ts;
  rep.weights = std::move(supp);
  rep.det = std::move(det);
  rep.span_equal = Subspace::span_rows(f, mod.dim, orbit) == Subspace::span_rows(f, mod.dim, comps);
  return rep;
}

// --- adjustJSymmetric: repair Ju_j = u_{-j} weight by weight ---

struct AdjustReport {
  Vec u;
  std::vector<int64_t> fixed_weights;  // positive weights whose components were replaced
  std::string path;                    // sweep indices per fixed weight
};

inline AdjustReport adjust_j_symmetric(const NTModule& mod, const std::vector<Subspace>& family,
                                       const Vec& u0) {
  const FieldPtr& f = mod.f;
  require(static_cast<int>(u0.size()) == mod.dim, Errc::DimensionMismatch, "vector dim mismatch");
  require_nt_invariant(mod, family);
  require(!in_union(family, u0), Errc::InvalidArgument, "candidate must avoid the family union");

  AdjustReport rep;
  rep.u = u0;
  std::vector<int64_t> positives;
  for (int64_t w : mod.distinct_weights())
    if (w > 0) positives.push_back(w);
  std::sort(positives.begin(), positives.end());

  for (int64_t j : positives) {
    Vec uj = mod.weight_component(rep.u, j);
    Vec umj = mod.weight_component(rep.u, -j);
    if (mod.jmat.apply(uj) == umj) continue;  // already symmetric at j

    Vec base = vec_sub(vec_sub(rep.u, uj), umj);
    auto basis_idx = mod.weight_indices(j);
    size_t m = basis_idx.size();

    // candidate = base + v + Jv for v in the weight-j subspace; points with
    // v != 0 first, v = 0 (dropping the weight entirely) as a last resort
    auto candidate_from = [&](const Vec& coeffs_v) {
      Vec v(static_cast<size_t>(mod.dim), f->zero());
      for (size_t i = 0; i < m; ++i) v[static_cast<size_t>(basis_idx[i])] = coeffs_v[i];
      return vec_add(base, vec_add(v, mod.jmat.apply(v)));
    };

    bool fixed = false;
    int64_t index = 0;
    std::string where;
    auto try_coeffs = [&](const std::vector<Scalar>& cs, const std::string& tag) {
      Vec cand = candidate_from(cs);
      ++index;
      if (in_union(family, cand)) return false;
      rep.u = std::move(cand);
      where = tag;
      return true;
    };

    if (f->is_finite()) {
      fixed = detail::odometer(m, static_cast<size_t>(f->order()), [&](const std::vector<size_t>& d) {
        bool all_zero = true;
        for (size_t x : d) all_zero = all_zero && x == 0;
        if (all_zero) return false;  // deferred to the end
        std::vector<Scalar> cs;
        cs.reserve(m);
        for (size_t i = 0; i < m; ++i) cs.push_back(f->element_at(static_cast<int64_t>(d[i])));
        return try_coeffs(cs, "w" + std::to_string(j) + ":sweep:" + std::to_string(index));
      });
    } else {
      auto box = detail::char_zero_box(f);
      fixed = detail::odometer(m, box.size(), [&](const std::vector<size_t>& d) {
        bool all_zero = true;
        for (size_t x : d) all_zero = all_zero && x == 0;
        if (all_zero) return false;
        std::vector<Scalar> cs;
        cs.reserve(m);
        for (size_t i = 0; i < m; ++i) cs.push_back(box[d[i]]);
        return try_coeffs(cs, "w" + std::to_string(j) + ":sweep:" + std::to_string(index));
      });
      if (!fixed) {
        // moment fallback: v(t) spans the affine set as t varies, so each
        // family member excludes only boundedly many t
        int64_t tries = static_cast<int64_t>(family.size()) * static_cast<int64_t>(m + 1) + 2;
        for (int64_t t = 3; !fixed && t < 3 + tries; ++t) {
          std::vector<Scalar> cs;
          cs.reserve(m);
          Scalar tv = f->from_int(t), acc = tv;
          for (size_t i = 0; i < m; ++i) {
            cs.push_back(acc);
            acc = acc * tv;
          }
          fixed = try_coeffs(cs, "w" + std::to_string(j) + ":moment:t=" + std::to_string(t));
        }
      }
    }
    if (!fixed) {
      std::vector<Scalar> zeros(m, f->zero());
      fixed = try_coeffs(zeros, "w" + std::to_string(j) + ":drop");
    }
    require(fixed, Errc::FieldTooSmall,
            "symmetrizing sweep at weight " + std::to_string(j) + " exhausted the rational points");
    rep.fixed_weights.push_back(j);
    if (!rep.path.empty()) rep.path += ";";
    rep.path += where;
  }
  return rep;
}

// --- buildFamily: the Laurent curve and its limit ---

struct WitnessFamily {
  LaurentVec v_lambda, vprime_lambda;
  Vec limit_v, limit_vprime;
};

inline void require_j_symmetric(const NTModule& mod, const Vec& u) {
  for (int64_t w : mod.distinct_weights())
    if (w > 0)
      require(mod.jmat.apply(mod.weight_component(u, w)) == mod.weight_component(u, -w),
              Errc::AsymmetricInput, "J u_i = u_{-i} fails at weight " + std::to_string(w));
}

inline WitnessFamily build_family(const NTModule& mod, const Vec& u) {
  const FieldPtr& f = mod.f;
  require(static_cast<int>(u.size()) == mod.dim, Errc::DimensionMismatch, "vector dim mismatch");
  require_j_symmetric(mod, u);
  Vec ju0 = mod.jmat.apply(mod.weight_component(u, 0));

  WitnessFamily fam;
  fam.v_lambda.reserve(u.size());
  fam.vprime_lambda.reserve(u.size());
  fam.limit_v.reserve(u.size());
  fam.limit_vprime.reserve(u.size());
  for (int r = 0; r < mod.dim; ++r) {
    int64_t w = mod.weights[static_cast<size_t>(r)];
    const Scalar& ur = u[static_cast<size_t>(r)];
    if (w > 0) {
      // u_i enters with lambda^{-i}; sign (-1)^i on the primed curve
      fam.v_lambda.push_back(LaurentPoly::monomial(ur, -w));
      Scalar sgn = (w % 2 == 0) ? f->one() : -f->one();
      fam.vprime_lambda.push_back(LaurentPoly::monomial(ur * sgn, -w));
      fam.limit_v.push_back(f->zero());
      fam.limit_vprime.push_back(f->zero());
    } else if (w < 0) {
      fam.v_lambda.push_back(LaurentPoly::constant(ur));
      fam.vprime_lambda.push_back(LaurentPoly::constant(ur));
      fam.limit_v.push_back(ur);
      fam.limit_vprime.push_back(ur);
    } else {
      fam.v_lambda.push_back(LaurentPoly::constant(ur));
      fam.vprime_lambda.push_back(LaurentPoly::constant(ju0[static_cast<size_t>(r)]));
      fam.limit_v.push_back(ur);
      fam.limit_vprime.push_back(ju0[static_cast<size_t>(r)]);
    }
  }
  return fam;
}

// g_lambda = J H(lambda) acting on a Laurent vector: coordinate c of weight w
// contributes jmat(r,c) lambda^w x_c to coordinate r.
inline LaurentVec apply_g_lambda(const NTModule& mod, const LaurentVec& x) {
  require(static_cast<int>(x.size()) == mod.dim, Errc::DimensionMismatch, "vector dim mismatch");
  LaurentVec out(static_cast<size_t>(mod.dim), LaurentPoly::zero(mod.f));
  for (int c = 0; c < mod.dim; ++c) {
    LaurentPoly shifted = x[static_cast<size_t>(c)].shifted(mod.weights[static_cast<size_t>(c)]);
    for (int r = 0; r < mod.dim; ++r) {
      const Scalar& j = mod.jmat.at(r, c);
      if (!j.is_zero()) out[static_cast<size_t>(r)] = out[static_cast<size_t>(r)] + shifted.scaled(j);
    }
  }
  return out;
}

inline Vec specialize(const LaurentVec& x, const Scalar& t) {
  Vec out;
  out.reserve(x.size());
  for (const auto& p : x) out.push_back(p.eval(t));
  return out;
}

// 2x2 antidiagonal element of N(T) with parameter lambda.
inline Matrix g_lambda_matrix(const FieldPtr& f, const Scalar& lam) {
  Matrix g(f, 2, 2);
  g.at(0, 1) = -lam.inverse();
  g.at(1, 0) = lam;
  return g;
}

// --- verifyWitness ---

struct WitnessCheck {
  std::string name;
  bool passed = false;
  std::string evidence;
};

struct WitnessCertificate {
  NTModule module;
  std::vector<Subspace> family;
  Vec u;
  LaurentVec v_lambda, vprime_lambda;
  Vec limit_v, limit_vprime;
  std::string status;  // "curve" or "infinite-stabilizer"
  std::vector<WitnessCheck> checks;
  uint64_t seed = 0;
  std::string search_path;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline std::string gcd_str(const RootReport& r) {
  if (r.identically_satisfied) return "identically satisfied";
  std::string s = "gcd degree " + std::to_string(r.gcd.empty() ? 0 : r.gcd.size() - 1) + " [";
  for (size_t i = 0; i < r.gcd.size(); ++i) {
    if (i) s += ",";
    s += r.gcd[i].str();
  }
  return s + "]";
}

// Laurent coordinates of the constraint rows of s applied to x.
inline std::vector<LaurentPoly> constraint_polys(const FieldPtr& f, const Subspace& s,
                                                 const LaurentVec& x) {
  std::vector<LaurentPoly> out;
  Matrix e = s.constraints();
  for (int r = 0; r < e.rows(); ++r) {
    LaurentPoly acc = LaurentPoly::zero(f);
    for (int c = 0; c < e.cols(); ++c) {
      const Scalar& coef = e.at(r, c);
      if (!coef.is_zero()) acc = acc + x[static_cast<size_t>(c)].scaled(coef);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace detail

inline WitnessCertificate verify_witness(const NTModule& mod, const std::vector<Subspace>& family,
                                         const Vec& u) {
  const FieldPtr& f = mod.f;
  require_nt_invariant(mod, family);
  require_j_symmetric(mod, u);
  require(!in_union(family, u), Errc::InvalidArgument, "candidate must avoid the family union");

  WitnessCertificate cert;
  cert.module = mod;
  cert.family = family;
  cert.u = u;

  bool positive_support = false;
  for (int64_t w : mod.distinct_weights())
    if (w > 0 && !vec_is_zero(mod.weight_component(u, w))) positive_support = true;

  if (!positive_support) {
    // By symmetry the candidate is pure weight zero: the torus fixes it, its
    // stabilizer is infinite, and properness already fails without a curve.
    cert.status = "infinite-stabilizer";
    WitnessCheck c;
    c.name = "no-positive-weight-support";
    Vec w0 = mod.weight_component(u, 0);
    c.passed = w0 == u;
    c.evidence = "torus acts trivially on the candidate, stabilizer infinite; u = " + vec_str(u);
    cert.checks.push_back(std::move(c));
    WitnessCheck c2;
    c2.name = "candidate-outside-family";
    c2.passed = !in_union(family, u);
    c2.evidence = "membership swept over " + std::to_string(family.size()) + " subspaces";
    cert.checks.push_back(std::move(c2));
    return cert;
  }

  cert.status = "curve";
  WitnessFamily fam = build_family(mod, u);
  cert.v_lambda = fam.v_lambda;
  cert.vprime_lambda = fam.vprime_lambda;
  cert.limit_v = fam.limit_v;
  cert.limit_vprime = fam.limit_vprime;

  {  // C1: g_lambda v_lambda = v'_lambda as an exact Laurent identity
    WitnessCheck c;
    c.name = "action-identity";
    LaurentVec lhs = apply_g_lambda(mod, fam.v_lambda);
    c.passed = lhs == fam.vprime_lambda;
    c.evidence = c.passed ? "g_lambda v_lambda matches v'_lambda coefficientwise"
                          : "coefficient mismatch";
    cert.checks.push_back(std::move(c));
  }

  {  // C2: the whole curve stays outside every family member
    WitnessCheck c;
    c.name = "family-in-U";
    c.passed = true;
    for (size_t si = 0; si < family.size() && c.passed; ++si) {
      for (const LaurentVec* curve : {&fam.v_lambda, &fam.vprime_lambda}) {
        RootReport r = laurent_gcd_roots(f, detail::constraint_polys(f, family[si], *curve));
        if (r.has_common_nonzero_root) {
          c.passed = false;
          c.evidence = "member " + std::to_string(si) + ": " + detail::gcd_str(r);
          break;
        }
      }
    }
    if (c.passed) c.evidence = "no member admits a common nonzero root";
    cert.checks.push_back(std::move(c));
  }

  {  // C3: the limit pair lies outside the family; cross-check via the
     // submodule each limit generates, which must recover u
    WitnessCheck c;
    c.name = "limit-in-U";
    bool direct = !in_union(family, fam.limit_v) && !in_union(family, fam.limit_vprime);
    bool cross = nt_generated_submodule(mod, fam.limit_v).contains(u) &&
                 nt_generated_submodule(mod, fam.limit_vprime).contains(u);
    c.passed = direct && cross;
    c.evidence = std::string("direct membership: ") + (direct ? "outside" : "inside") +
                 "; u in generated submodules: " + (cross ? "yes" : "no");
    cert.checks.push_back(std::move(c));
  }

  {  // C4: no nonzero lambda attains the limit pair
    WitnessCheck c;
    c.name = "limit-not-attained";
    std::vector<LaurentPoly> diffs;
    for (int r = 0; r < mod.dim; ++r) {
      diffs.push_back(fam.v_lambda[static_cast<size_t>(r)] -
                      LaurentPoly::constant(fam.limit_v[static_cast<size_t>(r)]));
      diffs.push_back(fam.vprime_lambda[static_cast<size_t>(r)] -
                      LaurentPoly::constant(fam.limit_vprime[static_cast<size_t>(r)]));
    }
    RootReport r = laurent_gcd_roots(f, diffs);
    c.passed = !r.has_common_nonzero_root;
    c.evidence = detail::gcd_str(r);
    cert.checks.push_back(std::move(c));
  }
  return cert;
}

// find -> symmetrize -> verify, recording seed and search path.
struct WitnessPipelineResult {
  FindUReport found;
  AdjustReport adjusted;
  WitnessCertificate cert;
};

inline WitnessPipelineResult nt_witness_pipeline(const NTModule& mod,
                                                 const std::vector<Subspace>& family,
                                                 uint64_t seed, int64_t sample_budget = 0) {
  require_nt_invariant(mod, family);
  WitnessPipelineResult out;
  out.found = find_u(mod, family, seed, sample_budget);
  out.adjusted = adjust_j_symmetric(mod, family, out.found.u);
  out.cert = verify_witness(mod, family, out.adjusted.u);
  out.cert.seed = seed;
  out.cert.search_path = out.found.path;
  if (!out.adjusted.path.empty()) out.cert.search_path += ";" + out.adjusted.path;
  return out;
}

// --- ntTransporter: exact solutions of H(t) v = w and J H(t) v = w ---

struct CosetReport {
  bool consistent = false;     // solution set nonempty over the closure
  bool any_constraint = false;
  int64_t exponent = 0;        // solutions are exactly { t : t^exponent = value }
  std::optional<Scalar> value;
  std::string detail;
};

namespace detail {

// Extended gcd with g = gcd(a, b) >= 0 and x a + y b = g.
inline std::tuple<int64_t, int64_t, int64_t> ext_gcd(int64_t a, int64_t b) {
  if (b == 0) {
    if (a < 0) return {-a, -1, 0};
    return {a, 1, 0};
  }
  auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

inline CosetReport solve_torus(const NTModule& mod, const Vec& v, const Vec& w) {
  const FieldPtr& f = mod.f;
  CosetReport rep;
  std::vector<std::pair<int64_t, Scalar>> constraints;  // weight -> forced t^weight
  for (int r = 0; r < mod.dim; ++r) {
    const Scalar& vr = v[static_cast<size_t>(r)];
    const Scalar& wr = w[static_cast<size_t>(r)];
    if (vr.is_zero() != wr.is_zero()) {
      rep.detail = "empty: support mismatch at coordinate " + std::to_string(r);
      return rep;
    }
    if (vr.is_zero()) continue;
    int64_t omega = mod.weights[static_cast<size_t>(r)];
    Scalar ratio = wr / vr;
    if (omega == 0) {
      if (!ratio.is_one()) {
        rep.detail = "empty: weight-0 coordinate " + std::to_string(r) + " forces " + ratio.str();
        return rep;
      }
      continue;
    }
    bool merged = false;
    for (auto& [wgt, val] : constraints)
      if (wgt == omega) {
        if (!(val == ratio)) {
          rep.detail = "empty: conflicting ratios at weight " + std::to_string(omega);
          return rep;
        }
        merged = true;
        break;
      }
    if (!merged) constraints.emplace_back(omega, ratio);
  }
  if (constraints.empty()) {
    rep.consistent = true;
    rep.exponent = 0;
    rep.value = f->one();
    rep.detail = "all t";
    return rep;
  }
  rep.any_constraint = true;
  std::sort(constraints.begin(), constraints.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Fold the constraints with iterated Bezout: after step j we hold an
  // integer combination realizing t^{g_j} = val_j with g_j = gcd so far.
  // Each step's lattice relation must evaluate to 1 for closure consistency.
  int64_t g = constraints[0].first;
  Scalar val = constraints[0].second;
  if (g < 0) {
    g = -g;
    val = val.inverse();
  }
  for (size_t j = 1; j < constraints.size(); ++j) {
    int64_t omega = constraints[j].first;
    const Scalar& c = constraints[j].second;
    auto [g2, x, y] = ext_gcd(g, omega);
    Scalar relation = val.pow(omega / g2) * c.pow(-(g / g2));
    if (!relation.is_one()) {
      rep.detail = "empty: lattice relation at weight " + std::to_string(omega) +
                   " evaluates to " + relation.str();
      return rep;
    }
    val = val.pow(x) * c.pow(y);
    g = g2;
  }
  rep.consistent = true;
  rep.exponent = g;
  rep.value = val;
  rep.detail = "t^" + std::to_string(g) + " = " + val.str();
  return rep;
}

}  // namespace detail

struct TransporterReport {
  CosetReport t_coset;  // H(t) v = w
  CosetReport j_coset;  // J H(t) v = w
};

inline TransporterReport nt_transporter(const NTModule& mod, const Vec& v, const Vec& w) {
  require(static_cast<int>(v.size()) == mod.dim && v.size() == w.size(), Errc::DimensionMismatch,
          "vector dim mismatch");
  TransporterReport rep;
  rep.t_coset = detail::solve_torus(mod, v, w);
  rep.j_coset = detail::solve_torus(mod, v, mod.jmat.inverse().apply(w));
  return rep;
}

}  // namespace goodrep
