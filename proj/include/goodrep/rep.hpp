#pragma once

// Representations of matrix groups and the verification predicates built on
// them: invariance, stabilizers, transporters, fixed subspaces, generated
// submodules, weight decompositions, and set-theoretic freeness on the
// complement of a subspace union.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/group.hpp"
#include "goodrep/matrix.hpp"
#include "goodrep/rng.hpp"
#include "goodrep/subspace.hpp"

namespace goodrep {

// Group element together with its image under the representation, in group
// enumeration order (identity first).
struct RepPair {
  Matrix g;
  Matrix image;
};

class Representation {
 public:
  using Evaluator = std::function<Matrix(const Matrix&)>;

  Representation(MatrixGroup group, int dim, std::vector<Matrix> images,
                 Evaluator evaluator = nullptr)
      : group_(std::move(group)),
        dim_(dim),
        images_(std::move(images)),
        eval_(std::move(evaluator)),
        cache_(std::make_shared<Cache>()) {
    require(dim_ > 0, Errc::InvalidArgument, "representation dim must be positive");
    require(images_.size() == group_.generators().size(), Errc::DimensionMismatch,
            "one image per group generator required");
    for (const auto& m : images_) {
      require(m.rows() == dim_ && m.cols() == dim_, Errc::DimensionMismatch,
              "image size does not match representation dim");
      require(same_field(m.field(), group_.field()), Errc::MixedContext,
              "image field does not match group field");
      require(m.is_invertible(), Errc::NotInvertible, "generator image is singular");
    }
  }

  // Representation of the group on itself (images = generators).
  static Representation tautological(MatrixGroup group) {
    auto gens = group.generators();
    int deg = group.degree();
    return Representation(std::move(group), deg, std::move(gens),
                          [](const Matrix& g) { return g; });
  }

  const MatrixGroup& group() const { return group_; }
  int dim() const { return dim_; }
  const std::vector<Matrix>& images() const { return images_; }
  const FieldPtr& field() const { return group_.field(); }
  bool has_evaluator() const { return static_cast<bool>(eval_); }

  // Element/image pairs in group enumeration order; verifies along the way
  // that equal group words carry equal images.
  const std::vector<RepPair>& enumerate_pairs() const {
    if (!cache_->filled) {
      auto raw = detail::bfs_pair_closure(group_.generators(), images_,
                                          Matrix::identity(field(), group_.degree()),
                                          Matrix::identity(field(), dim_),
                                          group_.element_cap());
      cache_->pairs.reserve(raw.size());
      for (auto& pr : raw)
        cache_->pairs.push_back(RepPair{std::move(pr.first), std::move(pr.second)});
      cache_->filled = true;
    }
    return cache_->pairs;
  }

  // rho(g) for a specific group element.  Uses the pointwise evaluator when
  // one is attached, otherwise the enumerated pair table.
  Matrix image_of(const Matrix& g) const {
    if (eval_) return eval_(g);
    int64_t i = group_.index_of(g);
    return enumerate_pairs()[static_cast<size_t>(i)].image;
  }

  // True iff rho(g) s is contained in s for every generator image.  Checking
  // generators suffices: an invertible map sending a finite-dimensional
  // subspace into itself fixes it, so stability passes to inverses.
  bool is_invariant(const Subspace& s) const {
    require(s.ambient() == dim_, Errc::DimensionMismatch,
            "subspace ambient does not match representation dim");
    for (const auto& m : images_) {
      for (int i = 0; i < s.dim(); ++i)
        if (!s.contains(m.apply(s.basis_row(i)))) return false;
    }
    return true;
  }

  // All group elements g with rho(g) v = v, in enumeration order.
  std::vector<Matrix> stabilizer(const Vec& v) const {
    return transporter(v, v);
  }

  // All group elements g with rho(g) v = w; empty certifies w outside the
  // orbit of v.
  std::vector<Matrix> transporter(const Vec& v, const Vec& w) const {
    require(static_cast<int>(v.size()) == dim_ && static_cast<int>(w.size()) == dim_,
            Errc::DimensionMismatch, "vector length does not match representation dim");
    std::vector<Matrix> out;
    for (const auto& pr : enumerate_pairs())
      if (pr.image.apply(v) == w) out.push_back(pr.g);
    return out;
  }

  // Fixed subspace of a subgroup given by generating elements of the group:
  // the intersection of kernel(rho(n) - 1) over the given generators.
  Subspace fixed_subspace(const std::vector<Matrix>& subgroup_gens) const {
    Subspace fix = Subspace::full(field(), dim_);
    Matrix id = Matrix::identity(field(), dim_);
    for (const auto& n : subgroup_gens)
      fix = fix.intersect(kernel(image_of(n) - id));
    return fix;
  }
  Subspace fixed_subspace(const MatrixGroup& sub) const {
    return fixed_subspace(sub.generators());
  }

  // Smallest invariant subspace containing s, by generator saturation.
  // Converges in at most dim steps; stability under generators gives
  // stability under the whole group (see is_invariant).
  Subspace generated_submodule(const Subspace& s) const {
    require(s.ambient() == dim_, Errc::DimensionMismatch,
            "subspace ambient does not match representation dim");
    Subspace cur = s;
    for (;;) {
      Subspace next = cur;
      for (const auto& m : images_) next = next.sum(cur.transform(m));
      if (next == cur) return cur;
      cur = next;
    }
  }

  // Eigenspace decomposition of rho(torus_element) with eigenvalues t^i for
  // labels i in the window.  The caller vouches that t is the torus parameter
  // of torus_element.
  std::vector<std::pair<int64_t, Subspace>> weight_decompose(
      const Matrix& torus_element, const Scalar& t,
      const std::vector<int64_t>& window) const {
    require(!window.empty(), Errc::InvalidArgument, "empty weight window");
    std::vector<Scalar> eig;
    eig.reserve(window.size());
    for (int64_t i : window) eig.push_back(t.pow(i));
    for (size_t a = 0; a < eig.size(); ++a)
      for (size_t b = a + 1; b < eig.size(); ++b)
        require(eig[a] != eig[b], Errc::AmbiguousWeights,
                "order of torus parameter too small to separate weights " +
                    std::to_string(window[a]) + " and " + std::to_string(window[b]));
    Matrix m = image_of(torus_element);
    Matrix id = Matrix::identity(field(), dim_);
    std::vector<std::pair<int64_t, Subspace>> out;
    int total = 0;
    for (size_t a = 0; a < window.size(); ++a) {
      Subspace es = kernel(m - id.scaled(eig[a]));
      if (es.is_zero()) continue;
      total += es.dim();
      out.emplace_back(window[a], std::move(es));
    }
    require(total == dim_, Errc::NotDiagonalizable,
            "eigenspaces in the window do not fill the space");
    return out;
  }

 private:
  struct Cache {
    bool filled = false;
    std::vector<RepPair> pairs;
  };

  MatrixGroup group_;
  int dim_ = 0;
  std::vector<Matrix> images_;
  Evaluator eval_;
  std::shared_ptr<Cache> cache_;
};

// Block-diagonal sum of two representations of the same group presentation.
inline Representation direct_sum(const Representation& a, const Representation& b) {
  require(a.group().same_presentation(b.group()), Errc::MixedContext,
          "direct sum requires the same group presentation");
  const FieldPtr& f = a.field();
  int n = a.dim(), m = b.dim();
  std::vector<Matrix> images;
  images.reserve(a.images().size());
  for (size_t i = 0; i < a.images().size(); ++i) {
    Matrix blk(f, n + m, n + m);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) blk.at(r, c) = a.images()[i].at(r, c);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) blk.at(n + r, n + c) = b.images()[i].at(r, c);
    images.push_back(std::move(blk));
  }
  return Representation(a.group(), n + m, std::move(images));
}

// The family S of proper subspaces whose union's complement is U.
struct GoodnessSpec {
  Representation rep;
  std::vector<Subspace> subspaces;

  GoodnessSpec(Representation r, std::vector<Subspace> subs)
      : rep(std::move(r)), subspaces(std::move(subs)) {
    for (const auto& s : subspaces) {
      require(s.ambient() == rep.dim(), Errc::DimensionMismatch,
              "family subspace ambient does not match representation dim");
      require(!s.is_full(), Errc::InvalidArgument,
              "family subspaces must be proper");
      require(same_field(s.field(), rep.field()), Errc::MixedContext,
              "family subspace field does not match representation field");
    }
  }
};

struct FreenessWitness {
  Matrix g;  // group element, not the identity
  Vec u;     // point outside the union with rho(g) u = u
};

struct FreenessReport {
  std::string status;  // "verified" | "refuted" | "evidence"
  int64_t tested = 0;
  std::optional<FreenessWitness> witness;
  std::optional<uint64_t> seed;
  std::string method;  // "pointwise" | "kernel" | "sample"
};

struct FreeMode {
  bool exhaustive = true;
  uint64_t seed = 0;
  int64_t count = 0;

  static FreeMode Exhaustive() { return FreeMode{true, 0, 0}; }
  static FreeMode Sample(uint64_t sample_seed, int64_t sample_count) {
    return FreeMode{false, sample_seed, sample_count};
  }
};

namespace detail {

// Flattened index form of a matrix for table-driven finite-field loops.
inline std::vector<int32_t> flat_indices(const Matrix& m) {
  std::vector<int32_t> out;
  out.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      out.push_back(static_cast<int32_t>(m.at(r, c).index()));
  return out;
}

// Local add/mul index tables for a finite field of order q <= 1024; copies
// the field's eager tables when present, otherwise fills by direct index
// arithmetic (prime fields).
inline void local_tables(const FieldPtr& f, int64_t q, std::vector<int32_t>& add,
                         std::vector<int32_t>& mul) {
  const int32_t* fa = f->raw_add_table();
  const int32_t* fm = f->raw_mul_table();
  if (fa && fm) {
    add.assign(fa, fa + q * q);
    mul.assign(fm, fm + q * q);
    return;
  }
  add.resize(static_cast<size_t>(q) * q);
  mul.resize(static_cast<size_t>(q) * q);
  for (int64_t a = 0; a < q; ++a)
    for (int64_t b = 0; b < q; ++b) {
      add[static_cast<size_t>(a) * q + b] = static_cast<int32_t>(f->add_idx(a, b));
      mul[static_cast<size_t>(a) * q + b] = static_cast<int32_t>(f->mul_idx(a, b));
    }
}

// u in S for S given by its constraint rows (E u = 0), index arithmetic.
inline bool flat_satisfies(const std::vector<int32_t>& cons, int rows, int dim,
                           const std::vector<int32_t>& u,
                           const std::vector<int32_t>& add,
                           const std::vector<int32_t>& mul, int64_t q) {
  for (int r = 0; r < rows; ++r) {
    int32_t acc = 0;
    const int32_t* row = cons.data() + static_cast<size_t>(r) * dim;
    for (int c = 0; c < dim; ++c)
      acc = add[static_cast<size_t>(acc) * q + mul[static_cast<size_t>(row[c]) * q + u[c]]];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace detail

// Exhaustive oracle used as an independent cross-check and as the route for
// instances whose pointwise budget is out of reach: for every non-identity
// group element, enumerate the fixed points kernel(rho(g) - 1) and test them
// against the union.  Equivalent to the pointwise sweep but scales with the
// fixed loci instead of the whole space.
inline FreenessReport check_set_free_kernels(const GoodnessSpec& spec) {
  const Representation& rep = spec.rep;
  const FieldPtr& f = rep.field();
  require(f->is_finite(), Errc::InvalidArgument,
          "kernel enumeration requires a finite field");
  int dim = rep.dim();
  int64_t q = f->order();
  const auto& pairs = rep.enumerate_pairs();

  // A union of at most q proper subspaces never covers GF(q)^n, so U is
  // nonempty for free in that case; otherwise sweep for one outside point.
  if (static_cast<int64_t>(spec.subspaces.size()) > q) {
    bool found = false;
    std::vector<int64_t> digits(dim, 0);
    Vec u(dim, f->zero());
    double total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<double>(q);
    for (double n = 0; n < total && !found; ++n) {
      for (int i = 0; i < dim; ++i) u[static_cast<size_t>(i)] = f->element_at(digits[i]);
      if (!in_union(spec.subspaces, u)) found = true;
      int i = 0;
      while (i < dim && ++digits[i] == q) digits[i++] = 0;
    }
    require(found, Errc::EmptyU, "the subspace family covers the whole space");
  }

  FreenessReport rpt;
  rpt.method = "kernel";
  Matrix id = Matrix::identity(f, dim);
  for (size_t pi = 1; pi < pairs.size(); ++pi) {
    Subspace fix = kernel(pairs[pi].image - id);
    if (fix.is_zero()) continue;
    int k = fix.dim();
    // Points of the fixed space via coefficient odometer, coefficient 0
    // fastest, zero combination skipped.
    std::vector<int64_t> digits(static_cast<size_t>(k), 0);
    double combos = 1;
    for (int i = 0; i < k; ++i) combos *= static_cast<double>(q);
    for (double n = 1; n < combos; ++n) {
      int i = 0;
      while (++digits[static_cast<size_t>(i)] == q) digits[static_cast<size_t>(i++)] = 0;
      Vec u(static_cast<size_t>(dim), f->zero());
      for (int j = 0; j < k; ++j) {
        if (digits[static_cast<size_t>(j)] == 0) continue;
        u = vec_add(u, vec_scaled(fix.basis_row(j), f->element_at(digits[static_cast<size_t>(j)])));
      }
      ++rpt.tested;
      if (!in_union(spec.subspaces, u)) {
        rpt.status = "refuted";
        rpt.witness = FreenessWitness{pairs[pi].g, u};
        return rpt;
      }
    }
  }
  rpt.status = "verified";
  return rpt;
}

// Set-theoretic freeness of the action on U = complement of the union.
// Exhaustive mode sweeps vectors in odometer order (coordinate 0 fastest),
// group elements inner in enumeration order, so a refutation witness is the
// first in vector order.  Sample mode draws seeded vectors and reports
// refuted or evidence.
inline FreenessReport check_set_free(const GoodnessSpec& spec, const FreeMode& mode) {
  const Representation& rep = spec.rep;
  const FieldPtr& f = rep.field();
  int dim = rep.dim();

  if (mode.exhaustive) {
    require(f->is_finite(), Errc::InvalidArgument,
            "exhaustive mode requires a finite field");
    int64_t q = f->order();
    const auto& pairs = rep.enumerate_pairs();
    double vectors = 1;
    for (int i = 0; i < dim; ++i) vectors *= static_cast<double>(q);
    require(vectors * static_cast<double>(pairs.size()) <= 1e8, Errc::CapExceeded,
            "exhaustive budget exceeded: vectors x group order > 1e8");

    FreenessReport rpt;
    rpt.method = "pointwise";

    if (q <= 1024) {
      // Table-driven index loop.
      std::vector<int32_t> add, mul;
      detail::local_tables(f, q, add, mul);
      std::vector<std::vector<int32_t>> flat_images;
      flat_images.reserve(pairs.size() - 1);
      for (size_t i = 1; i < pairs.size(); ++i)
        flat_images.push_back(detail::flat_indices(pairs[i].image));
      std::vector<std::vector<int32_t>> cons;
      std::vector<int> cons_rows;
      for (const auto& s : spec.subspaces) {
        Matrix e = s.constraints();
        cons.push_back(detail::flat_indices(e));
        cons_rows.push_back(e.rows());
      }
      std::vector<int32_t> u(static_cast<size_t>(dim), 0);
      for (double n = 0; n < vectors; ++n) {
        bool inside = false;
        for (size_t si = 0; si < cons.size() && !inside; ++si)
          inside = detail::flat_satisfies(cons[si], cons_rows[si], dim, u, add, mul, q);
        if (!inside) {
          ++rpt.tested;
          for (size_t gi = 0; gi < flat_images.size(); ++gi) {
            const int32_t* m = flat_images[gi].data();
            bool fixes = true;
            for (int r = 0; r < dim && fixes; ++r) {
              int32_t acc = 0;
              const int32_t* row = m + static_cast<size_t>(r) * dim;
              for (int c = 0; c < dim; ++c)
                acc = add[static_cast<size_t>(acc) * q +
                          mul[static_cast<size_t>(row[c]) * q + u[static_cast<size_t>(c)]]];
              fixes = (acc == u[static_cast<size_t>(r)]);
            }
            if (fixes) {
              Vec w(static_cast<size_t>(dim), f->zero());
              for (int i = 0; i < dim; ++i)
                w[static_cast<size_t>(i)] = f->element_at(u[static_cast<size_t>(i)]);
              rpt.status = "refuted";
              rpt.witness = FreenessWitness{pairs[gi + 1].g, w};
              return rpt;
            }
          }
        }
        int i = 0;
        while (i < dim && ++u[static_cast<size_t>(i)] == q) u[static_cast<size_t>(i++)] = 0;
      }
    } else {
      // Large prime order: same sweep with scalar arithmetic.
      std::vector<int64_t> digits(static_cast<size_t>(dim), 0);
      Vec u(static_cast<size_t>(dim), f->zero());
      for (double n = 0; n < vectors; ++n) {
        for (int i = 0; i < dim; ++i) u[static_cast<size_t>(i)] = f->element_at(digits[static_cast<size_t>(i)]);
        if (!in_union(spec.subspaces, u)) {
          ++rpt.tested;
          for (size_t pi = 1; pi < pairs.size(); ++pi) {
            if (pairs[pi].image.apply(u) == u) {
              rpt.status = "refuted";
              rpt.witness = FreenessWitness{pairs[pi].g, u};
              return rpt;
            }
          }
        }
        int i = 0;
        while (i < dim && ++digits[static_cast<size_t>(i)] == q) digits[static_cast<size_t>(i++)] = 0;
      }
    }
    require(rpt.tested > 0, Errc::EmptyU, "the subspace family covers the whole space");
    rpt.status = "verified";
    return rpt;
  }

  // Sample mode.
  FreenessReport rpt;
  rpt.method = "sample";
  rpt.seed = mode.seed;
  Rng rng(mode.seed);
  bool enumerable = true;
  try {
    rep.enumerate_pairs();
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    enumerable = false;
  }
  auto draw_vec = [&]() {
    Vec v(static_cast<size_t>(dim), f->zero());
    for (int i = 0; i < dim; ++i) {
      if (f->is_finite())
        v[static_cast<size_t>(i)] = f->element_at(static_cast<int64_t>(rng.below(static_cast<uint64_t>(f->order()))));
      else
        v[static_cast<size_t>(i)] = f->from_int(rng.small_int(4));
    }
    return v;
  };
  for (int64_t trial = 0; trial < mode.count; ++trial) {
    Vec u = draw_vec();
    if (in_union(spec.subspaces, u)) continue;
    ++rpt.tested;
    if (enumerable) {
      const auto& pairs = rep.enumerate_pairs();
      for (size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].image.apply(u) == u) {
          rpt.status = "refuted";
          rpt.witness = FreenessWitness{pairs[i].g, u};
          return rpt;
        }
      }
    } else {
      // Infinite group: finite-level evidence from random short words.
      const auto& gens = rep.group().generators();
      const auto& images = rep.images();
      int len = 1 + static_cast<int>(rng.below(8));
      Matrix g = Matrix::identity(f, rep.group().degree());
      Matrix img = Matrix::identity(f, dim);
      for (int s = 0; s < len; ++s) {
        size_t pick = static_cast<size_t>(rng.below(gens.size()));
        g = g * gens[pick];
        img = img * images[pick];
      }
      if (!g.is_identity() && img.apply(u) == u) {
        rpt.status = "refuted";
        rpt.witness = FreenessWitness{g, u};
        return rpt;
      }
    }
  }
  rpt.status = "evidence";
  return rpt;
}

}  // namespace goodrep
