#pragma once

// Matrix groups presented by generators, with deterministic breadth-first
// closure enumeration.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/matrix.hpp"

namespace goodrep {

namespace detail {

// Breadth-first closure of pairs (a, b) under right multiplication by
// (gen_a[i], gen_b[i]), deduplicated on the a-component.  Order: word length,
// then queue position, then generator input order.  The two tracks must be
// images of each other under a map respecting products; if a duplicate
// a-component arrives with a different b-component the map is not well
// defined on the closure.
inline std::vector<std::pair<Matrix, Matrix>> bfs_pair_closure(
    const std::vector<Matrix>& gen_a, const std::vector<Matrix>& gen_b,
    const Matrix& id_a, const Matrix& id_b, int64_t cap) {
  require(gen_a.size() == gen_b.size(), Errc::DimensionMismatch,
          "generator lists differ in length");
  std::vector<std::pair<Matrix, Matrix>> out;
  std::unordered_map<std::string, size_t> seen;
  out.emplace_back(id_a, id_b);
  seen.emplace(id_a.key(), 0);
  for (size_t head = 0; head < out.size(); ++head) {
    for (size_t gi = 0; gi < gen_a.size(); ++gi) {
      Matrix na = out[head].first * gen_a[gi];
      std::string k = na.key();
      auto it = seen.find(k);
      if (it != seen.end()) {
        // Same group element reached twice: images must agree.
        Matrix nb = out[head].second * gen_b[gi];
        require(out[it->second].second == nb, Errc::HomomorphismViolation,
                "generator images are inconsistent on equal group words");
        continue;
      }
      require(static_cast<int64_t>(out.size()) < cap, Errc::CapExceeded,
              "group enumeration exceeded element cap " + std::to_string(cap));
      out.emplace_back(na, out[head].second * gen_b[gi]);
      seen.emplace(std::move(k), out.size() - 1);
    }
  }
  return out;
}

}  // namespace detail

class MatrixGroup {
 public:
  static constexpr int64_t kDefaultCap = 1'000'000;

  MatrixGroup(FieldPtr f, int degree, std::vector<Matrix> generators,
              int64_t element_cap = kDefaultCap)
      : f_(std::move(f)),
        degree_(degree),
        gens_(std::move(generators)),
        cap_(element_cap),
        cache_(std::make_shared<Cache>()) {
    require(degree_ > 0, Errc::InvalidArgument, "group degree must be positive");
    require(cap_ > 0, Errc::InvalidArgument, "element cap must be positive");
    for (const auto& g : gens_) {
      require(g.rows() == degree_ && g.cols() == degree_, Errc::DimensionMismatch,
              "generator size does not match group degree");
      require(same_field(g.field(), f_), Errc::MixedContext,
              "generator field does not match group field");
      require(g.is_invertible(), Errc::NotInvertible, "group generator is singular");
    }
  }

  static MatrixGroup trivial(const FieldPtr& f, int degree,
                             int64_t element_cap = kDefaultCap) {
    return MatrixGroup(f, degree, {}, element_cap);
  }

  const FieldPtr& field() const { return f_; }
  int degree() const { return degree_; }
  const std::vector<Matrix>& generators() const { return gens_; }
  int64_t element_cap() const { return cap_; }

  // Same presentation: field, degree, generator list in order, cap.
  bool same_presentation(const MatrixGroup& o) const {
    if (!same_field(f_, o.f_) || degree_ != o.degree_ || cap_ != o.cap_) return false;
    if (gens_.size() != o.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] != o.gens_[i]) return false;
    return true;
  }

  // All elements, breadth-first by word length then generator input order,
  // identity first.  Cached; copies of this group share the cache.
  const std::vector<Matrix>& enumerate() const {
    if (!cache_->filled) {
      Matrix id = Matrix::identity(f_, degree_);
      auto pairs = detail::bfs_pair_closure(gens_, gens_, id, id, cap_);
      cache_->elems.reserve(pairs.size());
      for (auto& pr : pairs) {
        cache_->index.emplace(pr.first.key(), cache_->elems.size());
        cache_->elems.push_back(std::move(pr.first));
      }
      cache_->filled = true;
    }
    return cache_->elems;
  }

  int64_t order() const { return static_cast<int64_t>(enumerate().size()); }

  bool contains(const Matrix& m) const {
    if (m.rows() != degree_ || m.cols() != degree_) return false;
    enumerate();
    return cache_->index.count(m.key()) > 0;
  }

  // Position of m in enumeration order.
  int64_t index_of(const Matrix& m) const {
    enumerate();
    auto it = cache_->index.find(m.key());
    require(it != cache_->index.end(), Errc::InvalidArgument,
            "matrix is not an element of the group");
    return static_cast<int64_t>(it->second);
  }

 private:
  struct Cache {
    bool filled = false;
    std::vector<Matrix> elems;
    std::unordered_map<std::string, size_t> index;
  };

  FieldPtr f_;
  int degree_ = 0;
  std::vector<Matrix> gens_;
  int64_t cap_ = kDefaultCap;
  std::shared_ptr<Cache> cache_;
};

}  // namespace goodrep
