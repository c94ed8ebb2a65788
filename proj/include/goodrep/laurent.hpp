#pragma once

// Laurent polynomials in one variable over an exact field, stored as the
// lowest exponent plus a dense coefficient run. Canonical form trims zero
// coefficients at both ends; the zero polynomial has an empty run. The gcd
// machinery answers "do these share a nonzero root in the closure" by taking
// the polynomial gcd of monomial-normalized numerators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/field.hpp"

namespace goodrep {

class LaurentPoly {
 public:
  explicit LaurentPoly(FieldPtr f) : f_(std::move(f)), lo_(0) {}
  LaurentPoly(FieldPtr f, int64_t lo, std::vector<Scalar> coeffs)
      : f_(std::move(f)), lo_(lo), c_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly zero(const FieldPtr& f) { return LaurentPoly(f); }
  static LaurentPoly constant(const Scalar& s) { return LaurentPoly(s.field(), 0, {s}); }
  static LaurentPoly monomial(const Scalar& s, int64_t exp) { return LaurentPoly(s.field(), exp, {s}); }

  const FieldPtr& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int64_t lowest() const { return lo_; }
  int64_t highest() const { return lo_ + static_cast<int64_t>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar coeff(int64_t exp) const {
    if (c_.empty() || exp < lo_ || exp > highest()) return f_->zero();
    return c_[exp - lo_];
  }

  bool operator==(const LaurentPoly& o) const {
    if (is_zero() && o.is_zero()) return same_field(f_, o.f_);
    return same_field(f_, o.f_) && lo_ == o.lo_ && c_ == o.c_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly operator+(const LaurentPoly& o) const {
    require_same_field(f_, o.f_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int64_t lo = std::min(lo_, o.lo_);
    int64_t hi = std::max(highest(), o.highest());
    std::vector<Scalar> r;
    r.reserve(hi - lo + 1);
    for (int64_t e = lo; e <= hi; ++e) r.push_back(coeff(e) + o.coeff(e));
    return LaurentPoly(f_, lo, std::move(r));
  }
  LaurentPoly operator-() const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return LaurentPoly(f_, lo_, std::move(r));
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    require_same_field(f_, o.f_);
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return LaurentPoly(f_, lo_ + o.lo_, std::move(r));
  }
  LaurentPoly scaled(const Scalar& s) const {
    if (s.is_zero()) return zero(f_);
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return LaurentPoly(f_, lo_, std::move(r));
  }
  LaurentPoly shifted(int64_t k) const {
    if (is_zero()) return *this;
    return LaurentPoly(f_, lo_ + k, c_);
  }

  // Evaluation; t = 0 is rejected whenever negative exponents are present.
  Scalar eval(const Scalar& t) const {
    require_same_field(f_, t.field());
    if (is_zero()) return f_->zero();
    require(!t.is_zero() || lo_ >= 0, Errc::DivisionByZero, "evaluating negative power at zero");
    Scalar acc = f_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc * t.pow(lo_);
  }

  bool is_monomial() const { return c_.size() == 1; }

  // Coefficient run with the monomial factor lambda^lo stripped: an ordinary
  // polynomial with nonzero constant term (empty for the zero polynomial).
  // Nonzero roots are exactly the nonzero roots of the original.
  const std::vector<Scalar>& numerator() const { return c_; }

  std::map<int64_t, std::string> coeff_table() const {
    std::map<int64_t, std::string> t;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) t[lo_ + static_cast<int64_t>(i)] = c_[i].str();
    return t;
  }

 private:
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    size_t tail = c_.size();
    while (tail > lead && c_[tail - 1].is_zero()) --tail;
    if (lead > 0 || tail < c_.size()) {
      std::vector<Scalar> r(c_.begin() + lead, c_.begin() + tail);
      c_ = std::move(r);
      lo_ += static_cast<int64_t>(lead);
    }
  }

  FieldPtr f_;
  int64_t lo_;
  std::vector<Scalar> c_;
};

// --- ordinary-polynomial helpers on dense coefficient vectors ---

namespace detail {

inline std::vector<Scalar> poly_trim(std::vector<Scalar> a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

inline std::vector<Scalar> poly_rem(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  a = poly_trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    Scalar c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - c * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

inline std::vector<Scalar> poly_monic(std::vector<Scalar> a) {
  if (a.empty()) return a;
  Scalar lead = a.back();
  if (lead.is_one()) return a;
  for (auto& x : a) x = x / lead;
  return a;
}

inline std::vector<Scalar> poly_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

}  // namespace detail

struct RootReport {
  bool has_common_nonzero_root = false;
  bool identically_satisfied = false;       // every polynomial in the system was zero
  std::vector<Scalar> gcd;                  // monic gcd of normalized numerators (empty: zero)
};

// Common nonzero root in the algebraic closure, detected through the gcd of
// monomial-normalized numerators. Zero polynomials constrain nothing. The
// gcd divides a polynomial with nonzero constant term, so any root it has is
// automatically nonzero.
inline RootReport laurent_gcd_roots(const FieldPtr& f, const std::vector<LaurentPoly>& polys) {
  RootReport rep;
  std::vector<Scalar> g;  // empty = zero polynomial (gcd identity element)
  bool any_nonzero = false;
  for (const auto& p : polys) {
    require_same_field(f, p.field());
    if (p.is_zero()) continue;
    any_nonzero = true;
    g = g.empty() ? detail::poly_monic(p.numerator()) : detail::poly_gcd(std::move(g), p.numerator());
    if (g.size() == 1) break;  // unit gcd: no common root possible
  }
  if (!any_nonzero) {
    rep.identically_satisfied = true;
    rep.has_common_nonzero_root = true;  // every nonzero lambda satisfies the (empty) system
    return rep;
  }
  rep.gcd = std::move(g);
  rep.has_common_nonzero_root = rep.gcd.size() >= 2;
  return rep;
}

// Exhaustive cross-check used by tests: nonzero field points satisfying the
// whole system.
inline std::vector<Scalar> common_nonzero_roots_over(const FieldPtr& f,
                                                     const std::vector<LaurentPoly>& polys) {
  std::vector<Scalar> out;
  for (int64_t i = 1; i < f->order(); ++i) {
    Scalar t = f->element_at(i);
    bool all = true;
    for (const auto& p : polys)
      if (!p.eval(t).is_zero()) {
        all = false;
        break;
      }
    if (all) out.push_back(t);
  }
  return out;
}

}  // namespace goodrep
