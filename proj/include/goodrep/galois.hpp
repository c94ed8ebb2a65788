#pragma once

// Galois extensions with an explicit automorphism list. Automorphisms are
// stored by the image of the primitive element alpha and applied by
// evaluating an element's coefficient vector at that image; sigma_1 is the
// identity. Finite extensions get the Frobenius powers, Q(sqrt(d))/Q gets
// {id, conjugation}.

#include <string>
#include <vector>

#include "goodrep/error.hpp"
#include "goodrep/field.hpp"

namespace goodrep {

class GaloisExtension {
 public:
  // GF(p^n)/GF(p) with sigma_j = Frobenius^(j-1).
  static GaloisExtension finite(const FieldPtr& top) {
    require(top->kind() == FieldKind::Extension, Errc::InvalidArgument,
            "finite Galois extension needs GF(p^n) on top");
    GaloisExtension e;
    e.top_ = top;
    e.base_ = Field::prime(top->p());
    e.degree_ = top->degree();
    e.alpha_ = top->element_at(top->p());  // class of x in the power basis
    for (int j = 0; j < e.degree_; ++j) e.auto_images_.push_back(e.alpha_.frobenius(j));
    e.validate();
    return e;
  }

  // Degree-1 extension of a field over itself; the descent construction
  // degenerates to the identity through it.
  static GaloisExtension trivial(const FieldPtr& f) {
    GaloisExtension e;
    e.top_ = f;
    e.base_ = f;
    e.degree_ = 1;
    e.alpha_ = f->one();
    e.auto_images_.push_back(e.alpha_);
    e.validate();
    return e;
  }

  // Q(sqrt(d))/Q with sigma_2 the conjugation.
  static GaloisExtension quadratic(const mpz_class& d) {
    GaloisExtension e;
    e.top_ = Field::quadratic(d);
    e.base_ = Field::rationals();
    e.degree_ = 2;
    e.alpha_ = e.top_->from_mpq_pair(0, 1);
    e.auto_images_.push_back(e.alpha_);
    e.auto_images_.push_back(-e.alpha_);
    e.validate();
    return e;
  }

  static GaloisExtension from_descriptor(const std::string& desc) {
    // "top/base", e.g. "GF(3^2;modulus=[2,2,1])/GF(3)" or "Q(sqrt(2))/Q"
    size_t slash = desc.rfind('/');
    require(slash != std::string::npos, Errc::ParseError, "extension descriptor needs top/base");
    FieldPtr top = parse_field(desc.substr(0, slash));
    FieldPtr base = parse_field(desc.substr(slash + 1));
    if (top->kind() == FieldKind::Extension) {
      require(base->kind() == FieldKind::Prime && base->p() == top->p(), Errc::InvalidArgument,
              "finite extension base must be the prime field");
      return finite(top);
    }
    require(top->kind() == FieldKind::QuadRat && base->kind() == FieldKind::Rationals,
            Errc::InvalidArgument, "unsupported extension: " + desc);
    return quadratic(top->quad_d());
  }

  const FieldPtr& top() const { return top_; }
  const FieldPtr& base() const { return base_; }
  int degree() const { return degree_; }
  const Scalar& alpha() const { return alpha_; }
  const Scalar& auto_image(int j) const {  // 1-based automorphism index
    require(j >= 1 && j <= degree_, Errc::IndexOutOfRange, "automorphism index out of range");
    return auto_images_[j - 1];
  }

  // sigma_j(a), by evaluating a's power-basis coefficients at sigma_j(alpha).
  Scalar apply(int j, const Scalar& a) const {
    require(j >= 1 && j <= degree_, Errc::IndexOutOfRange, "automorphism index out of range");
    require_same_field(a.field(), top_);
    if (j == 1) return a;
    if (top_->kind() == FieldKind::QuadRat)
      return top_->from_mpq_pair(a.rat(), -a.quad_part());
    const Scalar& im = auto_images_[j - 1];
    auto c = top_->idx_coeffs(a.index());
    Scalar acc = top_->zero();
    for (int i = degree_ - 1; i >= 0; --i) acc = acc * im + top_->element_at(c[i]);
    return acc;
  }

  // Index of sigma_i . sigma_j in the automorphism list (1-based).
  int compose(int i, int j) const { return comp_table_[(i - 1) * degree_ + (j - 1)]; }
  int inverse_of(int i) const {
    for (int j = 1; j <= degree_; ++j)
      if (compose(i, j) == 1) return j;
    fail(Errc::NotBijection, "automorphism has no inverse in the list");
  }

  bool fixes_base(const Scalar& a) const {
    for (int j = 2; j <= degree_; ++j)
      if (apply(j, a) != a) return false;
    return true;
  }

 private:
  void validate() {
    // pairwise distinct conjugates of alpha, and {alpha^i} a basis marker:
    // distinct images suffice at the degrees in scope (checked by tests
    // through the Vandermonde determinant).
    for (int i = 0; i < degree_; ++i)
      for (int j = i + 1; j < degree_; ++j)
        require(auto_images_[i] != auto_images_[j], Errc::InvalidArgument,
                "automorphism images of alpha must be pairwise distinct");
    // closure: the composites permute the automorphism list
    comp_table_.assign(degree_ * degree_, 0);
    for (int i = 1; i <= degree_; ++i) {
      for (int j = 1; j <= degree_; ++j) {
        Scalar im = apply(i, auto_image(j));  // (sigma_i . sigma_j)(alpha)
        int found = 0;
        for (int k = 1; k <= degree_; ++k)
          if (auto_image(k) == im) {
            found = k;
            break;
          }
        require(found != 0, Errc::NotBijection, "automorphisms do not close under composition");
        comp_table_[(i - 1) * degree_ + (j - 1)] = found;
      }
    }
  }

  FieldPtr top_, base_;
  int degree_ = 0;
  Scalar alpha_;
  std::vector<Scalar> auto_images_;
  std::vector<int> comp_table_;
};

}  // namespace goodrep
