#pragma once

// Exact scalar arithmetic over Q, GF(p), GF(p^n) and Q(sqrt(d)).
//
// Finite-field elements are stored as indices 0..q-1: for GF(p^n) the index
// is sum c_i p^i with c_0 the constant coefficient of the power basis of the
// modulus class alpha. Characteristic-0 elements are GMP rationals (a pair
// a + b*sqrt(d) for quadratic fields, b = 0 over plain Q). No floating point.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "goodrep/error.hpp"

namespace goodrep {

enum class FieldKind { Rationals, Prime, Extension, QuadRat };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

// Dense polynomials over GF(p), coefficient c[i] on x^i, used only for
// modulus bookkeeping at construction time.
using PolyP = std::vector<int64_t>;

inline PolyP ptrim(PolyP a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline PolyP pmul(const PolyP& a, const PolyP& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return ptrim(std::move(r));
}

// Remainder of a by monic b.
inline PolyP pmod(PolyP a, const PolyP& b, int64_t p) {
  a = ptrim(std::move(a));
  while (a.size() >= b.size()) {
    int64_t c = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      size_t k = i + shift;
      a[k] = ((a[k] - c * b[i]) % p + p) % p;
    }
    a = ptrim(std::move(a));
  }
  return a;
}

inline bool pis_zero(const PolyP& a) { return a.empty(); }

inline int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(Errc::DivisionByZero, "no inverse mod p");
  return ((t % p) + p) % p;
}

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
  };
  auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) -> uint64_t {
    uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Irreducibility over GF(p) by trial division: no monic factor of degree
// 1..deg/2. Fine at the scales supported here (p^(deg/2) candidates).
inline bool irreducible_over_gfp(const PolyP& f, int64_t p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int k = 1; 2 * k <= deg; ++k) {
    int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int64_t m = 0; m < count; ++m) {
      PolyP g(k + 1, 0);
      int64_t t = m;
      for (int i = 0; i < k; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[k] = 1;
      if (pis_zero(pmod(f, g, p))) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of the requested degree, ordered by the numeric
// value of the non-leading coefficient vector (c_0 least significant).
inline PolyP default_modulus(int64_t p, int deg) {
  int64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (int64_t m = 0; m < count; ++m) {
    PolyP f(deg + 1, 0);
    int64_t t = m;
    for (int i = 0; i < deg; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[deg] = 1;
    if (irreducible_over_gfp(f, p)) return f;
  }
  fail(Errc::InvalidModulus, "no irreducible polynomial found");
}

}  // namespace detail

class Scalar;

class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr int64_t kTableCap = 1024;  // ops beyond this fall back to direct computation
  static constexpr int64_t kEnumCap = 1 << 20;

  static FieldPtr rationals() {
    static FieldPtr q(new Field(FieldKind::Rationals));
    return q;
  }

  static FieldPtr prime(int64_t p) {
    require(p >= 2 && p <= (int64_t(1) << 31), Errc::InvalidArgument, "prime out of range");
    require(detail::is_prime_u64(static_cast<uint64_t>(p)), Errc::InvalidArgument,
            "characteristic must be prime: " + std::to_string(p));
    FieldPtr f(new Field(FieldKind::Prime));
    const_cast<Field*>(f.get())->p_ = p;
    const_cast<Field*>(f.get())->deg_ = 1;
    const_cast<Field*>(f.get())->q_ = p;
    const_cast<Field*>(f.get())->init_tables();
    return f;
  }

  // modulus: coefficients c_0..c_deg over GF(p), monic, irreducible.
  // Empty modulus selects the smallest monic irreducible of that degree.
  static FieldPtr extension(int64_t p, int deg, std::vector<int64_t> modulus = {}) {
    require(p >= 2 && detail::is_prime_u64(static_cast<uint64_t>(p)), Errc::InvalidArgument,
            "characteristic must be prime");
    require(deg >= 2, Errc::InvalidArgument, "extension degree must be >= 2");
    int64_t q = 1;
    for (int i = 0; i < deg; ++i) {
      q *= p;
      require(q <= kEnumCap, Errc::InvalidArgument, "extension field too large to enumerate");
    }
    if (modulus.empty()) {
      modulus = detail::default_modulus(p, deg);
    } else {
      require(static_cast<int>(modulus.size()) == deg + 1, Errc::InvalidModulus,
              "modulus must list deg+1 coefficients");
      for (auto& c : modulus) c = ((c % p) + p) % p;
      require(modulus.back() == 1, Errc::InvalidModulus, "modulus must be monic");
      require(detail::irreducible_over_gfp(modulus, p), Errc::InvalidModulus,
              "modulus is reducible over GF(p)");
    }
    FieldPtr f(new Field(FieldKind::Extension));
    Field* m = const_cast<Field*>(f.get());
    m->p_ = p;
    m->deg_ = deg;
    m->q_ = q;
    m->modulus_ = std::move(modulus);
    m->init_tables();
    return f;
  }

  static FieldPtr quadratic(const mpz_class& d) {
    require(d != 0, Errc::InvalidArgument, "quadratic parameter must be nonzero");
    require(d <= 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0, Errc::InvalidArgument,
            "quadratic parameter must not be a perfect square");
    FieldPtr f(new Field(FieldKind::QuadRat));
    const_cast<Field*>(f.get())->d_ = d;
    return f;
  }

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FieldKind::Prime || kind_ == FieldKind::Extension; }
  int64_t characteristic() const { return is_finite() ? p_ : 0; }
  int64_t p() const { return p_; }
  int degree() const { return deg_; }
  int64_t order() const {
    require(is_finite(), Errc::CharacteristicZero, "order() needs a finite field");
    return q_;
  }
  const std::vector<int64_t>& modulus() const { return modulus_; }
  const mpz_class& quad_d() const { return d_; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && deg_ == o.deg_ && modulus_ == o.modulus_ && d_ == o.d_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string descriptor() const {
    switch (kind_) {
      case FieldKind::Rationals:
        return "Q";
      case FieldKind::Prime:
        return "GF(" + std::to_string(p_) + ")";
      case FieldKind::Extension: {
        std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(deg_) + ";modulus=[";
        for (size_t i = 0; i < modulus_.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(modulus_[i]);
        }
        return s + "])";
      }
      case FieldKind::QuadRat:
        return "Q(sqrt(" + d_.get_str() + "))";
    }
    return "?";
  }

  // --- index-level finite arithmetic (used by scalars and by the flat
  // enumeration kernels; indices must be in range) ---

  int64_t add_idx(int64_t a, int64_t b) const {
    if (kind_ == FieldKind::Prime) return (a + b) % p_;
    if (add_table_.empty()) return slow_add(a, b);
    return add_table_[a * q_ + b];
  }
  int64_t mul_idx(int64_t a, int64_t b) const {
    if (kind_ == FieldKind::Prime) return (a * b) % p_;
    if (mul_table_.empty()) return slow_mul(a, b);
    return mul_table_[a * q_ + b];
  }
  int64_t neg_idx(int64_t a) const {
    if (kind_ == FieldKind::Prime) return (p_ - a) % p_;
    if (neg_table_.empty()) {
      auto c = idx_coeffs(a);
      for (auto& x : c) x = (p_ - x) % p_;
      return coeffs_idx(c);
    }
    return neg_table_[a];
  }
  int64_t sub_idx(int64_t a, int64_t b) const { return add_idx(a, neg_idx(b)); }
  int64_t inv_idx(int64_t a) const {
    require(a != 0, Errc::DivisionByZero, "division by zero");
    if (kind_ == FieldKind::Prime) return detail::mod_inverse(a, p_);
    if (!inv_table_.empty()) return inv_table_[a];
    // a^(q-2) by square and multiply
    int64_t r = 1, base = a, e = q_ - 2;
    while (e) {
      if (e & 1) r = mul_idx(r, base);
      base = mul_idx(base, base);
      e >>= 1;
    }
    return r;
  }
  int64_t pow_idx(int64_t a, int64_t e) const {
    if (e < 0) {
      a = inv_idx(a);
      e = -e;
    }
    int64_t r = 1;
    while (e) {
      if (e & 1) r = mul_idx(r, a);
      a = mul_idx(a, a);
      e >>= 1;
    }
    return r;
  }

  std::vector<int64_t> idx_coeffs(int64_t idx) const {
    std::vector<int64_t> c(deg_, 0);
    for (int i = 0; i < deg_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    return c;
  }
  int64_t coeffs_idx(const std::vector<int64_t>& c) const {
    int64_t idx = 0;
    for (int i = deg_ - 1; i >= 0; --i) idx = idx * p_ + (i < static_cast<int>(c.size()) ? ((c[i] % p_ + p_) % p_) : 0);
    return idx;
  }

  // Smallest element index generating the multiplicative group.
  int64_t multiplicative_generator() const {
    require(is_finite(), Errc::CharacteristicZero, "needs a finite field");
    for (int64_t g = 1; g < q_; ++g) {
      int64_t x = g;
      int64_t ord = 1;
      while (x != 1) {
        x = mul_idx(x, g);
        ++ord;
      }
      if (ord == q_ - 1) return g;
    }
    fail(Errc::InvalidArgument, "no multiplicative generator found");
  }

  bool has_tables() const { return !mul_table_.empty() || kind_ == FieldKind::Prime; }

  // Scalar factories are defined after Scalar.
  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(int64_t v) const;
  Scalar from_mpq(const mpq_class& a) const;
  Scalar from_mpq_pair(const mpq_class& a, const mpq_class& b) const;
  Scalar element_at(int64_t idx) const;

 private:
  explicit Field(FieldKind k) : kind_(k) {}

  int64_t slow_add(int64_t a, int64_t b) const {
    auto ca = idx_coeffs(a), cb = idx_coeffs(b);
    for (int i = 0; i < deg_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return coeffs_idx(ca);
  }
  int64_t slow_mul(int64_t a, int64_t b) const {
    auto prod = detail::pmul(detail::ptrim(idx_coeffs(a)), detail::ptrim(idx_coeffs(b)), p_);
    auto red = detail::pmod(std::move(prod), modulus_, p_);
    red.resize(deg_, 0);
    return coeffs_idx(red);
  }

  void init_tables() {
    if (kind_ == FieldKind::Prime) return;  // direct mod arithmetic
    if (q_ > kTableCap) return;
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    neg_table_.resize(q_);
    inv_table_.resize(q_);
    for (int64_t a = 0; a < q_; ++a) {
      auto ca = idx_coeffs(a);
      std::vector<int64_t> cn(ca);
      for (auto& x : cn) x = (p_ - x) % p_;
      neg_table_[a] = coeffs_idx(cn);
      for (int64_t b = 0; b < q_; ++b) {
        auto cb = idx_coeffs(b);
        std::vector<int64_t> cs(deg_);
        for (int i = 0; i < deg_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_table_[a * q_ + b] = coeffs_idx(cs);
        mul_table_[a * q_ + b] = slow_mul(a, b);
      }
    }
    for (int64_t a = 1; a < q_; ++a) {
      for (int64_t b = 1; b < q_; ++b) {
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
      }
    }
  }

  FieldKind kind_;
  int64_t p_ = 0;
  int deg_ = 0;
  int64_t q_ = 0;
  std::vector<int64_t> modulus_;
  mpz_class d_ = 0;
  std::vector<int32_t> add_table_, mul_table_;
  std::vector<int32_t> neg_table_, inv_table_;

 public:
  const int32_t* raw_add_table() const { return add_table_.empty() ? nullptr : add_table_.data(); }
  const int32_t* raw_mul_table() const { return mul_table_.empty() ? nullptr : mul_table_.data(); }
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  require(same_field(a, b), Errc::MixedContext,
          "operands live in different fields: " + a->descriptor() + " vs " + b->descriptor());
}

class Scalar {
 public:
  struct CharZero {
    mpq_class a, b;
    bool operator==(const CharZero& o) const { return a == o.a && b == o.b; }
  };

  Scalar() = default;
  Scalar(FieldPtr f, int64_t idx) : f_(std::move(f)), v_(idx) {}
  Scalar(FieldPtr f, mpq_class a, mpq_class b)
      : f_(std::move(f)), v_(CharZero{std::move(a), std::move(b)}) {}

  const FieldPtr& field() const { return f_; }
  int64_t index() const { return std::get<int64_t>(v_); }
  const mpq_class& rat() const { return std::get<CharZero>(v_).a; }
  const mpq_class& quad_part() const { return std::get<CharZero>(v_).b; }

  bool is_zero() const {
    if (f_->is_finite()) return index() == 0;
    const auto& z = std::get<CharZero>(v_);
    return z.a == 0 && z.b == 0;
  }
  bool is_one() const {
    if (f_->is_finite()) return index() == 1;
    const auto& z = std::get<CharZero>(v_);
    return z.a == 1 && z.b == 0;
  }

  bool operator==(const Scalar& o) const {
    if (!same_field(f_, o.f_)) return false;
    if (f_->is_finite()) return index() == o.index();
    return std::get<CharZero>(v_) == std::get<CharZero>(o.v_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const {
    require_same_field(f_, o.f_);
    if (f_->is_finite()) return Scalar(f_, f_->add_idx(index(), o.index()));
    return Scalar(f_, rat() + o.rat(), quad_part() + o.quad_part());
  }
  Scalar operator-(const Scalar& o) const {
    require_same_field(f_, o.f_);
    if (f_->is_finite()) return Scalar(f_, f_->sub_idx(index(), o.index()));
    return Scalar(f_, rat() - o.rat(), quad_part() - o.quad_part());
  }
  Scalar operator-() const {
    if (f_->is_finite()) return Scalar(f_, f_->neg_idx(index()));
    return Scalar(f_, -rat(), -quad_part());
  }
  Scalar operator*(const Scalar& o) const {
    require_same_field(f_, o.f_);
    if (f_->is_finite()) return Scalar(f_, f_->mul_idx(index(), o.index()));
    if (f_->kind() == FieldKind::Rationals) return Scalar(f_, rat() * o.rat(), 0);
    // (a + b r)(c + e r) = ac + be d + (ae + bc) r
    mpq_class d(f_->quad_d());
    return Scalar(f_, rat() * o.rat() + quad_part() * o.quad_part() * d,
                  rat() * o.quad_part() + quad_part() * o.rat());
  }
  Scalar inverse() const {
    require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
    if (f_->is_finite()) return Scalar(f_, f_->inv_idx(index()));
    if (f_->kind() == FieldKind::Rationals) return Scalar(f_, 1 / rat(), 0);
    mpq_class d(f_->quad_d());
    mpq_class n = rat() * rat() - quad_part() * quad_part() * d;  // nonzero: d is not a square in Q
    return Scalar(f_, rat() / n, -quad_part() / n);
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = f_->one();
    Scalar base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // a^(p^m); positive characteristic only.
  Scalar frobenius(int m) const {
    require(f_->is_finite(), Errc::CharacteristicZero, "frobenius needs positive characteristic");
    require(m >= 0, Errc::InvalidArgument, "frobenius power must be nonnegative");
    int64_t e = 1;
    for (int i = 0; i < m; ++i) e *= f_->p();
    return Scalar(f_, f_->pow_idx(index(), e));
  }

  // True when the element lies in the prime subfield (finite) or in Q (quadratic).
  bool in_base_subfield() const {
    if (f_->kind() == FieldKind::Prime || f_->kind() == FieldKind::Rationals) return true;
    if (f_->kind() == FieldKind::Extension) return index() < f_->p();
    return quad_part() == 0;
  }

  std::string str() const {
    switch (f_->kind()) {
      case FieldKind::Rationals:
        return rat().get_str();
      case FieldKind::Prime:
        return std::to_string(index());
      case FieldKind::Extension: {
        auto c = f_->idx_coeffs(index());
        std::string s = "[";
        for (size_t i = 0; i < c.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(c[i]);
        }
        return s + "]";
      }
      case FieldKind::QuadRat:
        return rat().get_str() + "+" + quad_part().get_str() + "*r";
    }
    return "?";
  }

 private:
  FieldPtr f_;
  std::variant<int64_t, CharZero> v_ = int64_t{0};
};

inline Scalar Field::zero() const {
  auto self = shared_from_this();
  if (is_finite()) return Scalar(self, 0);
  return Scalar(self, mpq_class(0), mpq_class(0));
}
inline Scalar Field::one() const { return from_int(1); }
inline Scalar Field::from_int(int64_t v) const {
  auto self = shared_from_this();
  if (is_finite()) return Scalar(self, ((v % p_) + p_) % p_);
  return Scalar(self, mpq_class(static_cast<long>(v)), mpq_class(0));
}
inline Scalar Field::from_mpq(const mpq_class& a) const {
  auto self = shared_from_this();
  if (!is_finite()) return Scalar(self, a, mpq_class(0));
  // reduce a rational mod p; denominator must be invertible
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pz(static_cast<long>(p_));
  mpz_class nr = num % pz, dr = den % pz;
  if (nr < 0) nr += pz;
  if (dr < 0) dr += pz;
  require(dr != 0, Errc::DivisionByZero, "denominator divisible by characteristic");
  int64_t n = nr.get_si(), d = dr.get_si();
  return Scalar(self, mul_idx(n, detail::mod_inverse(d, p_)));
}
inline Scalar Field::from_mpq_pair(const mpq_class& a, const mpq_class& b) const {
  require(kind_ == FieldKind::QuadRat || b == 0, Errc::InvalidArgument, "field has no quadratic part");
  auto self = shared_from_this();
  if (kind_ == FieldKind::QuadRat) return Scalar(self, a, b);
  return from_mpq(a);
}
inline Scalar Field::element_at(int64_t idx) const {
  require(is_finite(), Errc::CharacteristicZero, "element_at needs a finite field");
  require(idx >= 0 && idx < q_, Errc::IndexOutOfRange, "element index out of range");
  return Scalar(shared_from_this(), idx);
}

// --- text encodings ---

namespace detail {

inline mpq_class parse_mpq(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      fail(Errc::ParseError, "bad rational literal: " + s);
  mpq_class v;
  try {
    v = mpq_class(s, 10);
  } catch (...) {
    fail(Errc::ParseError, "bad rational literal: " + s);
  }
  if (v.get_den() == 0) fail(Errc::ParseError, "zero denominator: " + s);
  v.canonicalize();
  return v;
}

inline int64_t parse_i64(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(Errc::ParseError, "bad integer literal: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::ParseError, "bad integer literal: " + s);
  }
}

inline std::vector<int64_t> parse_int_list(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(Errc::ParseError, "expected [..] list: " + s);
  std::vector<int64_t> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_i64(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Scalar scalar_from_string(const FieldPtr& f, const std::string& s) {
  switch (f->kind()) {
    case FieldKind::Rationals:
      return f->from_mpq(detail::parse_mpq(s));
    case FieldKind::Prime: {
      int64_t v = detail::parse_i64(s);
      return f->from_int(v);
    }
    case FieldKind::Extension: {
      auto c = detail::parse_int_list(s);
      require(static_cast<int>(c.size()) <= f->degree(), Errc::ParseError,
              "too many coefficients for " + f->descriptor());
      return f->element_at(f->coeffs_idx(c));
    }
    case FieldKind::QuadRat: {
      std::string body = s;
      mpq_class b(0);
      if (body.size() > 2 && body.substr(body.size() - 2) == "*r") {
        body = body.substr(0, body.size() - 2);
        size_t plus = body.rfind('+');
        require(plus != std::string::npos && plus > 0, Errc::ParseError,
                "expected a+b*r form: " + s);
        b = detail::parse_mpq(body.substr(plus + 1));
        body = body.substr(0, plus);
      }
      return f->from_mpq_pair(detail::parse_mpq(body), b);
    }
  }
  fail(Errc::ParseError, "unknown field kind");
}

inline FieldPtr parse_field(const std::string& desc) {
  if (desc == "Q") return Field::rationals();
  if (desc.rfind("Q(sqrt(", 0) == 0 && desc.size() > 9 && desc.substr(desc.size() - 2) == "))") {
    std::string num = desc.substr(7, desc.size() - 9);
    mpz_class d;
    if (d.set_str(num, 10) != 0) fail(Errc::ParseError, "bad quadratic descriptor: " + desc);
    return Field::quadratic(d);
  }
  if (desc.rfind("GF(", 0) == 0 && desc.back() == ')') {
    std::string body = desc.substr(3, desc.size() - 4);
    std::string mod_str;
    size_t semi = body.find(';');
    if (semi != std::string::npos) {
      mod_str = body.substr(semi + 1);
      body = body.substr(0, semi);
      if (mod_str.rfind("modulus=", 0) != 0) fail(Errc::ParseError, "bad field descriptor: " + desc);
      mod_str = mod_str.substr(8);
    }
    size_t caret = body.find('^');
    if (caret == std::string::npos) {
      require(mod_str.empty(), Errc::ParseError, "prime field takes no modulus: " + desc);
      return Field::prime(detail::parse_i64(body));
    }
    int64_t p = detail::parse_i64(body.substr(0, caret));
    int64_t n = detail::parse_i64(body.substr(caret + 1));
    std::vector<int64_t> modulus;
    if (!mod_str.empty()) modulus = detail::parse_int_list(mod_str);
    return Field::extension(p, static_cast<int>(n), std::move(modulus));
  }
  fail(Errc::ParseError, "unknown field descriptor: " + desc);
}

}  // namespace goodrep
