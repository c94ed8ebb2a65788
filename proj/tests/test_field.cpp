// Field tower arithmetic: prime fields, extensions with explicit moduli,
// quadratic rationals, Galois actions, and the scalar text codec.
#include <catch2/catch_amalgamated.hpp>

#include "goodrep/field.hpp"
#include "goodrep/galois.hpp"

using namespace goodrep;

TEST_CASE("prime field arithmetic", "[field]") {
  auto gf5 = Field::prime(5);
  auto two = gf5->from_int(2), three = gf5->from_int(3);
  CHECK((two / three) == gf5->from_int(4));
  CHECK((two + three).is_zero());
  CHECK(two.pow(4).is_one());  // Fermat
  CHECK(gf5->order() == 5);
  CHECK(gf5->characteristic() == 5);

  // every nonzero element has a working inverse
  for (int64_t i = 1; i < 5; ++i) {
    Scalar s = gf5->element_at(i);
    CHECK((s * s.inverse()).is_one());
  }
}

TEST_CASE("GF(9) with modulus x^2+2x+2 has alpha as generator", "[field]") {
  auto gf9 = Field::extension(3, 2, {2, 2, 1});
  Scalar a = gf9->element_at(3);  // alpha
  Scalar one = gf9->one(), two = gf9->from_int(2);

  CHECK(a * a == a + one);                  // alpha^2 = alpha + 1
  CHECK(a.pow(3) == two * a + one);         // alpha^3 = 2alpha + 1
  CHECK(a.pow(6) == two * a + two);         // alpha^6 = 2alpha + 2
  CHECK(a.pow(8).is_one());
  // alpha generates the multiplicative group: powers 1..7 all differ from 1
  for (int e = 1; e < 8; ++e) CHECK_FALSE(a.pow(e).is_one());
  CHECK(gf9->multiplicative_generator() == 3);

  CHECK(a.frobenius(1) == a.pow(3));
  CHECK(a.frobenius(2) == a);  // full power of Frobenius is identity
}

TEST_CASE("GF(4) default modulus is the Conway choice x^2+x+1", "[field]") {
  auto gf4 = Field::extension(2, 2);
  Scalar b = gf4->element_at(2);
  CHECK(b * b == b + gf4->one());
  CHECK(b.pow(3).is_one());
}

TEST_CASE("finite Galois extension group acts by Frobenius powers", "[field][galois]") {
  auto gf9 = Field::extension(3, 2, {2, 2, 1});
  auto ext = GaloisExtension::finite(gf9);
  Scalar a = gf9->element_at(3);
  CHECK(ext.degree() == 2);
  CHECK(ext.apply(1, a) == a);         // sigma_1 = id
  CHECK(ext.apply(2, a) == a.pow(3));  // sigma_2 = Frobenius
  // group law: sigma_2 composed with itself is sigma_1
  CHECK(ext.compose(2, 2) == 1);
  CHECK(ext.inverse_of(2) == 2);
  // fixed field = base: sigma fixes exactly the GF(3) constants
  for (int64_t i = 0; i < 9; ++i) {
    Scalar s = gf9->element_at(i);
    CHECK((ext.apply(2, s) == s) == s.in_base_subfield());
  }
}

TEST_CASE("quadratic extension Q(sqrt 2) conjugation", "[field][galois]") {
  auto ext = GaloisExtension::quadratic(2);
  auto qs = ext.top();
  Scalar r = ext.alpha();
  CHECK(qs->quad_d() == 2);
  CHECK(r * r == qs->from_int(2));
  Scalar z = qs->from_mpq_pair(1, 2);  // 1 + 2r
  CHECK(ext.apply(2, z) == qs->from_int(1) - qs->from_int(2) * r);
  CHECK(ext.apply(2, ext.apply(2, z)) == z);
  // norm lands in the base field
  Scalar nrm = z * ext.apply(2, z);
  CHECK(nrm.in_base_subfield());
  CHECK(nrm == qs->from_int(1) - qs->from_int(8));
}

TEST_CASE("scalar text codec round-trips every field kind", "[field][io]") {
  auto q = Field::rationals();
  auto f7 = Field::prime(7);
  auto f9 = Field::extension(3, 2, {2, 2, 1});
  auto qs2 = GaloisExtension::quadratic(2).top();

  for (const char* txt : {"0", "1", "-5/3", "22/7"}) {
    Scalar s = scalar_from_string(q, txt);
    CHECK(scalar_from_string(q, s.str()) == s);
  }
  for (int64_t i = 0; i < 7; ++i) {
    Scalar s = f7->element_at(i);
    CHECK(scalar_from_string(f7, s.str()) == s);
  }
  for (int64_t i = 0; i < 9; ++i) {
    Scalar s = f9->element_at(i);
    CHECK(scalar_from_string(f9, s.str()) == s);
  }
  Scalar mixed = scalar_from_string(qs2, "1/2+-3/4*r");
  CHECK(mixed.str() == "1/2+-3/4*r");
  CHECK(scalar_from_string(qs2, mixed.str()) == mixed);
}

TEST_CASE("field descriptors parse back to the same field", "[field][io]") {
  auto gf9 = Field::extension(3, 2, {2, 2, 1});
  auto f = parse_field("GF(3^2;modulus=[2,2,1])");
  CHECK(same_field(f, gf9));
  CHECK(f->descriptor() == gf9->descriptor());

  CHECK(same_field(parse_field("Q"), Field::rationals()));
  CHECK(same_field(parse_field("GF(7)"), Field::prime(7)));
  CHECK(same_field(parse_field("Q(sqrt(5))"), GaloisExtension::quadratic(5).top()));
  // default-modulus descriptor round-trip
  auto gf4 = Field::extension(2, 2);
  CHECK(same_field(parse_field(gf4->descriptor()), gf4));

  CHECK_THROWS_AS(parse_field("GF(6)"), Error);
  CHECK_THROWS_AS(parse_field("nonsense"), Error);
}
