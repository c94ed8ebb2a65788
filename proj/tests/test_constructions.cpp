// Builtin constructions: SL2 and Borel groups, upper-triangular left
// multiplication, symmetric powers, char-p invariant subspaces, NT modules.
#include <catch2/catch_amalgamated.hpp>

#include "goodrep/constructions.hpp"
#include "goodrep/ntmodule.hpp"

using namespace goodrep;

TEST_CASE("SL2(GF(q)) has order q(q-1)(q+1)", "[constructions]") {
  CHECK(sl2_group(Field::prime(2)).order() == 6);
  CHECK(sl2_group(Field::prime(3)).order() == 24);
  CHECK(sl2_group(Field::prime(5)).order() == 120);
  CHECK(sl2_group(Field::extension(3, 2)).order() == 720);
}

TEST_CASE("upper-triangular left multiplication over GF(3)", "[constructions]") {
  auto F3 = Field::prime(3);
  auto ut = upper_triangular_rep(F3, 2);
  CHECK(ut.rep.dim() == 3);
  CHECK(ut.rep.group().order() == 12);
  REQUIRE(ut.family.size() == 2);
  for (const auto& L : ut.family) {
    CHECK(L.dim() == 2);
    CHECK(ut.rep.is_invariant(L));
  }

  auto fr = check_set_free(GoodnessSpec(ut.rep, ut.family), FreeMode::Exhaustive());
  CHECK(fr.status == "verified");
  CHECK(fr.tested == 12);  // qualified vectors off the union of the two L_i
  auto frk = check_set_free_kernels(GoodnessSpec(ut.rep, ut.family));
  CHECK(frk.status == "verified");

  // n=1 degenerates to scalars on a line with the zero subspace excluded
  auto ut1 = upper_triangular_rep(F3, 1);
  CHECK(ut1.rep.dim() == 1);
  REQUIRE(ut1.family.size() == 1);
  CHECK(ut1.family[0].is_zero());
  auto fr1 = check_set_free(GoodnessSpec(ut1.rep, ut1.family), FreeMode::Exhaustive());
  CHECK(fr1.status == "verified");
  CHECK(fr1.tested == 2);

  // evaluator path matches the enumerated pair list
  const auto& elems = ut.rep.group().enumerate();
  for (size_t i = 0; i < elems.size(); ++i)
    CHECK(ut.rep.image_of(elems[i]) == ut.rep.enumerate_pairs()[i].image);
}

TEST_CASE("symmetric powers are homomorphic", "[constructions]") {
  auto F2 = Field::prime(2);
  auto F3 = Field::prime(3);
  auto F5 = Field::prime(5);

  Matrix J = Matrix::from_ints(F5, 2, 2, {0, 4, 1, 0});
  CHECK(sym_power_image(F5, 1, J) == J);
  CHECK(sym_power_image(F5, 0, J).is_identity());

  // enumerate_pairs runs the internal consistency check over the whole group
  CHECK(sym_power(F2, 2).rep.enumerate_pairs().size() == 6);
  CHECK(sym_power(F3, 3).rep.enumerate_pairs().size() == 24);

  // explicit check of rho(gh) = rho(g) rho(h) on all pairs of SL2(GF(3))
  SymPowerRep v23 = sym_power(F3, 2);
  const auto& els = v23.rep.group().enumerate();
  for (const auto& g : els)
    for (const auto& h : els)
      CHECK(sym_power_image(F3, 2, g * h) ==
            sym_power_image(F3, 2, g) * sym_power_image(F3, 2, h));
}

TEST_CASE("torus weights on V2 over GF(7)", "[constructions]") {
  auto F7 = Field::prime(7);
  auto v27 = sym_power(F7, 2);
  Matrix t35 = Matrix::from_ints(F7, 2, 2, {3, 0, 0, 5});
  auto wd = v27.rep.weight_decompose(t35, F7->from_int(3), {-2, 0, 2});
  REQUIRE(wd.size() == 3);
  CHECK(wd[0].first == -2);
  CHECK(wd[0].second.contains(Vec{F7->one(), F7->zero(), F7->zero()}));  // x^2
  CHECK(wd[1].first == 0);
  CHECK(wd[1].second.contains(Vec{F7->zero(), F7->one(), F7->zero()}));  // xy
  CHECK(wd[2].first == 2);
  CHECK(wd[2].second.contains(Vec{F7->zero(), F7->zero(), F7->one()}));  // y^2

  // -I acts trivially on even symmetric powers
  Matrix h2 = Matrix::from_ints(Field::prime(3), 2, 2, {2, 0, 0, 2});
  CHECK(sym_power_image(Field::prime(3), 2, h2).is_identity());
}

TEST_CASE("char-p subspace L_d exists exactly when d = 2p-2", "[constructions]") {
  CHECK(char_p_subspace(Field::prime(3), 4).dim() == 4);
  CHECK(char_p_subspace(Field::extension(3, 2), 4).dim() == 4);
  CHECK(char_p_subspace(Field::prime(2), 2).dim() == 2);
  CHECK(char_p_subspace(Field::prime(5), 8).dim() == 8);
  CHECK_THROWS_MATCHES(
      char_p_subspace(Field::prime(5), 6), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::WrongDegree; }));

  // control: killing the xy term of V2 over GF(5) is not invariant,
  // so invariance of L_d is a property of the characteristic, not of
  // arbitrary coordinate subspaces
  auto F5 = Field::prime(5);
  std::vector<Vec> rows = {{F5->one(), F5->zero(), F5->zero()},
                           {F5->zero(), F5->zero(), F5->one()}};
  CHECK_FALSE(sym_power(F5, 2).rep.is_invariant(Subspace::span_rows(F5, 3, rows)));
}

TEST_CASE("swap action on forms is an involution", "[constructions]") {
  auto F5 = Field::prime(5);
  Matrix s4 = sym_power_image(F5, 4, swap_matrix(F5));
  CHECK((s4 * s4).is_identity());
}

TEST_CASE("NT modules from block data", "[ntmodule]") {
  auto F7 = Field::prime(7);

  auto w1 = nt_module_from_blocks(F7, {{1, 1}}, 0, 0);
  CHECK(w1.dim == 2);
  CHECK(w1.weights == std::vector<int64_t>({-1, 1}));
  CHECK(w1.jmat.at(0, 1) == -F7->one());  // J x = y, J y = -x for odd weight
  CHECK(w1.jmat.at(1, 0) == F7->one());

  auto triv = nt_module_from_blocks(F7, {}, 1, 0);
  CHECK(triv.dim == 1);
  CHECK(triv.jmat.at(0, 0).is_one());

  auto five = nt_module_from_blocks(F7, {{1, 1}, {2, 1}}, 0, 1);
  CHECK(five.dim == 5);
  CHECK_NOTHROW(five.validate());

  CHECK_THROWS_MATCHES(
      nt_module_from_blocks(F7, {{0, 1}}, 0, 0), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::NonpositiveWeight; }));

  // N(T)(GF(7)) has order 2(q-1) and acts homomorphically
  auto ntrep = nt_representation(five);
  CHECK(ntrep.group().order() == 12);
  CHECK(ntrep.enumerate_pairs().size() == 12);

  // H(t) acts on W1 as diag(t^{-1}, t)
  Scalar t = F7->from_int(3);
  Matrix ht = w1.ht_matrix(t);
  CHECK(ht.at(0, 0) == t.inverse());
  CHECK(ht.at(1, 1) == t);
  CHECK(ht.at(0, 1).is_zero());
}
