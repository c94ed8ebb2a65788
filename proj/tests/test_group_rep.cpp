// Group closure, representations, invariance, stabilizers, weight spaces,
// and the set-theoretic freeness checkers.
#include <catch2/catch_amalgamated.hpp>

#include "goodrep/group.hpp"
#include "goodrep/rep.hpp"

using namespace goodrep;

TEST_CASE("closure enumeration of small groups", "[group]") {
  auto Q = Field::rationals();
  auto F3 = Field::prime(3);

  MatrixGroup triv(Q, 2, {Matrix::identity(Q, 2)});
  CHECK(triv.order() == 1);

  Matrix swp = Matrix::from_ints(Q, 2, 2, {0, 1, 1, 0});
  MatrixGroup sw(Q, 2, {swp});
  CHECK(sw.order() == 2);

  // B2(GF(3)) from the standard generators: 12 elements, identity first
  Matrix d1 = Matrix::from_ints(F3, 2, 2, {2, 0, 0, 1});
  Matrix d2 = Matrix::from_ints(F3, 2, 2, {1, 0, 0, 2});
  Matrix e01 = Matrix::from_ints(F3, 2, 2, {1, 1, 0, 1});
  MatrixGroup b2(F3, 2, {d1, d2, e01});
  CHECK(b2.order() == 12);
  CHECK(b2.enumerate()[0].is_identity());
  // closed under products
  const auto& els = b2.enumerate();
  for (const auto& g : els) CHECK(b2.contains(g * els[1]));
}

TEST_CASE("invariance under the swap group", "[rep]") {
  auto F3 = Field::prime(3);
  Matrix swp3 = Matrix::from_ints(F3, 2, 2, {0, 1, 1, 0});
  Representation swrep = Representation::tautological(MatrixGroup(F3, 2, {swp3}));
  Subspace e1 = Subspace::span_rows(F3, 2, {{F3->one(), F3->zero()}});
  Subspace diag = Subspace::span_rows(F3, 2, {{F3->one(), F3->one()}});

  CHECK_FALSE(swrep.is_invariant(e1));
  CHECK(swrep.is_invariant(diag));
  CHECK(swrep.is_invariant(Subspace::full(F3, 2)));
}

TEST_CASE("stabilizers and transporters by enumeration", "[rep]") {
  auto F3 = Field::prime(3);
  Matrix swp3 = Matrix::from_ints(F3, 2, 2, {0, 1, 1, 0});
  Representation swrep = Representation::tautological(MatrixGroup(F3, 2, {swp3}));
  Vec ve1{F3->one(), F3->zero()}, ve2{F3->zero(), F3->one()};

  auto st = swrep.stabilizer(ve1);
  REQUIRE(st.size() == 1);
  CHECK(st[0].is_identity());

  auto tr = swrep.transporter(ve1, ve2);
  REQUIRE(tr.size() == 1);
  CHECK(tr[0] == swp3);

  // the zero vector is stabilized by everything
  CHECK(swrep.stabilizer(Vec{F3->zero(), F3->zero()}).size() == 2);

  // B2 standard action: stabilizer of e1 is the subgroup with a11 = 1
  Matrix d1 = Matrix::from_ints(F3, 2, 2, {2, 0, 0, 1});
  Matrix d2 = Matrix::from_ints(F3, 2, 2, {1, 0, 0, 2});
  Matrix e01 = Matrix::from_ints(F3, 2, 2, {1, 1, 0, 1});
  Representation b2std =
      Representation::tautological(MatrixGroup(F3, 2, {d1, d2, e01}));
  CHECK(b2std.stabilizer(ve1).size() == 6);
}

TEST_CASE("fixed subspaces and generated submodules", "[rep]") {
  auto F3 = Field::prime(3);
  Matrix e01 = Matrix::from_ints(F3, 2, 2, {1, 1, 0, 1});
  Representation b2u = Representation::tautological(MatrixGroup(F3, 2, {e01}));
  Vec ve1{F3->one(), F3->zero()};
  Subspace fixu = b2u.fixed_subspace(std::vector<Matrix>{e01});
  CHECK(fixu.dim() == 1);
  CHECK(fixu.contains(ve1));

  Matrix swp3 = Matrix::from_ints(F3, 2, 2, {0, 1, 1, 0});
  Representation swrep = Representation::tautological(MatrixGroup(F3, 2, {swp3}));
  Subspace e1 = Subspace::span_rows(F3, 2, {ve1});
  Subspace diag = Subspace::span_rows(F3, 2, {{F3->one(), F3->one()}});
  CHECK(swrep.generated_submodule(e1).is_full());
  CHECK(swrep.generated_submodule(diag) == diag);
  CHECK(swrep.generated_submodule(Subspace::zero(F3, 2)).is_zero());
}

TEST_CASE("weight decomposition against a split torus element", "[rep]") {
  auto F7 = Field::prime(7);
  Matrix t35 = Matrix::from_ints(F7, 2, 2, {3, 0, 0, 5});
  Representation dstd = Representation::tautological(MatrixGroup(F7, 2, {t35}));
  auto wd = dstd.weight_decompose(t35, F7->from_int(3), {-1, 1});
  REQUIRE(wd.size() == 2);
  CHECK(wd[0].first == -1);
  CHECK(wd[0].second.contains(Vec{F7->zero(), F7->one()}));
  CHECK(wd[1].first == 1);
  CHECK(wd[1].second.contains(Vec{F7->one(), F7->zero()}));

  // t has order 6, so weights 0 and 6 collide: rejected, not silently merged
  CHECK_THROWS_MATCHES(
      dstd.weight_decompose(t35, F7->from_int(3), {0, 6}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::AmbiguousWeights; }));
}

TEST_CASE("set-freeness checkers agree on the swap example", "[freeness]") {
  auto F3 = Field::prime(3);
  Matrix swp3 = Matrix::from_ints(F3, 2, 2, {0, 1, 1, 0});
  Representation swrep = Representation::tautological(MatrixGroup(F3, 2, {swp3}));
  Subspace diag = Subspace::span_rows(F3, 2, {{F3->one(), F3->one()}});

  GoodnessSpec gs(swrep, {diag});
  auto rep1 = check_set_free(gs, FreeMode::Exhaustive());
  CHECK(rep1.status == "verified");
  CHECK(rep1.tested == 6);  // 9 vectors minus the 3 on the diagonal

  auto rep1k = check_set_free_kernels(gs);
  CHECK(rep1k.status == "verified");
  CHECK(rep1k.tested == 2);  // only the non-identity element contributes

  // empty family: u = 0 survives and the swap fixes it
  GoodnessSpec gs0(swrep, {});
  auto rep0 = check_set_free(gs0, FreeMode::Exhaustive());
  REQUIRE(rep0.status == "refuted");
  REQUIRE(rep0.witness.has_value());
  CHECK(vec_is_zero(rep0.witness->u));
  CHECK(rep0.witness->g == swp3);

  // sampling produces evidence, never an unearned "verified"
  auto reps = check_set_free(gs, FreeMode::Sample(42, 200));
  CHECK(reps.status == "evidence");
  CHECK(reps.tested > 0);
  CHECK(reps.seed.has_value());
}

TEST_CASE("freeness rejects a family covering the whole space", "[freeness]") {
  auto F2 = Field::prime(2);
  Representation trep =
      Representation::tautological(MatrixGroup(F2, 2, {Matrix::identity(F2, 2)}));
  std::vector<Subspace> cover = {
      Subspace::span_rows(F2, 2, {{F2->one(), F2->zero()}}),
      Subspace::span_rows(F2, 2, {{F2->zero(), F2->one()}}),
      Subspace::span_rows(F2, 2, {{F2->one(), F2->one()}})};
  CHECK_THROWS_MATCHES(
      check_set_free(GoodnessSpec(trep, cover), FreeMode::Exhaustive()), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::EmptyU; }));
}

TEST_CASE("homomorphism property is validated during enumeration", "[rep]") {
  auto Q = Field::rationals();
  Matrix swp = Matrix::from_ints(Q, 2, 2, {0, 1, 1, 0});
  MatrixGroup sw(Q, 2, {swp});
  Representation bad(sw, 2, {Matrix::from_ints(Q, 2, 2, {2, 0, 0, 1})});
  CHECK_THROWS_MATCHES(
      bad.enumerate_pairs(), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == Errc::HomomorphismViolation;
      }));
}

TEST_CASE("direct sum stacks blocks", "[rep]") {
  auto F3 = Field::prime(3);
  Matrix swp3 = Matrix::from_ints(F3, 2, 2, {0, 1, 1, 0});
  Representation swrep = Representation::tautological(MatrixGroup(F3, 2, {swp3}));
  auto ds = direct_sum(swrep, swrep);
  CHECK(ds.dim() == 4);
  CHECK(ds.images()[0].at(2, 3) == F3->one());
  CHECK(ds.images()[0].at(0, 2).is_zero());
}
