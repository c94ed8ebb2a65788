// Coinduced modules: transversals, monomial-block structure, section values,
// the combined goodness check, and its failure modes.
#include <catch2/catch_amalgamated.hpp>

#include "goodrep/coinduce.hpp"
#include "goodrep/constructions.hpp"

using namespace goodrep;

namespace {
struct RunningExample {
  FieldPtr f3 = parse_field("GF(3)");
  MatrixGroup g = bn_group(f3, 2);
  MatrixGroup h;
  CoinducedModule cm;
  Subspace m1;

  static MatrixGroup make_h(const FieldPtr& f3) {
    Matrix unip = Matrix::identity(f3, 2);
    unip.at(0, 1) = f3->one();
    return MatrixGroup(f3, 2, {unip});
  }

  RunningExample()
      : h(make_h(f3)),
        cm(build_coinduced(g, h, Representation::tautological(h))),
        m1(Subspace::span_rows(f3, 2, {{f3->one(), f3->zero()}})) {}

  // V: the diagonal-part action of G on the plane, with coordinate lines
  Representation vrep() const {
    std::vector<Matrix> vimages;
    for (const auto& gen : g.generators()) {
      Matrix d(f3, 2, 2);
      d.at(0, 0) = gen.at(0, 0);
      d.at(1, 1) = gen.at(1, 1);
      vimages.push_back(d);
    }
    return Representation(g, 2, vimages);
  }

  std::vector<Subspace> v_family() const {
    return {Subspace::span_rows(f3, 2, {{f3->one(), f3->zero()}}),
            Subspace::span_rows(f3, 2, {{f3->zero(), f3->one()}})};
  }
};
}  // namespace

TEST_CASE("coinduced module of the unipotent radical", "[coinduce]") {
  RunningExample ex;
  CHECK(ex.g.order() == 12);
  CHECK(ex.h.order() == 3);
  CHECK(ex.cm.transversal.size() == 4);
  CHECK(ex.cm.gamma.dim() == 8);
  CHECK(ex.cm.transversal[0].is_identity());

  // monomial-block structure: one nonzero 2x2 block per block row
  for (const auto& img : ex.cm.gamma.images()) {
    for (int j = 0; j < 4; ++j) {
      int nonzero_blocks = 0;
      for (int i = 0; i < 4; ++i) {
        bool any = false;
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            any = any || !img.at(j * 2 + r, i * 2 + c).is_zero();
        nonzero_blocks += any ? 1 : 0;
      }
      CHECK(nonzero_blocks == 1);
    }
  }
}

TEST_CASE("L subspaces scale with the transversal", "[coinduce]") {
  RunningExample ex;
  Subspace w_full = Subspace::full(ex.f3, 2), w_zero = Subspace::zero(ex.f3, 2);
  auto ls = build_l_subspaces(ex.cm, {w_full, w_zero, ex.m1});
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].is_full());
  CHECK(ls[1].is_zero());
  CHECK(ls[2].dim() == 4);  // [G:H] * dim M1
}

TEST_CASE("section values at group elements stay H-coherent", "[coinduce]") {
  RunningExample ex;
  Vec gv(8, ex.f3->zero());
  for (int blk = 0; blk < 4; ++blk) gv[static_cast<size_t>(blk * 2)] = ex.f3->one();
  for (const auto& x : ex.g.enumerate()) {
    Vec val = value_at(ex.cm, gv, x);
    CHECK(val[1].is_zero());  // values stay inside M1, which H fixes pointwise
  }
}

TEST_CASE("combined goodness verifies on the running example", "[coinduce]") {
  RunningExample ex;
  CombinedGoodness cg = build_combined(ex.vrep(), ex.v_family(), ex.cm, {ex.m1});
  FreenessReport rep = verify_combined(cg);
  CHECK(rep.status == "verified");
  CHECK(rep.tested > 0);

  // dropping M1 must refute with a concrete witness
  CombinedGoodness bad = build_combined(ex.vrep(), ex.v_family(), ex.cm, {});
  FreenessReport rep2 = verify_combined(bad);
  CHECK(rep2.status == "refuted");
  REQUIRE(rep2.witness.has_value());
  // the witness is genuine: some non-identity element fixes the vector
  CHECK_FALSE(rep2.witness->g.is_identity());
}

TEST_CASE("combined goodness failure modes", "[coinduce]") {
  RunningExample ex;

  // M = {W}: the union covers everything
  Subspace w_full = Subspace::full(ex.f3, 2);
  CHECK_THROWS_MATCHES(
      verify_combined(build_combined(ex.vrep(), ex.v_family(), ex.cm, {w_full})),
      Error, Catch::Matchers::Predicate<Error>(
                 [](const Error& e) { return e.code() == Errc::EmptyU; }));

  // no V_j declared: v = 0 has stabilizer G, not H
  CHECK_THROWS_MATCHES(
      verify_combined(build_combined(ex.vrep(), {}, ex.cm, {ex.m1})), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::HypothesisFailed; }));

  // non-normal H is rejected up front
  Matrix d21(ex.f3, 2, 2);
  d21.at(0, 0) = ex.f3->from_int(2);
  d21.at(1, 1) = ex.f3->one();
  MatrixGroup hbad(ex.f3, 2, {d21});
  CHECK_THROWS_MATCHES(
      build_coinduced(ex.g, hbad, Representation::tautological(hbad)), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::NotNormal; }));
}

TEST_CASE("degenerate subgroup choices", "[coinduce]") {
  RunningExample ex;

  // H = G: Gamma is W itself with the same action
  CoinducedModule whole =
      build_coinduced(ex.g, ex.g, Representation::tautological(ex.g));
  CHECK(whole.gamma.dim() == 2);
  CHECK(whole.transversal.size() == 1);
  for (size_t i = 0; i < ex.g.generators().size(); ++i)
    CHECK(whole.gamma.images()[i] == ex.g.generators()[i]);

  // trivial H with the trivial module: the regular permutation representation
  MatrixGroup triv = MatrixGroup::trivial(ex.f3, 2);
  Representation wtriv(triv, 1, {});
  CoinducedModule reg = build_coinduced(ex.g, triv, wtriv);
  CHECK(reg.gamma.dim() == 12);
  for (const auto& img : reg.gamma.images()) {
    for (int r = 0; r < 12; ++r) {
      int nz = 0;
      for (int c = 0; c < 12; ++c)
        if (!img.at(r, c).is_zero()) {
          CHECK(img.at(r, c).is_one());
          ++nz;
        }
      CHECK(nz == 1);
    }
  }
}

TEST_CASE("value lemma holds on sampled sections", "[coinduce]") {
  RunningExample ex;
  ValueLemmaReport vl = check_value_lemma(ex.cm, {ex.m1}, 200, 9);
  CHECK(vl.holds);
  CHECK(vl.tested > 0);
}
