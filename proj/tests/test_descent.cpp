// Galois descent: twists, Vandermonde matrices, rationality of the
// descended action, tuple subspace transport, closed-image equations,
// and Frobenius reduction.
#include <catch2/catch_amalgamated.hpp>

#include "goodrep/constructions.hpp"
#include "goodrep/descent.hpp"

using namespace goodrep;

namespace {
FieldPtr gf9() { return parse_field("GF(3^2;modulus=[2,2,1])"); }
}  // namespace

TEST_CASE("twist by Frobenius sends g to g^3 on GF(9)^*", "[descent]") {
  auto f9 = gf9();
  auto ext = GaloisExtension::finite(f9);
  Scalar alpha = f9->element_at(f9->p());
  Matrix gen = Matrix::from_rows(f9, {{alpha}});
  MatrixGroup gstar(f9, 1, {gen});
  REQUIRE(gstar.order() == 8);
  Representation chi = Representation::tautological(gstar);

  Representation chi1 = twist(ext, 1, chi);
  CHECK(chi1.images()[0] == gen);  // identity automorphism leaves it alone
  Representation chi2 = twist(ext, 2, chi);
  CHECK(chi2.images()[0].at(0, 0) == alpha.pow(3));
  for (const auto& pr : chi2.enumerate_pairs())
    CHECK(pr.image.at(0, 0) == pr.g.at(0, 0).pow(3));
}

TEST_CASE("Vandermonde matrix over GF(9)/GF(3)", "[descent]") {
  auto f9 = gf9();
  auto ext = GaloisExtension::finite(f9);
  Scalar alpha = f9->element_at(3);
  Scalar one = f9->one(), two = f9->from_int(2);

  Matrix a = vandermonde(ext);
  CHECK(a.at(0, 0) == alpha);
  CHECK(a.at(0, 1) == two * alpha + one);
  CHECK(a.at(1, 0) == alpha + one);
  CHECK(a.at(1, 1) == two * alpha + two);
  CHECK(a.det() == two * alpha + two);
  CHECK_FALSE(a.det().is_zero());

  // Galois covariance: sigma(A) = A J_sigma for both automorphisms
  for (int sidx = 1; sidx <= 2; ++sidx)
    CHECK(galois_entrywise(ext, sidx, a) == a * galois_perm_matrix(ext, sidx));
}

TEST_CASE("Vandermonde matrix over Q(sqrt 2)", "[descent]") {
  auto ext = GaloisExtension::quadratic(2);
  auto qs = ext.top();
  Matrix a = vandermonde(ext);
  Scalar s = ext.alpha();
  CHECK(a.at(0, 0) == s);
  CHECK(a.at(0, 1) == -s);
  CHECK(a.at(1, 0) == qs->from_int(2));
  CHECK(a.at(1, 1) == qs->from_int(2));
  CHECK(a.det() == s * qs->from_int(4));
}

TEST_CASE("descent of GF(9)^* lands in GL2 over GF(3)", "[descent]") {
  auto f9 = gf9();
  auto ext = GaloisExtension::finite(f9);
  Scalar alpha = f9->element_at(3);
  MatrixGroup gstar(f9, 1, {Matrix::from_rows(f9, {{alpha}})});
  DescentInput din(ext, Representation::tautological(gstar), 1);
  DescentResult res = build_psi(din);

  CHECK(res.phi.dim() == 2);
  CHECK(res.psi.dim() == 2);
  for (bool r : res.rationality) CHECK(r);
  int64_t rational_elems = 0;
  for (const auto& pr : res.psi.enumerate_pairs()) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(pr.image.at(r, c).in_base_subfield());
    ++rational_elems;
  }
  CHECK(rational_elems == 8);
}

TEST_CASE("descent of B2(GF(9)) on the defining plane", "[descent][slow]") {
  auto f9 = gf9();
  auto ext = GaloisExtension::finite(f9);
  Representation taut = Representation::tautological(bn_group(f9, 2));
  DescentInput din(ext, taut, 2);
  DescentResult res = build_psi(din);

  CHECK(res.phi.dim() == 6);
  CHECK(static_cast<int64_t>(res.phi.enumerate_pairs().size()) == 576);
  for (bool r : res.rationality) CHECK(r);

  // rationality holds beyond the generators: first 50 enumerated elements
  const auto& pairs = res.psi.enumerate_pairs();
  for (size_t i = 0; i < 50 && i < pairs.size(); ++i)
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) CHECK(pairs[i].image.at(r, c).in_base_subfield());

  // tuple report: constant tuples invariant on both levels, every
  // transported tuple invariant under the descended action
  REQUIRE(res.subspace_report.size() == 4);
  for (const auto& tr : res.subspace_report) {
    CHECK(tr.phi_invariant);
    CHECK(tr.transported_psi_invariant);
    if (tr.tuple[0] == tr.tuple[1]) CHECK(tr.psi_invariant);
  }

  // covariance of the big representation: sigma(Phi) = J[N]^{-1} Phi J[N]
  for (int sidx = 1; sidx <= 2; ++sidx) {
    Matrix jn = galois_perm_matrix(ext, sidx).blowup(3);
    Matrix jninv = jn.inverse();
    for (const auto& img : res.phi.images())
      CHECK(galois_entrywise(ext, sidx, img) == jninv * img * jn);
  }
}

TEST_CASE("closed-image equations on seeded samples", "[descent]") {
  auto f9 = gf9();
  auto ext = GaloisExtension::finite(f9);
  Representation taut = Representation::tautological(bn_group(f9, 2));
  DescentInput din(ext, taut, 2);

  Matrix id2 = Matrix::identity(f9, 2);
  CHECK(closed_image_equations_hold(ext, id2, {id2, id2}));

  auto samples = make_closed_image_samples(din, 6, 42);
  EquationReport rpt = check_closed_image_equations(din, samples, 42);
  CHECK(rpt.samples == 6);
  CHECK(rpt.all_hold);

  // corrupting C_1 must break either the equations or the reconstruction
  std::vector<Matrix> c;
  for (int l = 1; l <= 2; ++l)
    c.push_back(closed_image_c(ext, samples[0].g, samples[0].tuple, l));
  c[0].at(0, 1) = c[0].at(0, 1) + f9->one();
  std::string why;
  auto rec = closed_image_solve(ext, c, samples[0].tuple, &why);
  CHECK((!rec || !(*rec == samples[0].g)));
}

TEST_CASE("Frobenius reduction identity cases", "[descent]") {
  auto f4 = parse_field("GF(2^2)");
  Representation t4 = Representation::tautological(bn_group(f4, 2));
  FrobeniusReduction r0 = frobenius_reduce(t4, 0);
  FrobeniusReduction r2 = frobenius_reduce(t4, 2);  // x^(2^2) = x on GF(4)
  for (size_t i = 0; i < t4.images().size(); ++i) {
    CHECK(r0.rep.images()[i] == t4.images()[i]);
    CHECK(r2.rep.images()[i] == t4.images()[i]);
  }

  auto f2 = parse_field("GF(2)");
  Representation t2 = Representation::tautological(bn_group(f2, 2));
  FrobeniusReduction r1 = frobenius_reduce(t2, 1);  // x^2 = x on GF(2)
  CHECK(r1.group_order == 2);
  CHECK(r1.distinct_images == 2);
}
