// JSON codecs, certificate determinism, and the fast verification suites.
#include <catch2/catch_amalgamated.hpp>

#include "goodrep/certificate.hpp"
#include "goodrep/constructions.hpp"
#include "goodrep/io.hpp"
#include "goodrep/suites.hpp"

using namespace goodrep;

TEST_CASE("matrix JSON round-trips across field kinds", "[io]") {
  auto q = parse_field("Q");
  auto f9 = parse_field("GF(3^2;modulus=[2,2,1])");
  auto qs2 = parse_field("Q(sqrt(2))");

  Matrix mq(q, 2, 3);
  mq.at(0, 0) = scalar_from_string(q, "-5/3");
  mq.at(1, 2) = q->from_int(7);
  Matrix m9(f9, 2, 2);
  m9.at(0, 1) = f9->element_at(5);
  Matrix ms(qs2, 1, 2);
  ms.at(0, 0) = scalar_from_string(qs2, "1/2+-3/4*r");

  for (const Matrix& m : {mq, m9, ms}) {
    json j = matrix_to_json(m);
    CHECK(j.contains("field"));
    CHECK(matrix_from_json(j) == m);
  }

  // field mismatch between declared and expected context is an error
  CHECK_THROWS_MATCHES(
      matrix_from_json(matrix_to_json(mq), f9), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::MixedContext; }));
}

TEST_CASE("subspace JSON keeps ambient dimension, zero space included", "[io]") {
  auto f3 = parse_field("GF(3)");
  Subspace s = Subspace::span_rows(
      f3, 3, {{f3->one(), f3->zero(), f3->one()}, {f3->zero(), f3->one(), f3->one()}});
  CHECK(subspace_from_json(subspace_to_json(s)) == s);

  Subspace z = Subspace::zero(f3, 4);
  json jz = subspace_to_json(z);
  Subspace z2 = subspace_from_json(jz, f3);
  CHECK(z2.is_zero());
  CHECK(z2.ambient() == 4);

  std::vector<Subspace> fam = {s, Subspace::full(f3, 3)};
  auto fam2 = subspace_family_from_json(subspace_family_to_json(fam), f3);
  REQUIRE(fam2.size() == 2);
  CHECK(fam2[0] == fam[0]);
  CHECK(fam2[1].is_full());
}

TEST_CASE("group and representation JSON round-trips", "[io]") {
  auto f3 = parse_field("GF(3)");
  MatrixGroup b2 = bn_group(f3, 2);
  MatrixGroup b2rt = group_from_json(group_to_json(b2));
  CHECK(b2rt.order() == b2.order());
  CHECK(b2rt.generators().size() == b2.generators().size());

  auto ut = upper_triangular_rep(f3, 2);
  Representation rt = rep_from_json(rep_to_json(ut.rep));
  CHECK(rt.dim() == ut.rep.dim());
  CHECK(rt.group().order() == 12);
  for (size_t i = 0; i < ut.rep.images().size(); ++i)
    CHECK(rt.images()[i] == ut.rep.images()[i]);
}

TEST_CASE("NT module and Laurent JSON forms", "[io]") {
  auto q = parse_field("Q");
  NTModule m = nt_module_from_blocks(q, {{1, 1}, {2, 1}}, 1, 0);
  NTModule m2 = ntmodule_from_json(ntmodule_to_json(m));
  CHECK(m2.dim == m.dim);
  CHECK(m2.weights == m.weights);
  CHECK(m2.jmat == m.jmat);

  LaurentPoly p = LaurentPoly::monomial(q->from_int(3), -2);
  json jp = laurent_to_json(p);
  CHECK(jp["lo"] == -2);
  CHECK(jp["coeffs"].size() == 1);
  json jz = laurent_to_json(LaurentPoly::zero(q));
  CHECK(jz["coeffs"].empty());
}

TEST_CASE("freeness report JSON carries witness and method", "[io]") {
  auto f3 = parse_field("GF(3)");
  Matrix swp = Matrix::from_ints(f3, 2, 2, {0, 1, 1, 0});
  Representation swrep = Representation::tautological(MatrixGroup(f3, 2, {swp}));

  auto ok = check_set_free(
      GoodnessSpec(swrep, {Subspace::span_rows(f3, 2, {{f3->one(), f3->one()}})}),
      FreeMode::Exhaustive());
  json jok = freeness_to_json(ok);
  CHECK(jok["status"] == "verified");
  CHECK(jok["witness"].is_null());
  CHECK(jok["method"] == "pointwise");

  auto bad = check_set_free(GoodnessSpec(swrep, {}), FreeMode::Exhaustive());
  json jbad = freeness_to_json(bad);
  CHECK(jbad["status"] == "refuted");
  REQUIRE(jbad["witness"].is_object());
  CHECK(jbad["witness"].contains("g"));
  CHECK(jbad["witness"].contains("u"));
}

TEST_CASE("digest oracle values are frozen", "[certificate]") {
  // FNV-1a, 64-bit; values computed independently
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("abc") == "e71fa2190541574b");
  CHECK(fnv1a_digest("goodrep") == "acda763bfa8f9203");
}

TEST_CASE("certificate payload excludes wall time", "[certificate]") {
  Certificate c;
  c.claim = "demo.claim";
  c.command = "goodrep demo";
  c.status = "verified";
  c.payload = {{"value", 1}};
  c.wall_ms = 123.0;
  std::string p1 = c.payload_string();
  c.wall_ms = 9999.0;
  CHECK(c.payload_string() == p1);
  // wall time still appears in the full document
  CHECK(c.to_json().contains("wall_ms"));
  CHECK(p1.find("wall_ms") == std::string::npos);
  CHECK(p1.find("demo.claim") != std::string::npos);
}

TEST_CASE("fast suites pass and reproduce byte-identical payloads", "[suites]") {
  for (const char* name : {"upper-triangular", "pgl2", "coinduce"}) {
    SuiteRun a = run_suite(name, 7);
    CHECK(a.pass());
    SuiteRun b = run_suite(name, 7);
    CHECK(a.payloads() == b.payloads());
  }
}

TEST_CASE("suite registry rejects unknown names", "[suites]") {
  CHECK(suite_names().size() == 6);
  CHECK_THROWS_MATCHES(
      run_suite("bogus", 0), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::UnknownSuite; }));
}

TEST_CASE("suite expectations include deliberate refutations", "[suites]") {
  SuiteRun co = run_suite("coinduce", 0);
  bool saw_refuted = false;
  for (const auto& e : co.entries) {
    if (e.expected == "refuted") {
      saw_refuted = true;
      CHECK(e.cert.status == "refuted");
    }
  }
  CHECK(saw_refuted);
}
