// JSON encodings for every on-disk object.  Conventions:
//   scalar        text form ("a/b", decimal residue, "[c0,c1,...]", "a+b*r")
//   matrix        {"field": <descriptor>, "rows": [[scalar,...],...]}
//   subspace      {"ambient": n, "basis": <matrix>}   (empty rows = zero space)
//   group         {"field", "degree", "generators": [matrix,...]}
//   representation  group keys + {"rep_dim": m, "images": [matrix,...]}
//   freeness      {"status", "tested", "witness": {"g","u"}|null, "seed": int|null}
//   nt module     {"field", "weights": [...], "jmat": <matrix>}
// Parsing validates shapes and reports ParseError with the offending key.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "goodrep/field.hpp"
#include "goodrep/matrix.hpp"
#include "goodrep/subspace.hpp"
#include "goodrep/group.hpp"
#include "goodrep/rep.hpp"
#include "goodrep/ntmodule.hpp"
#include "goodrep/laurent.hpp"
#include "goodrep/ntwitness.hpp"

namespace goodrep {

using nlohmann::json;

namespace detail {

inline const json& json_field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::ParseError,
          std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline int64_t json_int(const json& j, const char* key) {
  const json& v = json_field(j, key);
  require(v.is_number_integer(), Errc::ParseError,
          std::string("key \"") + key + "\" must be an integer");
  return v.get<int64_t>();
}

inline std::string json_str(const json& j, const char* key) {
  const json& v = json_field(j, key);
  require(v.is_string(), Errc::ParseError,
          std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace detail

// --- vectors and matrices ---

inline json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

inline Vec vec_from_json(const FieldPtr& f, const json& j) {
  require(j.is_array(), Errc::ParseError, "vector must be a JSON array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) {
    require(e.is_string(), Errc::ParseError, "vector entries must be scalar strings");
    v.push_back(scalar_from_string(f, e.get<std::string>()));
  }
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json j;
  j["field"] = m.field()->descriptor();
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(vec_to_json(m.row(r)));
  j["rows"] = rows;
  return j;
}

inline Matrix matrix_from_json(const json& j, const FieldPtr& expect = nullptr) {
  FieldPtr f = parse_field(detail::json_str(j, "field"));
  if (expect) {
    require(f->descriptor() == expect->descriptor(), Errc::MixedContext,
            "matrix field " + f->descriptor() + " does not match context " +
                expect->descriptor());
    f = expect;
  }
  const json& rows = detail::json_field(j, "rows");
  require(rows.is_array(), Errc::ParseError, "\"rows\" must be an array");
  std::vector<Vec> rv;
  rv.reserve(rows.size());
  for (const auto& row : rows) rv.push_back(vec_from_json(f, row));
  require(!rv.empty(), Errc::ParseError, "matrix needs at least one row");
  size_t cols = rv.front().size();
  for (const auto& row : rv)
    require(row.size() == cols, Errc::ParseError, "ragged matrix rows");
  return Matrix::from_rows(f, rv);
}

// --- subspaces ---

inline json subspace_to_json(const Subspace& s) {
  json j;
  j["ambient"] = s.ambient();
  json basis;
  basis["field"] = s.field()->descriptor();
  json rows = json::array();
  for (int i = 0; i < s.dim(); ++i) rows.push_back(vec_to_json(s.basis_row(i)));
  basis["rows"] = rows;
  j["basis"] = basis;
  return j;
}

inline Subspace subspace_from_json(const json& j, const FieldPtr& expect = nullptr) {
  int64_t ambient = detail::json_int(j, "ambient");
  require(ambient > 0, Errc::ParseError, "\"ambient\" must be positive");
  const json& basis = detail::json_field(j, "basis");
  FieldPtr f = parse_field(detail::json_str(basis, "field"));
  if (expect) {
    require(f->descriptor() == expect->descriptor(), Errc::MixedContext,
            "subspace field does not match context");
    f = expect;
  }
  const json& rows = detail::json_field(basis, "rows");
  require(rows.is_array(), Errc::ParseError, "\"rows\" must be an array");
  std::vector<Vec> rv;
  for (const auto& row : rows) {
    Vec v = vec_from_json(f, row);
    require(static_cast<int64_t>(v.size()) == ambient, Errc::ParseError,
            "basis row length does not match ambient dimension");
    rv.push_back(std::move(v));
  }
  return Subspace::span_rows(f, static_cast<int>(ambient), rv);
}

inline json subspace_family_to_json(const std::vector<Subspace>& fam) {
  json a = json::array();
  for (const auto& s : fam) a.push_back(subspace_to_json(s));
  return a;
}

inline std::vector<Subspace> subspace_family_from_json(const json& j,
                                                       const FieldPtr& expect = nullptr) {
  require(j.is_array(), Errc::ParseError, "subspace family must be a JSON array");
  std::vector<Subspace> out;
  for (const auto& e : j) out.push_back(subspace_from_json(e, expect));
  return out;
}

// --- groups and representations ---

inline json group_to_json(const MatrixGroup& g) {
  json j;
  j["field"] = g.field()->descriptor();
  j["degree"] = g.degree();
  json gens = json::array();
  for (const auto& m : g.generators()) gens.push_back(matrix_to_json(m));
  j["generators"] = gens;
  return j;
}

inline MatrixGroup group_from_json(const json& j, int64_t element_cap = MatrixGroup::kDefaultCap) {
  FieldPtr f = parse_field(detail::json_str(j, "field"));
  int64_t degree = detail::json_int(j, "degree");
  require(degree > 0, Errc::ParseError, "\"degree\" must be positive");
  const json& gens = detail::json_field(j, "generators");
  require(gens.is_array() && !gens.empty(), Errc::ParseError,
          "\"generators\" must be a nonempty array");
  std::vector<Matrix> gv;
  for (const auto& e : gens) {
    Matrix m = matrix_from_json(e, f);
    require(m.rows() == degree && m.cols() == degree, Errc::ParseError,
            "generator shape does not match degree");
    gv.push_back(std::move(m));
  }
  return MatrixGroup(f, static_cast<int>(degree), std::move(gv), element_cap);
}

inline json rep_to_json(const Representation& rep) {
  json j = group_to_json(rep.group());
  j["rep_dim"] = rep.dim();
  json imgs = json::array();
  for (const auto& m : rep.images()) imgs.push_back(matrix_to_json(m));
  j["images"] = imgs;
  return j;
}

inline Representation rep_from_json(const json& j, int64_t element_cap = MatrixGroup::kDefaultCap) {
  MatrixGroup g = group_from_json(j, element_cap);
  int64_t dim = detail::json_int(j, "rep_dim");
  require(dim > 0, Errc::ParseError, "\"rep_dim\" must be positive");
  const json& imgs = detail::json_field(j, "images");
  require(imgs.is_array() && imgs.size() == g.generators().size(), Errc::ParseError,
          "\"images\" must list one matrix per generator");
  std::vector<Matrix> iv;
  for (const auto& e : imgs) {
    Matrix m = matrix_from_json(e, g.field());
    require(m.rows() == dim && m.cols() == dim, Errc::ParseError,
            "image shape does not match rep_dim");
    iv.push_back(std::move(m));
  }
  return Representation(std::move(g), static_cast<int>(dim), std::move(iv));
}

// --- freeness reports ---

inline json freeness_to_json(const FreenessReport& r) {
  json j;
  j["status"] = r.status;
  j["tested"] = r.tested;
  if (r.witness) {
    json w;
    w["g"] = matrix_to_json(r.witness->g);
    w["u"] = vec_to_json(r.witness->u);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["method"] = r.method;
  return j;
}

// --- N(T) modules and witness certificates ---

inline json ntmodule_to_json(const NTModule& mod) {
  json j;
  j["field"] = mod.f->descriptor();
  j["weights"] = mod.weights;
  j["jmat"] = matrix_to_json(mod.jmat);
  return j;
}

inline NTModule ntmodule_from_json(const json& j) {
  NTModule mod;
  mod.f = parse_field(detail::json_str(j, "field"));
  const json& w = detail::json_field(j, "weights");
  require(w.is_array() && !w.empty(), Errc::ParseError,
          "\"weights\" must be a nonempty array");
  for (const auto& e : w) {
    require(e.is_number_integer(), Errc::ParseError, "weights must be integers");
    mod.weights.push_back(e.get<int64_t>());
  }
  mod.dim = static_cast<int>(mod.weights.size());
  mod.jmat = matrix_from_json(detail::json_field(j, "jmat"), mod.f);
  mod.validate();
  return mod;
}

inline json laurent_to_json(const LaurentPoly& p) {
  json j;
  j["lo"] = p.lowest();
  json c = json::array();
  for (const auto& s : p.coeffs()) c.push_back(s.str());
  j["coeffs"] = c;
  return j;
}

inline json laurent_vec_to_json(const LaurentVec& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(laurent_to_json(p));
  return a;
}

inline json witness_certificate_to_json(const WitnessCertificate& c) {
  json j;
  j["module"] = ntmodule_to_json(c.module);
  j["family"] = subspace_family_to_json(c.family);
  j["u"] = vec_to_json(c.u);
  j["status"] = c.status;
  j["v_lambda"] = laurent_vec_to_json(c.v_lambda);
  j["vprime_lambda"] = laurent_vec_to_json(c.vprime_lambda);
  j["limit_v"] = vec_to_json(c.limit_v);
  j["limit_vprime"] = vec_to_json(c.limit_vprime);
  json checks = json::array();
  for (const auto& ch : c.checks) {
    json e;
    e["name"] = ch.name;
    e["passed"] = ch.passed;
    e["evidence"] = ch.evidence;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["seed"] = c.seed;
  j["search_path"] = c.search_path;
  j["all_passed"] = c.all_passed();
  return j;
}

}  // namespace goodrep
