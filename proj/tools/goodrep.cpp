// goodrep: command-line front end.
//
// Exit codes: 0 every expectation met, 1 a mathematical claim was refuted
// (the certificate carries the witness), 2 usage or input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "goodrep/suites.hpp"

using namespace goodrep;
using nlohmann::json;

namespace {

struct GlobalOpts {
  uint64_t seed = 0;
  std::string out;
  int64_t element_cap = MatrixGroup::kDefaultCap;
  std::string mode = "exhaustive";
};

FreeMode parse_mode(const std::string& mode, uint64_t seed) {
  if (mode == "exhaustive") return FreeMode::Exhaustive();
  if (mode.rfind("sample:", 0) == 0) {
    int64_t n = detail::parse_i64(mode.substr(7));
    require(n > 0, Errc::InvalidArgument, "sample count must be positive");
    return FreeMode::Sample(seed, n);
  }
  fail(Errc::InvalidArgument, "mode must be \"exhaustive\" or \"sample:<n>\", got \"" + mode + "\"");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

void emit(const Certificate& cert, const std::string& out) {
  if (!out.empty()) {
    std::ofstream f(out);
    require(f.good(), Errc::ParseError, "cannot write " + out);
    f << cert.to_json().dump(2) << "\n";
  }
  std::cout << cert.claim << ": " << cert.status << " (" << cert.wall_ms << " ms)"
            << (out.empty() ? "" : ", certificate in " + out) << "\n";
}

int exit_for(const std::string& status) { return status == "refuted" ? 1 : 0; }

// "{1:1,2:3};m0;m0p" -> block multiplicities and weight-0 counts
NTModule parse_nt_blocks(const FieldPtr& f, const std::string& body) {
  size_t close = body.find('}');
  require(!body.empty() && body.front() == '{' && close != std::string::npos,
          Errc::ParseError, "nt-blocks spec must start with {w:c,...}");
  std::map<int64_t, int> mult;
  std::string inner = body.substr(1, close - 1);
  size_t at = 0;
  while (at < inner.size()) {
    size_t comma = inner.find(',', at);
    std::string item = inner.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
    size_t colon = item.find(':');
    require(colon != std::string::npos, Errc::ParseError, "block item needs w:c, got " + item);
    mult[detail::parse_i64(item.substr(0, colon))] +=
        static_cast<int>(detail::parse_i64(item.substr(colon + 1)));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  std::string rest = body.substr(close + 1);
  require(rest.size() >= 4 && rest.front() == ';', Errc::ParseError,
          "nt-blocks spec needs ;m0;m0p after the block list");
  size_t semi = rest.find(';', 1);
  require(semi != std::string::npos, Errc::ParseError, "nt-blocks spec needs ;m0;m0p");
  int m0 = static_cast<int>(detail::parse_i64(rest.substr(1, semi - 1)));
  int m0p = static_cast<int>(detail::parse_i64(rest.substr(semi + 1)));
  return nt_module_from_blocks(f, mult, m0, m0p);
}

struct LoadedRep {
  Representation rep;
  std::vector<Subspace> default_family;  // nonempty only for builtins that carry one
};

// <file> or one of the builtin names: upper-triangular:n, sl2-sym:d,
// nt-blocks:{w:c,...};m0;m0p (builtins need --field)
LoadedRep load_rep(const std::string& spec, const std::string& field_desc, int64_t cap) {
  auto need_field = [&]() {
    require(!field_desc.empty(), Errc::InvalidArgument,
            "builtin \"" + spec + "\" needs --field");
    return parse_field(field_desc);
  };
  if (spec.rfind("upper-triangular:", 0) == 0) {
    FieldPtr f = need_field();
    int n = static_cast<int>(detail::parse_i64(spec.substr(17)));
    UpperTriangularRep ut = upper_triangular_rep(f, n, cap);
    return {ut.rep, ut.family};
  }
  if (spec.rfind("sl2-sym:", 0) == 0) {
    FieldPtr f = need_field();
    int d = static_cast<int>(detail::parse_i64(spec.substr(8)));
    return {sym_power(f, d, cap).rep, {}};
  }
  if (spec.rfind("nt-blocks:", 0) == 0) {
    FieldPtr f = need_field();
    NTModule mod = parse_nt_blocks(f, spec.substr(10));
    return {nt_representation(mod, cap), {}};
  }
  return {rep_from_json(load_json(spec), cap), {}};
}

std::string quote_if_needed(const std::string& s) {
  return s.find_first_of(" \t{};") == std::string::npos ? s : "\"" + s + "\"";
}

int cmd_descend(const std::string& ext_desc, const std::string& group_spec,
                const GlobalOpts& g) {
  FieldPtr top = parse_field(ext_desc);
  GaloisExtension ext = top->is_finite() ? GaloisExtension::finite(top)
                                         : GaloisExtension::quadratic(top->quad_d());
  // descent acts on the defining n-dim space, so the builtin means the
  // tautological B_n action rather than the left-multiplication module
  Representation rep = [&]() {
    if (group_spec.rfind("upper-triangular:", 0) == 0) {
      int n = static_cast<int>(detail::parse_i64(group_spec.substr(17)));
      return Representation::tautological(bn_group(top, n, g.element_cap));
    }
    return rep_from_json(load_json(group_spec), g.element_cap);
  }();
  DescentInput in(ext, rep, rep.group().degree());
  WallClock wc;
  DescentResult res = build_psi(in);
  auto samples = make_closed_image_samples(in, 100, g.seed);
  EquationReport eq = check_closed_image_equations(in, samples, g.seed);

  json payload;
  payload["extension"] = ext_desc;
  payload["twists"] = ext.degree();
  payload["a"] = matrix_to_json(res.a);
  payload["det_a"] = res.det_a.str();
  json psi_gens = json::array();
  for (const auto& m : res.psi.images()) psi_gens.push_back(matrix_to_json(m));
  payload["psi_generators"] = psi_gens;
  payload["rationality"] = res.rationality;
  json table = json::array();
  for (const auto& tr : res.subspace_report) {
    json row;
    row["tuple"] = tr.tuple;
    row["phi_invariant"] = tr.phi_invariant;
    row["psi_invariant"] = tr.psi_invariant;
    row["transported_psi_invariant"] = tr.transported_psi_invariant;
    table.push_back(row);
  }
  payload["subspace_report"] = table;
  payload["equations"] = {{"samples", eq.samples}, {"failures", eq.failures}};

  bool rational = true;
  for (bool b : res.rationality) rational = rational && b;
  std::string status = (!res.det_a.is_zero() && rational && eq.all_hold) ? "verified" : "refuted";

  Certificate cert;
  cert.claim = "descent.build";
  cert.command = "goodrep descend --ext " + quote_if_needed(ext_desc) + " --group " +
                 quote_if_needed(group_spec) + " --seed " + std::to_string(g.seed);
  cert.seed = g.seed;
  cert.inputs_digest = fnv1a_digest(ext_desc + "|" + group_spec);
  cert.status = status;
  cert.payload = payload;
  cert.wall_ms = wc.ms();
  emit(cert, g.out);
  return exit_for(status);
}

int cmd_verify_free(const std::string& rep_spec, const std::string& family_path,
                    const std::string& field_desc, const GlobalOpts& g) {
  LoadedRep lr = load_rep(rep_spec, field_desc, g.element_cap);
  std::vector<Subspace> family = lr.default_family;
  if (!family_path.empty()) family = subspace_family_from_json(load_json(family_path), lr.rep.field());
  require(!family.empty(), Errc::InvalidArgument,
          "no subspace family: pass --family or use a builtin that carries one");
  WallClock wc;
  FreenessReport rep = check_set_free(GoodnessSpec(lr.rep, family), parse_mode(g.mode, g.seed));

  Certificate cert;
  cert.claim = "freeness." + rep_spec;
  cert.command = "goodrep verify-free --rep " + quote_if_needed(rep_spec) +
                 (field_desc.empty() ? "" : " --field " + quote_if_needed(field_desc)) +
                 (family_path.empty() ? "" : " --family " + family_path) + " --mode " + g.mode +
                 " --seed " + std::to_string(g.seed);
  cert.seed = g.seed;
  cert.inputs_digest = fnv1a_digest(rep_to_json(lr.rep).dump() + subspace_family_to_json(family).dump());
  cert.status = rep.status;
  cert.payload = {{"report", freeness_to_json(rep)},
                  {"rep_dim", lr.rep.dim()},
                  {"family_size", static_cast<int64_t>(family.size())}};
  cert.wall_ms = wc.ms();
  emit(cert, g.out);
  return exit_for(rep.status);
}

int cmd_check_invariant(const std::string& rep_spec, const std::string& subspace_path,
                        const std::string& field_desc, const GlobalOpts& g) {
  LoadedRep lr = load_rep(rep_spec, field_desc, g.element_cap);
  Subspace s = subspace_from_json(load_json(subspace_path), lr.rep.field());
  require(s.ambient() == lr.rep.dim(), Errc::DimensionMismatch,
          "subspace ambient dimension does not match the representation");
  WallClock wc;
  json witness = nullptr;
  bool invariant = true;
  for (size_t gi = 0; gi < lr.rep.images().size() && invariant; ++gi)
    for (int i = 0; i < s.dim() && invariant; ++i) {
      Vec img = lr.rep.images()[gi].apply(s.basis_row(i));
      if (!s.contains(img)) {
        invariant = false;
        witness = {{"generator", gi}, {"basis_row", vec_to_json(s.basis_row(i))},
                   {"image", vec_to_json(img)}};
      }
    }

  Certificate cert;
  cert.claim = "invariance." + rep_spec;
  cert.command = "goodrep check-invariant --rep " + quote_if_needed(rep_spec) +
                 (field_desc.empty() ? "" : " --field " + quote_if_needed(field_desc)) +
                 " --subspace " + subspace_path;
  cert.inputs_digest = fnv1a_digest(rep_to_json(lr.rep).dump() + subspace_to_json(s).dump());
  cert.status = invariant ? "verified" : "refuted";
  cert.payload = {{"invariant", invariant}, {"subspace_dim", s.dim()}, {"witness", witness},
                  {"method", "generators"}};
  cert.wall_ms = wc.ms();
  emit(cert, g.out);
  return invariant ? 0 : 1;
}

int cmd_nt_witness(const std::string& module_spec, const std::string& subspaces_path,
                   const std::string& field_desc, int64_t sample_budget, const GlobalOpts& g) {
  NTModule mod;
  if (module_spec.rfind("nt-blocks:", 0) == 0) {
    require(!field_desc.empty(), Errc::InvalidArgument, "nt-blocks needs --field");
    mod = parse_nt_blocks(parse_field(field_desc), module_spec.substr(10));
  } else {
    mod = ntmodule_from_json(load_json(module_spec));
  }
  std::vector<Subspace> family;
  if (!subspaces_path.empty())
    family = subspace_family_from_json(load_json(subspaces_path), mod.f);
  else
    family.push_back(Subspace::zero(mod.f, mod.dim));

  WallClock wc;
  auto pipe = nt_witness_pipeline(mod, family, g.seed, sample_budget);
  std::string status = pipe.cert.all_passed() ? "verified" : "refuted";

  Certificate cert;
  cert.claim = "ntwitness." + pipe.cert.status;
  cert.command = "goodrep nt-witness --module " + quote_if_needed(module_spec) +
                 (field_desc.empty() ? "" : " --field " + quote_if_needed(field_desc)) +
                 (subspaces_path.empty() ? "" : " --subspaces " + subspaces_path) +
                 " --seed " + std::to_string(g.seed);
  cert.seed = g.seed;
  cert.inputs_digest = fnv1a_digest(ntmodule_to_json(mod).dump() +
                                    subspace_family_to_json(family).dump());
  cert.status = status;
  cert.payload = {{"certificate", witness_certificate_to_json(pipe.cert)},
                  {"find_path", pipe.found.path},
                  {"adjust_path", pipe.adjusted.path}};
  cert.wall_ms = wc.ms();
  emit(cert, g.out);
  return exit_for(status);
}

int cmd_coinduce(const std::string& group_path, const std::string& normal_path,
                 const std::string& wrep_path, const std::string& m_family_path,
                 const std::string& vrep_path, const std::string& v_family_path,
                 const GlobalOpts& g) {
  MatrixGroup big = group_from_json(load_json(group_path), g.element_cap);
  MatrixGroup sub = group_from_json(load_json(normal_path), g.element_cap);
  require_subgroup(big, sub);
  require_normal(big, sub);
  Representation wrep = rep_from_json(load_json(wrep_path), g.element_cap);
  require(wrep.group().same_presentation(sub), Errc::MixedContext,
          "--wrep must be a representation of the --normal subgroup");
  std::vector<Subspace> m_family =
      subspace_family_from_json(load_json(m_family_path), wrep.field());
  Representation vrep = rep_from_json(load_json(vrep_path), g.element_cap);
  require(vrep.group().same_presentation(big), Errc::MixedContext,
          "--vrep must be a representation of the --group");
  std::vector<Subspace> v_family =
      subspace_family_from_json(load_json(v_family_path), vrep.field());

  WallClock wc;
  CoinducedModule cm = build_coinduced(big, sub, wrep);
  CombinedGoodness cg = build_combined(vrep, v_family, cm, m_family);
  check_combined_hypothesis(cg);
  FreenessReport rep = verify_combined(cg, parse_mode(g.mode, g.seed));

  Certificate cert;
  cert.claim = "coinduce.combined";
  cert.command = "goodrep coinduce --group " + group_path + " --normal " + normal_path +
                 " --wrep " + wrep_path + " --m-family " + m_family_path + " --vrep " +
                 vrep_path + " --v-family " + v_family_path + " --mode " + g.mode +
                 " --seed " + std::to_string(g.seed);
  cert.seed = g.seed;
  cert.inputs_digest =
      fnv1a_digest(group_to_json(big).dump() + group_to_json(sub).dump() +
                   rep_to_json(wrep).dump() + subspace_family_to_json(m_family).dump() +
                   rep_to_json(vrep).dump() + subspace_family_to_json(v_family).dump());
  cert.status = rep.status;
  cert.payload = {{"transversal", static_cast<int64_t>(cm.transversal.size())},
                  {"gamma_dim", cm.gamma.dim()},
                  {"combined_dim", vrep.dim() + cm.gamma.dim()},
                  {"report", freeness_to_json(rep)}};
  cert.wall_ms = wc.ms();
  emit(cert, g.out);
  return exit_for(rep.status);
}

int cmd_suite(const std::string& name, const GlobalOpts& g) {
  SuiteRun run = run_suite(name, g.seed);
  for (const auto& e : run.entries)
    std::cout << "  " << e.cert.claim << ": " << e.cert.status << " (expected " << e.expected
              << ") " << e.cert.wall_ms << " ms\n";
  std::cout << "suite " << name << ": " << (run.pass() ? "PASS" : "FAIL") << " ("
            << run.wall_ms << " ms)\n";
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    require(f.good(), Errc::ParseError, "cannot write " + g.out);
    f << run.to_json().dump(2) << "\n";
    std::cout << "report in " << g.out << "\n";
  }
  return run.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for descent, coinduction and goodness certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for every sampling path (default 0)");
  app.add_option("--out", g.out, "write the certificate JSON here");
  app.add_option("--element-cap", g.element_cap, "abort group enumeration beyond this size");
  app.add_option("--mode", g.mode, "exhaustive (default) or sample:<n>");

  std::string ext_desc, group_spec = "upper-triangular:2";
  auto* descend = app.add_subcommand("descend", "descend a representation through a Galois extension");
  descend->add_option("--ext", ext_desc, "extension field descriptor, e.g. GF(3^2;modulus=[2,2,1])")
      ->required();
  descend->add_option("--group", group_spec, "rep JSON file or builtin (default upper-triangular:2)");

  std::string vf_rep, vf_family, vf_field;
  auto* vfree = app.add_subcommand("verify-free", "check set-theoretic freeness off a subspace family");
  vfree->add_option("--rep", vf_rep, "rep JSON file or builtin name")->required();
  vfree->add_option("--family", vf_family, "subspace family JSON");
  vfree->add_option("--field", vf_field, "field descriptor for builtin reps");

  std::string ci_rep, ci_subspace, ci_field;
  auto* cinv = app.add_subcommand("check-invariant", "check that a subspace is stable under a representation");
  cinv->add_option("--rep", ci_rep, "rep JSON file or builtin name")->required();
  cinv->add_option("--subspace", ci_subspace, "subspace JSON")->required();
  cinv->add_option("--field", ci_field, "field descriptor for builtin reps");

  std::string nt_module, nt_subspaces, nt_field;
  int64_t nt_budget = 0;
  auto* ntw = app.add_subcommand("nt-witness", "build and verify an N(T) non-properness witness");
  ntw->add_option("--module", nt_module, "module JSON or nt-blocks:{w:c,...};m0;m0p")->required();
  ntw->add_option("--subspaces", nt_subspaces, "invariant family JSON (default: the zero subspace)");
  ntw->add_option("--field", nt_field, "field descriptor for nt-blocks");
  ntw->add_option("--sample-budget", nt_budget, "random candidates to try before the sweep");

  std::string co_group, co_normal, co_wrep, co_mfam, co_vrep, co_vfam;
  auto* coin = app.add_subcommand("coinduce", "coinduce a module and verify combined goodness");
  coin->add_option("--group", co_group, "ambient group JSON")->required();
  coin->add_option("--normal", co_normal, "normal subgroup JSON")->required();
  coin->add_option("--wrep", co_wrep, "subgroup representation JSON")->required();
  coin->add_option("--m-family", co_mfam, "subspace family JSON inside W")->required();
  coin->add_option("--vrep", co_vrep, "ambient representation JSON")->required();
  coin->add_option("--v-family", co_vfam, "subspace family JSON inside V")->required();

  auto* example = app.add_subcommand("example", "run a worked example");
  example->require_subcommand(1);
  std::string ex_field;
  int ex_n = 2;
  auto* ex_ut = example->add_subcommand("upper-triangular", "freeness of B_n on the upper-triangular space");
  ex_ut->add_option("--field", ex_field, "field descriptor (default GF(3))");
  ex_ut->add_option("--n", ex_n, "matrix size (default 2)");
  std::string ex_cf;
  auto* ex_charp = example->add_subcommand("sl2-charp", "characteristic-p invariant subspace and freeness");
  ex_charp->add_option("--field", ex_cf, "finite field descriptor (default GF(3))");
  std::string ex_pf, ex_space = "V2+V4";
  auto* ex_pgl = example->add_subcommand("pgl2-invariants", "swap-fixed vectors generate the module");
  ex_pgl->add_option("--field", ex_pf, "field descriptor (default GF(5))");
  ex_pgl->add_option("--space", ex_space, "V2, V4 or V2+V4 (default V2+V4)");

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run a built-in verification suite");
  suite->add_option("name", suite_name, "suite name; see --help for the list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; parse errors exit 2
  }

  try {
    if (*descend) return cmd_descend(ext_desc, group_spec, g);
    if (*vfree) return cmd_verify_free(vf_rep, vf_family, vf_field, g);
    if (*cinv) return cmd_check_invariant(ci_rep, ci_subspace, ci_field, g);
    if (*ntw) return cmd_nt_witness(nt_module, nt_subspaces, nt_field, nt_budget, g);
    if (*coin) return cmd_coinduce(co_group, co_normal, co_wrep, co_mfam, co_vrep, co_vfam, g);
    if (*example) {
      if (*ex_ut)
        return cmd_verify_free("upper-triangular:" + std::to_string(ex_n), "",
                               ex_field.empty() ? "GF(3)" : ex_field, g);
      if (*ex_charp) {
        // W_{2p-2} (+) V_1 over the requested field with the canonical family
        FieldPtr f = parse_field(ex_cf.empty() ? "GF(3)" : ex_cf);
        int d = static_cast<int>(2 * f->characteristic() - 2);
        SymPowerRep sd = sym_power(f, d, g.element_cap), s1 = sym_power(f, 1, g.element_cap);
        Representation w = direct_sum(sd.rep, s1.rep);
        Subspace ld = char_p_subspace(f, d);
        std::vector<Subspace> fam = {detail::embed_left(ld, 2, true),
                                     detail::embed_left(Subspace::full(f, d + 1), 2, false)};
        WallClock wc;
        GoodnessSpec spec(w, fam);
        FreenessReport rep = f->order() <= 3 ? check_set_free(spec, parse_mode(g.mode, g.seed))
                                             : check_set_free_kernels(spec);
        Certificate cert;
        cert.claim = "charp.w-free";
        cert.command = "goodrep example sl2-charp --field " +
                       quote_if_needed(f->descriptor()) + " --seed " + std::to_string(g.seed);
        cert.seed = g.seed;
        cert.inputs_digest = fnv1a_digest(f->descriptor());
        cert.status = rep.status;
        cert.payload = {{"field", f->descriptor()}, {"degree", d},
                        {"report", freeness_to_json(rep)}};
        cert.wall_ms = wc.ms();
        emit(cert, g.out);
        return exit_for(rep.status);
      }
      if (*ex_pgl) {
        FieldPtr f = parse_field(ex_pf.empty() ? "GF(5)" : ex_pf);
        Matrix sw = swap_matrix(f);
        Representation rep = [&]() {
          if (ex_space == "V2") return sym_power(f, 2, g.element_cap).rep;
          if (ex_space == "V4") return sym_power(f, 4, g.element_cap).rep;
          require(ex_space == "V2+V4", Errc::InvalidArgument,
                  "--space must be V2, V4 or V2+V4");
          return direct_sum(sym_power(f, 2, g.element_cap).rep,
                            sym_power(f, 4, g.element_cap).rep);
        }();
        Matrix s = ex_space == "V2+V4"
                       ? detail::block_diag(sym_power_image(f, 2, sw), sym_power_image(f, 4, sw))
                       : sym_power_image(f, rep.dim() - 1, sw);
        WallClock wc;
        Subspace fixed = Subspace::right_kernel(s - Matrix::identity(f, rep.dim()));
        Subspace gen = rep.generated_submodule(fixed);
        Certificate cert;
        cert.claim = "pgl2.fixed-generates";
        cert.command = "goodrep example pgl2-invariants --field " +
                       quote_if_needed(f->descriptor()) + " --space " + ex_space;
        cert.inputs_digest = fnv1a_digest(f->descriptor() + "|" + ex_space);
        cert.status = gen.is_full() ? "verified" : "refuted";
        cert.payload = {{"space", ex_space}, {"fixed_dim", fixed.dim()},
                        {"generated_dim", gen.dim()}, {"dim", rep.dim()}};
        cert.wall_ms = wc.ms();
        emit(cert, g.out);
        return exit_for(cert.status);
      }
    }
    if (*suite) return cmd_suite(suite_name, g);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
