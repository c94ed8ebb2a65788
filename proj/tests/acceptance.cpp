// Acceptance harness.  Runs every verification suite once, scores each
// acceptance criterion against its expected statuses and time budget,
// prints exactly one PASS/FAIL line per criterion, then reruns all suites
// with the same seeds to confirm the certificates reproduce byte for byte.
//
// Exit status: 0 iff every criterion passes.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "goodrep/suites.hpp"

using namespace goodrep;

namespace {

int failures = 0;

void line(const char* id, bool pass, const std::string& detail) {
  std::printf("%-4s %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

const Certificate* find_cert(const SuiteRun& run, const std::string& claim) {
  for (const auto& e : run.entries)
    if (e.cert.claim == claim) return &e.cert;
  return nullptr;
}

bool claim_has_status(const SuiteRun& run, const std::string& claim,
                      const std::string& want) {
  const Certificate* c = find_cert(run, claim);
  return c != nullptr && c->status == want;
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace

int main() {
  const uint64_t seed = 0;
  std::map<std::string, SuiteRun> runs;
  for (const auto& name : suite_names()) runs.emplace(name, run_suite(name, seed));

  // Criterion 1: exhaustive freeness of the upper-triangular family for
  // B2(GF(3)) and B2(GF(5)), each within one second.
  {
    const SuiteRun& r = runs.at("upper-triangular");
    const Certificate* c3 = find_cert(r, "upper-triangular.free.GF(3)");
    const Certificate* c5 = find_cert(r, "upper-triangular.free.GF(5)");
    bool ok = c3 && c5 && c3->status == "verified" && c5->status == "verified" &&
              c3->wall_ms < 1000.0 && c5->wall_ms < 1000.0;
    line("AC1", ok,
         "upper-triangular freeness: GF(3) " + (c3 ? c3->status : "missing") + " in " +
             ms(c3 ? c3->wall_ms : 0) + " ms, GF(5) " + (c5 ? c5->status : "missing") +
             " in " + ms(c5 ? c5->wall_ms : 0) + " ms (budget 1000 ms each)");
  }

  // Criterion 2: the GF(9)/GF(3) descent of B2(GF(9)): nonzero frozen
  // determinant, exhaustive rationality over all 576 elements, kernel-route
  // freeness of the descended action, and 100 closed-image samples, all
  // within sixty seconds.
  {
    const SuiteRun& r = runs.at("descent-gf9");
    bool det = claim_has_status(r, "descent.det-a", "verified");
    bool rat = claim_has_status(r, "descent.rationality", "verified");
    bool fre = claim_has_status(r, "descent.phi-free", "verified");
    bool cls = claim_has_status(r, "descent.closed-image", "verified");
    bool ok = det && rat && fre && cls && r.wall_ms < 60000.0;
    line("AC2", ok,
         std::string("descent GF(9)/GF(3): det-a ") + (det ? "verified" : "FAILED") +
             ", rationality " + (rat ? "verified" : "FAILED") + ", phi-free " +
             (fre ? "verified" : "FAILED") + ", closed-image " +
             (cls ? "verified" : "FAILED") + "; suite " + ms(r.wall_ms) +
             " ms (budget 60000 ms)");
  }

  // Criterion 3: the tuple subspace-status report, cross-checked against a
  // full enumeration oracle on all four tuples.
  {
    const SuiteRun& r = runs.at("descent-gf9");
    const Certificate* c = find_cert(r, "descent.subspace-report");
    bool ok = c && c->status == "verified";
    std::string agree = "payload missing";
    if (c && c->payload.contains("oracle_agrees_all"))
      agree = c->payload["oracle_agrees_all"].get<bool>() ? "oracle agrees on all 4 tuples"
                                                          : "ORACLE DISAGREES";
    line("AC3", ok,
         std::string("subspace-status report ") + (c ? c->status : "missing") + "; " + agree);
  }

  // Criterion 4: the W1 witness curve with its frozen Laurent family, plus
  // 100 seeded random N(T)-modules with transporter cross-validation over
  // GF(7), within thirty seconds total.
  {
    const SuiteRun& r = runs.at("nt-core");
    bool w1 = claim_has_status(r, "ntwitness.w1-curve", "verified");
    bool rnd = claim_has_status(r, "ntwitness.random-modules", "verified");
    bool ok = w1 && rnd && r.wall_ms < 30000.0;
    const Certificate* cr = find_cert(r, "ntwitness.random-modules");
    std::string counts;
    if (cr && cr->payload.contains("modules"))
      counts = ", " + std::to_string(cr->payload["modules"].get<int>()) + " modules";
    line("AC4", ok,
         std::string("N(T) witnesses: w1-curve ") + (w1 ? "verified" : "FAILED") +
             ", random-modules " + (rnd ? "verified" : "FAILED") + counts + "; suite " +
             ms(r.wall_ms) + " ms (budget 30000 ms)");
  }

  // Criterion 5: characteristic-p facts: L4 invariance over GF(3) and GF(9),
  // trivial stabilizers on the qualified set of W3 for q = 3 and q = 9, and a
  // characteristic-2 point with nontrivial stabilizer, within two minutes.
  {
    const SuiteRun& r = runs.at("charp-sl2");
    bool l4 = claim_has_status(r, "charp.l4-invariant", "verified");
    bool w3a = claim_has_status(r, "charp.w3-free.GF(3)", "verified");
    bool w3b = claim_has_status(r, "charp.w3-free.GF(3^2)", "verified");
    bool c2 = claim_has_status(r, "charp.char2-stabilizer", "refuted");
    bool ok = l4 && w3a && w3b && c2 && r.wall_ms < 120000.0;
    line("AC5", ok,
         std::string("char-p: l4-invariant ") + (l4 ? "verified" : "FAILED") +
             ", w3-free GF(3) " + (w3a ? "verified" : "FAILED") + ", w3-free GF(9) " +
             (w3b ? "verified" : "FAILED") + ", char2-stabilizer " +
             (c2 ? "refuted (witness found)" : "FAILED") + "; suite " + ms(r.wall_ms) +
             " ms (budget 120000 ms)");
  }

  // Criterion 6: the swap-fixed subspace generates all of V2, V4, and
  // V2 (+) V4 over GF(5), within five seconds.
  {
    const SuiteRun& r = runs.at("pgl2");
    bool v2 = claim_has_status(r, "pgl2.fixed-generates.V2", "verified");
    bool v4 = claim_has_status(r, "pgl2.fixed-generates.V4", "verified");
    bool vv = claim_has_status(r, "pgl2.fixed-generates.V2+V4", "verified");
    bool ok = v2 && v4 && vv && r.wall_ms < 5000.0;
    line("AC6", ok,
         std::string("fixed subspace generates: V2 ") + (v2 ? "yes" : "no") + ", V4 " +
             (v4 ? "yes" : "no") + ", V2+V4 " + (vv ? "yes" : "no") + "; suite " +
             ms(r.wall_ms) + " ms (budget 5000 ms)");
  }

  // Criterion 7: the coinduction running example verifies, and removing M1
  // from the family refutes with an explicit witness, within ten minutes.
  {
    const SuiteRun& r = runs.at("coinduce");
    bool good = claim_has_status(r, "coinduce.combined-verified", "verified");
    bool ctrl = claim_has_status(r, "coinduce.removal-refuted", "refuted");
    const Certificate* cc = find_cert(r, "coinduce.removal-refuted");
    bool has_witness = cc && cc->payload.contains("report") &&
                       cc->payload["report"].contains("witness") &&
                       !cc->payload["report"]["witness"].is_null();
    bool ok = good && ctrl && has_witness && r.wall_ms < 600000.0;
    line("AC7", ok,
         std::string("coinduction: combined ") + (good ? "verified" : "FAILED") +
             ", removal control " + (ctrl ? "refuted" : "FAILED") +
             (has_witness ? " with witness" : " WITHOUT witness") + "; suite " +
             ms(r.wall_ms) + " ms (budget 600000 ms)");
  }

  // Criterion 8: rerunning every suite with the same seed reproduces each
  // certificate payload byte for byte.
  {
    bool ok = true;
    std::string bad;
    for (const auto& name : suite_names()) {
      SuiteRun again = run_suite(name, seed);
      if (runs.at(name).payloads() != again.payloads()) {
        ok = false;
        bad += (bad.empty() ? "" : ", ") + name;
      }
    }
    line("AC8", ok,
         ok ? "determinism: all 6 suites reproduce byte-identical payloads"
            : "determinism FAILED for: " + bad);
  }

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
