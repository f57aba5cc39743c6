// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criterion 9 is flag-gated behind --deep.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

#include "linkmod/cone.hpp"
#include "linkmod/complexity.hpp"
#include "linkmod/eisenbud.hpp"
#include "linkmod/repro7.hpp"
#include "linkmod/script.hpp"
#include "linkmod/verdicts.hpp"

using namespace linkmod;

namespace {

constexpr auto kLocal = MonomialOrder::antigraded_revlex_local;
int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PresentedModule cyclic(const RingSpec& R, const std::vector<std::string>& gens) {
  return cyclic_module(R, parse_ideal(R, gens));
}

Fingerprint fp(const PresentedModule& M) { return module_fingerprint(M, 6, 4); }

// ---- criteria 1 and 2: the quotient-ring reproduction ----------------

void criterion_1_and_2() {
  auto t0 = std::chrono::steady_clock::now();
  Repro7Options opt;
  opt.characteristic = 32003;
  Repro7Result res = run_repro7(opt);
  bool mingens12 = false, in_n6 = false, lift_ok = false;
  bool chain1 = false, chain2 = false, chain3 = false;
  std::string counts;
  for (const auto& rec : res.records) {
    if (!rec.check) continue;
    const std::string& e = rec.check->expr;
    if (e.find("mingens(I)) == 12") != std::string::npos) mingens12 = rec.check->pass;
    if (e.find("lies in n^6") != std::string::npos) in_n6 = rec.check->pass;
    if (e.find("mingens(q)) == 12 or 13") != std::string::npos) lift_ok = rec.check->pass;
    if (e.find("(x^2)^4") != std::string::npos) chain1 = rec.check->pass;
    if (e.find("(x^7, y^7, u) inside q") != std::string::npos) chain2 = rec.check->pass;
    if (e.find("q inside (x^2, y^2, u)") != std::string::npos) chain3 = rec.check->pass;
    if (e.find("mingens(I)) == 12") != std::string::npos && !rec.payload_json.empty())
      counts = rec.payload_json.substr(0, 60);
  }
  double t1 = seconds_since(t0);
  bool c1 = mingens12 && in_n6 && lift_ok && t1 < 60.0;
  report(1, c1,
         "mingens(I)=12 [" + std::string(mingens12 ? "ok" : "computed 2, see README known issues") +
             "], gens in n^6 [" + (in_n6 ? "ok" : "no") + "], lift 12/13 [" +
             (lift_ok ? "ok" : "computed 3") + "], " + std::to_string(t1).substr(0, 5) + "s");
  report(2, chain1 && chain2 && chain3 && t1 < 30.0,
         "containment chain ((x^2)^4,(y^2)^4,u) in (x^7,y^7,u) in q in (x^2,y^2,u)");
}

// ---- criteria 3 and 4: cone concentration + MCM certification ---------

struct ConeInstance {
  RingSpec R;
  std::vector<std::string> mgens;
  std::vector<std::string> qgens;
};

std::vector<ConeInstance> cone_instances() {
  std::vector<ConeInstance> out;
  // positive-dimensional lead instance
  out.push_back({parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal), {"x"}, {"x*y"}});
  // Artinian Gorenstein instances
  for (int n = 3; n <= 5; ++n) {
    RingSpec A = parse_ring(FieldSpec::prime(32003), {"x"}, kLocal, {"x^" + std::to_string(n)});
    for (int j = 0; j <= n - 1; ++j) {       // q = (x^j), j = 0 means (0)
      for (int i = 1; i <= (j == 0 ? n - 1 : j - 1); ++i) {
        ConeInstance ci;
        ci.R = A;
        ci.mgens = {"x^" + std::to_string(i)};
        if (j >= 2) ci.qgens = {"x^" + std::to_string(j)};
        else if (j == 1) continue;  // A/(x) has no stable cyclic module with qM = 0
        out.push_back(ci);
      }
    }
  }
  RingSpec A2 = parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^2", "y^2"});
  for (const char* m : {"x", "y", "x+y", "x-y"}) out.push_back({A2, {m}, {}});
  out.push_back({A2, {"x", "y"}, {}});
  out.push_back({A2, {"x", "y"}, {"x"}});   // q = (x), M = k
  out.push_back({A2, {"x", "y"}, {"y"}});
  out.push_back({A2, {"x", "y"}, {"x+y"}});
  RingSpec A3 = parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^3", "y^2"});
  for (const char* m : {"x", "y", "x^2", "x+y", "x^2+y"}) out.push_back({A3, {m}, {}});
  out.push_back({A3, {"x", "y"}, {}});
  out.push_back({A3, {"x^2", "y"}, {}});
  out.push_back({A3, {"x^2", "x*y"}, {}});
  return out;
}

void criteria_3_and_4() {
  auto instances = cone_instances();
  int total = 0, conc_ok = 0, mcm_ok = 0;
  std::string first_bad;
  for (const auto& inst : instances) {
    try {
      PresentedModule M = cyclic(inst.R, inst.mgens);
      Ideal q = parse_ideal(inst.R, inst.qgens);
      if (!trace_and_stability(minimal_presentation(change_ring(M, link_via(M, q).B)).module).stable)
        continue;
      ++total;
      ConeComplex cone = ferrand_cone(M, q, 4);
      LinkageDatum d = link_via(M, q);
      bool ok = true;
      for (int32_t i = -1; i < 4; ++i) {
        PresentedModule H = cone_cohomology(cone, i);
        if (i == cone.g) {
          if (fp(H) != fp(d.N_A)) ok = false;
        } else if (!module_is_zero(H)) {
          ok = false;
        }
      }
      if (ok) ++conc_ok;
      else if (first_bad.empty()) first_bad = inst.mgens[0];

      MCMApprox ap = mcm_approx(cone, 8);
      if (ap.y_inside_x && ap.x_mcm && ap.projdim_Y <= krull_dim(inst.R)) ++mcm_ok;
    } catch (const Error& e) {
      if (first_bad.empty()) first_bad = std::string("error: ") + e.what();
    }
  }
  report(3, total >= 21 && conc_ok == total,
         "cone concentration H^i(C)=0 for i!=g and H^g = link on " + std::to_string(conc_ok) + "/" +
             std::to_string(total) + " instances" +
             (first_bad.empty() ? "" : " [first failure: " + first_bad + "]"));
  report(4, total >= 21 && mcm_ok == total,
         "MCM certification (projdim B^g <= dim A, Ext^i(Z^g, A)=0 for 1..8) on " +
             std::to_string(mcm_ok) + "/" + std::to_string(total) + " instances");
}

// ---- criterion 5: windowed equivalence harness -------------------------

void criterion_5(int64_t seed) {
  std::mt19937 rng(static_cast<uint32_t>(seed));
  std::vector<RingSpec> rings = {
      parse_ring(FieldSpec::prime(32003), {"x"}, kLocal, {"x^3"}),
      parse_ring(FieldSpec::prime(32003), {"x"}, kLocal, {"x^4"}),
      parse_ring(FieldSpec::prime(32003), {"x"}, kLocal, {"x^5"}),
      parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^2", "y^2"}),
      parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^3", "y^2"}),
  };
  std::vector<std::vector<std::string>> mpool_1 = {{"x"}, {"x^2"}, {"x^3"}, {"x^4"}};
  std::vector<std::vector<std::string>> mpool_2 = {{"x"}, {"y"}, {"x+y"}, {"x*y"}, {"x", "y"}, {"x^2", "y"}};
  int total = 0, agree = 0, self_agree = 0, periodic_needed = 0, periodic_fired = 0;
  std::string first_bad;
  for (int t = 0; total < 52; ++t) {
    const RingSpec& B = rings[static_cast<size_t>(t) % rings.size()];
    bool one_var = B.nvars() == 1;
    const auto& pool = one_var ? mpool_1 : mpool_2;
    std::vector<std::string> mg = pool[rng() % pool.size()];
    PresentedModule M = cyclic(B, mg);
    if (module_is_zero(M) || !trace_and_stability(M).stable) continue;
    PresentedModule N;
    try {
      N = horizontal_link(M);
    } catch (const Error&) {
      continue;
    }
    std::vector<std::string> lg = pool[rng() % pool.size()];
    PresentedModule L = (rng() % 5 == 0) ? free_module(B, 1) : cyclic(B, lg);
    ++total;

    VanishingVerdict ve = vanishing_verdict(L, M, VanishingMode::ext_from, 2, 8);
    VanishingVerdict vt = vanishing_verdict(L, N, VanishingMode::tor, 2, 8);
    if (ve.vanishes_on_window == vt.vanishes_on_window) ++agree;
    else if (first_bad.empty()) first_bad = "L=(" + lg[0] + ") M=(" + mg[0] + ")";

    VanishingVerdict vm = vanishing_verdict(M, M, VanishingMode::ext_from, 2, 8);
    VanishingVerdict vn = vanishing_verdict(N, N, VanishingMode::ext_from, 2, 8);
    if (vm.vanishes_on_window == vn.vanishes_on_window) ++self_agree;

    if (one_var) {
      periodic_needed += 2;
      if (ve.periodic_upgrade) ++periodic_fired;
      if (vm.periodic_upgrade) ++periodic_fired;
    }
  }
  bool ok = total >= 50 && agree == total && self_agree == total && periodic_fired == periodic_needed;
  report(5, ok,
         "Ext(L,M)/Tor(L,N) verdicts agree " + std::to_string(agree) + "/" + std::to_string(total) +
             ", Ext(M,M)/Ext(N,N) agree " + std::to_string(self_agree) + "/" + std::to_string(total) +
             ", periodicity upgrade " + std::to_string(periodic_fired) + "/" +
             std::to_string(periodic_needed) + (first_bad.empty() ? "" : " [first: " + first_bad + "]"));
}

// ---- criterion 6: duality dimensions -----------------------------------

void criterion_6(int64_t seed) {
  std::mt19937 rng(static_cast<uint32_t>(seed) + 1);
  std::vector<RingSpec> rings = {
      parse_ring(FieldSpec::prime(32003), {"x"}, kLocal, {"x^4"}),
      parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^2", "y^2"}),
      parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^3", "y^2"}),
  };
  std::vector<std::vector<std::string>> pool_1 = {{"x"}, {"x^2"}, {"x^3"}};
  std::vector<std::vector<std::string>> pool_2 = {{"x"}, {"y"}, {"x+y"}, {"x*y"}, {"x", "y"}, {"x^2"}, {"x^2", "y"}};
  int total = 0, match = 0;
  for (int t = 0; total < 51; ++t) {
    const RingSpec& B = rings[static_cast<size_t>(t) % rings.size()];
    const auto& pool = B.nvars() == 1 ? pool_1 : pool_2;
    PresentedModule M = cyclic(B, pool[rng() % pool.size()]);
    PresentedModule L = cyclic(B, pool[rng() % pool.size()]);
    if (module_is_zero(M) || module_is_zero(L)) continue;
    ++total;
    PresentedModule LD = artinian_dual(L);
    ExtTor e1(M, L, 6);
    ExtTor e2(M, LD, 6);
    bool ok = true;
    for (int32_t i = 0; i <= 6; ++i) {
      auto a = module_length(e1.ext(i));
      auto b = module_length(e2.tor(i));
      if (!a || !b || *a != *b) ok = false;
    }
    if (ok) ++match;
  }
  report(6, total >= 50 && match == total,
         "l(Ext^i(M,L)) = l(Tor_i(M,L dual)) for 0<=i<=6 on " + std::to_string(match) + "/" +
             std::to_string(total) + " pairs");
}

// ---- criterion 7: complexity calibration -------------------------------

void criterion_7() {
  RingSpec B = parse_ring(FieldSpec::rationals(), {"x"}, kLocal, {"x^3"});
  ComplexityEstimate cf = complexity_estimate(free_module(B, 2), 8);
  bool ok0 = cf.cls == CxClass::zero && cf.certified;

  ComplexityEstimate c1 = complexity_estimate(residue_field_module(B), 8);
  bool ok1 = c1.cls == CxClass::one;
  for (int i = 0; i <= 8; ++i) ok1 = ok1 && c1.betti.betti[static_cast<size_t>(i)] == 1;

  RingSpec A = parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal, {"x^2", "y^2"});
  ComplexityEstimate c2 = complexity_estimate(residue_field_module(A), 8);
  bool ok2 = c2.cls == CxClass::two;
  for (int i = 0; i <= 8; ++i) ok2 = ok2 && c2.betti.betti[static_cast<size_t>(i)] == i + 1;

  report(7, ok0 && ok1 && ok2,
         "cx(free)=0 certified, cx(k over k[x]/(x^3))=1 with beta=1, cx(k over k[x,y]/(x^2,y^2))=2 with beta_i=i+1");
}

// ---- criterion 8: Eisenbud identity ------------------------------------

void criterion_8() {
  bool all = true;
  std::string detail;
  {
    RingSpec B = parse_ring(FieldSpec::prime(32003), {"x"}, kLocal, {"x^3"});
    for (const char* g : {"x", "x^2"}) {
      PresentedModule M = cyclic(B, {g});
      CohomOperators ops = eisenbud_operators(M, 8);
      bool ident = operators_identity_exact(ops);
      bool chain = operators_chain_maps(ops);
      auto p = resolution_period_start(ops.res, 8);
      bool periodic = p && *p <= 2;
      bool iso = true;
      for (int32_t s = (p ? *p + 2 : 2); s <= 8; ++s)
        if (!map_is_isomorphism(ops.t[0][static_cast<size_t>(s)])) iso = false;
      if (!(ident && chain && periodic && iso)) {
        all = false;
        detail = std::string("hypersurface case M=B/(") + g + ")";
      }
    }
    PresentedModule K = residue_field_module(B);
    CohomOperators ok = eisenbud_operators(K, 8);
    if (!(operators_identity_exact(ok) && operators_chain_maps(ok))) all = false;
  }
  {
    RingSpec A = parse_ring(FieldSpec::prime(32003), {"x", "y"}, kLocal, {"x^2", "y^2"});
    for (const char* g : {"x", "y", "x+y"}) {
      PresentedModule M = cyclic(A, {g});
      CohomOperators ops = eisenbud_operators(M, 6);
      if (!(operators_identity_exact(ops) && operators_chain_maps(ops))) {
        all = false;
        detail = std::string("codim-2 case M=A/(") + g + ")";
      }
    }
    CohomOperators ok = eisenbud_operators(residue_field_module(A), 6);
    if (!(operators_identity_exact(ok) && operators_chain_maps(ok))) all = false;
  }
  report(8, all, "lifted d^2 = sum f_j t_j exactly; operators are chain maps; hypersurface periodic from <=2 with t iso" +
                     (detail.empty() ? "" : " [failed at " + detail + "]"));
}

// ---- criterion 9: deep separation (flag-gated) --------------------------

void criterion_9(bool deep, double budget) {
  if (!deep) {
    std::printf("SKIP criterion 9: flag-gated; run with --deep\n");
    return;
  }
  Repro7Options opt;
  opt.characteristic = 32003;
  opt.deep = true;
  opt.deep_budget_seconds = budget;
  Repro7Result res = run_repro7(opt);
  bool skipped = false, cxN2 = false, cxL1 = false, seenN = false, seenL = false;
  for (const auto& rec : res.records) {
    if (rec.kind == "deep-skipped") skipped = true;
    if (rec.check && rec.check->expr.find("cx evidence for N") != std::string::npos) {
      seenN = true;
      cxN2 = rec.check->pass;
    }
    if (rec.check && rec.check->expr.find("CI-linked L") != std::string::npos) {
      seenL = true;
      cxL1 = rec.check->pass;
    }
  }
  if (skipped) {
    std::printf("SKIP criterion 9: deep stage exceeded its budget (downgraded, not failed)\n");
    return;
  }
  report(9, seenN && seenL && cxN2 && cxL1,
         std::string("deep separation: cx N class 2 [") + (cxN2 ? "ok" : "computed 1, see README known issues") +
             "], cx L class 1 [" + (cxL1 ? "ok" : "no") + "]");
}

// ---- criterion 10: determinism ------------------------------------------

void criterion_10() {
  auto run_json = [](const std::string& script) {
    ScriptOptions opt;
    opt.format = EmitFormat::json;
    ScriptResult r = run_script_text(script, opt);
    std::string bytes;
    for (const auto& rec : r.records) bytes += emit_record(rec, EmitFormat::json);
    return bytes;
  };
  std::string script =
      "ring A = char 32003 vars x, y order local mod x^2, y^2;\n"
      "let M = cyclic(ideal(x));\n"
      "show betti(M, 8);\n"
      "show fingerprint(M, 6, 4);\n"
      "show std(intersect(ideal(x), ideal(y)));\n"
      "let v = verdict(kmod(), M, ext_from, 2, 8);\n"
      "show v;\n"
      "check vanishes(v) == false;\n";
  bool script_det = run_json(script) == run_json(script);

  auto repro_json = [] {
    Repro7Options opt;
    opt.characteristic = 32003;
    Repro7Result r = run_repro7(opt);
    std::string bytes;
    for (const auto& rec : r.records) bytes += emit_record(rec, EmitFormat::json);
    return bytes;
  };
  bool repro_det = repro_json() == repro_json();
  report(10, script_det && repro_det, "repeated runs produce byte-identical JSON (script + repro)");
}

}  // namespace

int main(int argc, char** argv) {
  bool deep = false;
  int64_t seed = 42;
  double budget = 1800.0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--deep") == 0) deep = true;
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::atoll(argv[++i]);
    else if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc) budget = std::atof(argv[++i]);
  }
  try {
    criterion_1_and_2();
    criteria_3_and_4();
    criterion_5(seed);
    criterion_6(seed);
    criterion_7();
    criterion_8();
    criterion_9(deep, budget);
    criterion_10();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance: unexpected exception: %s\n", e.what());
    return 99;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
