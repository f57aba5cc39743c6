#include "linkmod/repro7.hpp"

#include <chrono>
#include <json.hpp>

#include "linkmod/complexity.hpp"
#include "linkmod/linkage.hpp"

namespace linkmod {

namespace {

using json = nlohmann::ordered_json;

struct Emitter {
  std::vector<OutputRecord>* records;
  Provenance prov;
  bool any_fail = false;

  void check(const std::string& expr, bool pass, json payload = json()) {
    if (!pass) any_fail = true;
    OutputRecord rec;
    rec.kind = "check";
    rec.payload_json = payload.is_null() ? "null" : payload.dump();
    rec.payload_text = std::string(pass ? "PASS" : "FAIL") + ": " + expr;
    rec.provenance = prov;
    rec.check = CheckInfo{expr, pass};
    records->push_back(std::move(rec));
  }

  void info(const std::string& kind, json payload, const std::string& text) {
    OutputRecord rec;
    rec.kind = kind;
    rec.payload_json = payload.dump();
    rec.payload_text = text;
    rec.provenance = prov;
    records->push_back(std::move(rec));
  }
};

bool contains(Ideal& big, const Ideal& small) {
  for (const auto& g : small.gens)
    if (!ideal_member(g, big)) return false;
  return true;
}

}  // namespace

Repro7Result run_repro7(const Repro7Options& opt) {
  Repro7Result out;
  Emitter em;
  em.records = &out.records;
  em.prov.characteristic = opt.characteristic;
  em.prov.order = "local";
  em.prov.resolution_bound = opt.bound;
  em.prov.window_lo = 2;
  em.prov.window_hi = opt.bound;
  em.prov.seed = opt.seed;

  FieldSpec field = opt.characteristic == 0 ? FieldSpec::rationals()
                                            : FieldSpec::prime(opt.characteristic);
  auto local = MonomialOrder::antigraded_revlex_local;

  // stage 1: R = P/(u), I = (x^7, y^7) : (xy + yz + xz)
  RingSpec P = make_ring(field, {"x", "y", "z"}, local);
  Polynomial u = parse_poly("x^2+y^2+z^2", P);
  RingSpec R = make_ring(field, {"x", "y", "z"}, local, {u});

  Ideal I = colon_ideal(parse_ideal(R, {"x^7", "y^7"}), parse_ideal(R, {"x*y+y*z+x*z"}));
  std::vector<Polynomial> mg = minimal_generators(I);
  {
    json payload;
    payload["mingens_count"] = mg.size();
    json gens = json::array();
    for (const auto& g : mg) gens.push_back(poly_to_string(R, g));
    payload["mingens"] = gens;
    em.info("ideal", payload, "I = (x^7,y^7):(xy+yz+xz), " + std::to_string(mg.size()) +
                                  " minimal generators");
    em.check("count(mingens(I)) == 12", mg.size() == 12, payload);
  }
  {
    Ideal Img = make_ideal(R, mg);
    bool in6 = contained_in_power(Img, 6);
    em.check("every minimal generator of I lies in n^6", in6);
  }

  // stage 2: lift q = (preimages of mingens(I)) + (u) in P
  std::vector<Polynomial> qgens = mg;  // same polynomial frame
  qgens.push_back(u);
  Ideal q = make_ideal(P, qgens);
  std::vector<Polynomial> qmg = minimal_generators(q);
  em.check("count(mingens(q)) == 12 or 13", qmg.size() == 12 || qmg.size() == 13,
           json{{"mingens_count", qmg.size()}});

  // containment chain ((x^2)^4, (y^2)^4, u) ⊆ (x^7, y^7, u) ⊆ q ⊆ (x^2, y^2, u)
  Ideal c1 = parse_ideal(P, {"x^8", "y^8", "x^2+y^2+z^2"});
  Ideal c2 = parse_ideal(P, {"x^7", "y^7", "x^2+y^2+z^2"});
  Ideal c4 = parse_ideal(P, {"x^2", "y^2", "x^2+y^2+z^2"});
  em.check("((x^2)^4, (y^2)^4, u) inside (x^7, y^7, u)", contains(c2, c1));
  em.check("(x^7, y^7, u) inside q", contains(q, c2));
  em.check("q inside (x^2, y^2, u)", contains(c4, q));

  if (!opt.deep) {
    out.exit_code = em.any_fail ? 1 : 0;
    return out;
  }

  // deep stage: A = P/(u, f^4) with f = x^2; M = E/(u,v)E for E = P/(x), v = y^2
  auto t0 = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
           opt.deep_budget_seconds;
  };
  auto skip = [&](const std::string& stage) {
    em.info("deep-skipped", json{{"stage", stage}, {"budget_seconds", opt.deep_budget_seconds}},
            "deep stage skipped: " + stage + " (budget exhausted)");
  };

  try {
    RingSpec A = make_ring(field, {"x", "y", "z"}, local,
                           {u, parse_poly("x^8", P)});
    PresentedModule M = cyclic_module(A, parse_ideal(A, {"x", "y^2"}));

    // q̄ = q/(u, f^4) as an ideal of A
    std::vector<Polynomial> qbar_gens;
    for (const auto& g : qmg) {
      Polynomial r = nf_mod_quotient(A, g);
      if (!r.is_zero()) qbar_gens.push_back(g);
    }
    Ideal qbar = make_ideal(A, qbar_gens);

    if (over_budget()) { skip("quasi-Gorenstein linkage"); out.exit_code = em.any_fail ? 1 : 0; return out; }
    LinkageDatum dq = link_via(M, qbar);
    ComplexityTransferReport repq = complexity_transfer_check(dq, 6);
    em.info("cx-transfer",
            json{{"q", "qbar (lifted colon ideal)"},
                 {"cx_M", cx_class_name(repq.cx_M.cls)},
                 {"cx_N", cx_class_name(repq.cx_N.cls)},
                 {"cx_Aq", cx_class_name(repq.cx_Aq.cls)},
                 {"q_type", repq.q_type},
                 {"regime", repq.regime},
                 {"matches_prediction", repq.matches_prediction},
                 {"label", repq.label}},
            "quasi-Gorenstein link: cx M = " + cx_class_name(repq.cx_M.cls) +
                ", cx N = " + cx_class_name(repq.cx_N.cls) +
                ", cx A/q = " + cx_class_name(repq.cx_Aq.cls));
    em.check("deep: cx evidence for N is class 2", repq.cx_N.cls == CxClass::two);

    if (over_budget()) { skip("CI linkage"); out.exit_code = em.any_fail ? 1 : 0; return out; }
    // CI link via (t^i), t = y^2 (regular on A, annihilates M)
    std::optional<LinkageDatum> dci;
    std::string tpow;
    for (int i = 1; i <= 3 && !dci; ++i) {
      tpow = "y^" + std::to_string(2 * i);
      try {
        dci = link_via(M, parse_ideal(A, {tpow}));
      } catch (const Error&) {
        // unstable over A/(t^i); take the next power
      }
    }
    if (!dci) throw Error("repro7: no CI link with a stable module found");
    ComplexityTransferReport repc = complexity_transfer_check(*dci, 6);
    em.info("cx-transfer",
            json{{"q", "(" + tpow + ")"},
                 {"cx_M", cx_class_name(repc.cx_M.cls)},
                 {"cx_N", cx_class_name(repc.cx_N.cls)},
                 {"cx_Aq", cx_class_name(repc.cx_Aq.cls)},
                 {"q_type", repc.q_type},
                 {"regime", repc.regime},
                 {"matches_prediction", repc.matches_prediction},
                 {"label", repc.label}},
            "CI link via (" + tpow + "): cx M = " + cx_class_name(repc.cx_M.cls) +
                ", cx L = " + cx_class_name(repc.cx_N.cls));
    em.check("deep: cx evidence for the CI-linked L is class 1", repc.cx_N.cls == CxClass::one);
  } catch (const Error& err) {
    em.info("deep-error", json{{"error", err.what()}}, std::string("deep stage error: ") + err.what());
    em.any_fail = true;
  }

  out.exit_code = em.any_fail ? 1 : 0;
  return out;
}

}  // namespace linkmod
