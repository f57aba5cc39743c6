#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkmod/cone.hpp"
#include "linkmod/complexity.hpp"
#include "linkmod/eisenbud.hpp"
#include "linkmod/verdicts.hpp"

using namespace linkmod;

namespace {

constexpr auto kLocal = MonomialOrder::antigraded_revlex_local;

RingSpec b_x3() { return parse_ring(FieldSpec::rationals(), {"x"}, kLocal, {"x^3"}); }
RingSpec kxy_local() { return parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal); }

PresentedModule cyclic(const RingSpec& R, const std::vector<std::string>& gens) {
  return cyclic_module(R, parse_ideal(R, gens));
}

Fingerprint fp(const PresentedModule& M) { return module_fingerprint(M, 4, 3); }

}  // namespace

TEST_CASE("horizontal link: B/(x) over k[x]/(x^3) links to B/(x^2)") {
  RingSpec B = b_x3();
  PresentedModule M = cyclic(B, {"x"});
  PresentedModule N = horizontal_link(M);
  CHECK(fp(N) == fp(cyclic(B, {"x^2"})));

  // double link returns the partner
  PresentedModule NN = horizontal_link(N);
  CHECK(fp(NN) == fp(M));

  CHECK_THROWS_AS(horizontal_link(free_module(B, 1)), Error);
}

TEST_CASE("link_via: ideal linkage oracle (xy):(x) = (y)") {
  RingSpec A = kxy_local();
  PresentedModule M = cyclic(A, {"x"});
  Ideal q = parse_ideal(A, {"x*y"});
  LinkageDatum d = link_via(M, q);
  CHECK(d.g == 1);
  CHECK(fp(d.N_A) == fp(cyclic(A, {"y"})));

  // q = (0) over a Gorenstein Artinian ring
  RingSpec B = b_x3();
  LinkageDatum d2 = link_via(cyclic(B, {"x"}), make_ideal(B, std::vector<Polynomial>{}));
  CHECK(fp(d2.N_A) == fp(cyclic(B, {"x^2"})));

  // q not annihilating M
  Ideal bad = parse_ideal(A, {"y"});
  CHECK_THROWS_AS(link_via(cyclic(A, {"x"}), bad), Error);
}

TEST_CASE("ferrand cone: k[x,y] local, M = A/(x), q = (xy)") {
  RingSpec A = kxy_local();
  PresentedModule M = cyclic(A, {"x"});
  Ideal q = parse_ideal(A, {"x*y"});
  ConeComplex cone = ferrand_cone(M, q, 4);
  CHECK(cone.g == 1);
  // C^{-1} = A, C^0 = A^2, C^1 = A
  CHECK(cone.C.rank_at(-1) == 1);
  CHECK(cone.C.rank_at(0) == 2);
  CHECK(cone.C.rank_at(1) == 1);
  CHECK(cone.C.rank_at(2) == 0);

  // concentration: H^i = 0 for i != g, H^g is the horizontal link
  for (int32_t i = -1; i < 4; ++i) {
    PresentedModule H = cone_cohomology(cone, i);
    if (i == cone.g) {
      CHECK(fp(H) == fp(cyclic(A, {"y"})));
    } else {
      CHECK(module_is_zero(H));
    }
  }
}

TEST_CASE("ferrand cone concentration on Artinian instances") {
  struct Inst {
    RingSpec R;
    std::vector<std::string> mgens;
    std::vector<std::string> qgens;
  };
  std::vector<Inst> instances;
  instances.push_back({b_x3(), {"x"}, {}});
  instances.push_back({parse_ring(FieldSpec::rationals(), {"x"}, kLocal, {"x^4"}), {"x^2"}, {}});
  instances.push_back(
      {parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal, {"x^2", "y^2"}), {"x", "y"}, {"x"}});
  for (const auto& inst : instances) {
    PresentedModule M = cyclic(inst.R, inst.mgens);
    Ideal q = parse_ideal(inst.R, inst.qgens);
    ConeComplex cone = ferrand_cone(M, q, 4);
    PresentedModule link = horizontal_link(
        minimal_presentation(change_ring(M, link_via(M, q).B)).module);
    for (int32_t i = -1; i < 4; ++i) {
      PresentedModule H = cone_cohomology(cone, i);
      if (i == cone.g) {
        CHECK(fp(restrict_scalars(link, inst.R)) == fp(H));
      } else {
        CHECK(module_is_zero(H));
      }
    }
  }
}

TEST_CASE("mcm approximation: the k[x,y] instance") {
  RingSpec A = kxy_local();
  PresentedModule M = cyclic(A, {"x"});
  ConeComplex cone = ferrand_cone(M, parse_ideal(A, {"x*y"}), 4);
  MCMApprox ap = mcm_approx(cone, 6);
  CHECK(ap.y_inside_x);
  CHECK(ap.x_mcm);
  CHECK(ap.projdim_Y <= krull_dim(A));
  // X free of rank 1, Y ≅ A (image of multiplication by y), N = A/(y)
  Resolution rx = resolve_module(ap.X, 2);
  CHECK(rx.betti.betti == std::vector<int32_t>{1, 0, 0});
  Resolution ry = resolve_module(ap.Y, 2);
  CHECK(ry.betti.betti == std::vector<int32_t>{1, 0, 0});
  CHECK(fp(ap.N) == fp(cyclic(A, {"y"})));
}

TEST_CASE("mcm approximation certifies over Artinian base") {
  RingSpec B = b_x3();
  PresentedModule M = cyclic(B, {"x"});
  ConeComplex cone = ferrand_cone(M, make_ideal(B, std::vector<Polynomial>{}), 4);
  MCMApprox ap = mcm_approx(cone, 6);
  CHECK(ap.y_inside_x);
  CHECK(ap.x_mcm);
  CHECK(ap.projdim_Y <= 0);
  CHECK(ap.lengths_match);
  CHECK(fp(ap.N) == fp(cyclic(B, {"x^2"})));
}

TEST_CASE("complexity calibration") {
  RingSpec B = b_x3();
  ComplexityEstimate cf = complexity_estimate(free_module(B, 2), 8);
  CHECK(cf.cls == CxClass::zero);
  CHECK(cf.certified);

  ComplexityEstimate c1 = complexity_estimate(residue_field_module(B), 8);
  CHECK(c1.cls == CxClass::one);
  for (int i = 0; i <= 8; ++i) CHECK(c1.betti.betti[i] == 1);

  RingSpec A = parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal, {"x^2", "y^2"});
  ComplexityEstimate c2 = complexity_estimate(residue_field_module(A), 8);
  CHECK(c2.cls == CxClass::two);
  for (int i = 0; i <= 8; ++i) CHECK(c2.betti.betti[i] == i + 1);
}

TEST_CASE("complexity transfer: q = 0 over k[x]/(x^3)") {
  RingSpec B = b_x3();
  LinkageDatum d = link_via(cyclic(B, {"x"}), make_ideal(B, std::vector<Polynomial>{}));
  ComplexityTransferReport rep = complexity_transfer_check(d, 6);
  CHECK(rep.q_gorenstein_evidence);
  CHECK(rep.cx_M.cls == CxClass::one);
  CHECK(rep.cx_N.cls == CxClass::one);
  CHECK(rep.matches_prediction);
}

TEST_CASE("eisenbud operators over the hypersurface k[x]/(x^3)") {
  RingSpec B = b_x3();
  PresentedModule k = residue_field_module(B);
  CohomOperators ops = eisenbud_operators(k, 6);
  REQUIRE(ops.f.size() == 1);
  CHECK(operators_identity_exact(ops));
  CHECK(operators_chain_maps(ops));
  for (int32_t s = 2; s <= 6; ++s) {
    const FreeModuleMap& t = ops.t[0][static_cast<size_t>(s)];
    REQUIRE(t.rows == 1);
    REQUIRE(t.cols == 1);
    CHECK(map_is_isomorphism(t));
  }
  CHECK(resolution_two_periodic(ops.res, 6));
  CHECK(is_hypersurface(B));

  // free module: resolution has length 0, all operators vanish
  CohomOperators fo = eisenbud_operators(free_module(B, 2), 4);
  for (int32_t s = 2; s <= 4; ++s) CHECK(fo.t[0][static_cast<size_t>(s)].cols == 0);
}

TEST_CASE("eisenbud operators over k[x,y]/(x^2,y^2): two commuting chain maps") {
  RingSpec A = parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal, {"x^2", "y^2"});
  PresentedModule k = residue_field_module(A);
  CohomOperators ops = eisenbud_operators(k, 5);
  REQUIRE(ops.f.size() == 2);
  CHECK(operators_identity_exact(ops));
  CHECK(operators_chain_maps(ops));
  CHECK(!is_hypersurface(A));
}

TEST_CASE("vanishing verdicts") {
  RingSpec B = b_x3();
  PresentedModule L = free_module(B, 1);
  PresentedModule M = cyclic(B, {"x"});
  for (auto mode : {VanishingMode::ext_from, VanishingMode::ext_into, VanishingMode::tor}) {
    VanishingVerdict v = mode == VanishingMode::ext_into
                             ? vanishing_verdict(M, L, mode, 1, 6)
                             : vanishing_verdict(L, M, mode, 1, 6);
    CHECK(v.vanishes_on_window);
  }

  // linked-pair agreement: M = B/(x) linked to N = B/(x^2), L = k
  PresentedModule N = horizontal_link(M);
  PresentedModule k = residue_field_module(B);
  VanishingVerdict e = vanishing_verdict(k, M, VanishingMode::ext_from, 2, 8);
  VanishingVerdict t = vanishing_verdict(k, N, VanishingMode::tor, 2, 8);
  CHECK(!e.vanishes_on_window);
  CHECK(!t.vanishes_on_window);
  CHECK(e.vanishes_on_window == t.vanishes_on_window);
  // hypersurface periodicity upgrade fires
  CHECK(e.periodic_upgrade);
  CHECK(t.periodic_upgrade);
}

TEST_CASE("linkage symmetry: fingerprint(link(link(M))) = fingerprint(M)") {
  RingSpec A = parse_ring(FieldSpec::rationals(), {"x", "y"}, kLocal, {"x^2", "y^2"});
  for (const char* g : {"x", "y", "x+y"}) {
    PresentedModule M = cyclic(A, {g});
    if (!trace_and_stability(M).stable) continue;
    PresentedModule L2 = horizontal_link(horizontal_link(M));
    CHECK(fp(L2) == fp(M));
  }
}
