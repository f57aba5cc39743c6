#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linkmod/ideal.hpp"
#include "linkmod/linalg.hpp"

using namespace linkmod;

namespace {

RingSpec ring3(FieldSpec f, MonomialOrder ord, std::vector<std::string> quot = {}) {
  return parse_ring(f, {"x", "y", "z"}, ord, quot);
}

bool ideals_equal(Ideal a, Ideal b) {
  for (const auto& g : a.gens)
    if (!ideal_member(g, b)) return false;
  for (const auto& g : b.gens)
    if (!ideal_member(g, a)) return false;
  return true;
}

Monomial rand_mono(std::mt19937& rng, size_t n, int maxe) {
  std::uniform_int_distribution<int> d(0, maxe);
  Monomial m(n);
  for (size_t v = 0; v < n; ++v) m.exp[v] = d(rng);
  return m;
}

// combinatorial oracle: colon of monomial ideals, (I : n) = (m_i / gcd(m_i, n))
std::vector<Monomial> mono_colon_oracle(const std::vector<Monomial>& I, const std::vector<Monomial>& J) {
  // (I : J) = ∩_j (I : n_j); intersection of monomial ideals via pairwise lcm
  std::vector<std::vector<Monomial>> parts;
  for (const auto& n : J) {
    std::vector<Monomial> p;
    for (const auto& m : I) p.push_back(mono_div(m, mono_gcd(m, n)));
    parts.push_back(p);
  }
  std::vector<Monomial> acc = parts.at(0);
  for (size_t k = 1; k < parts.size(); ++k) {
    std::vector<Monomial> next;
    for (const auto& a : acc)
      for (const auto& b : parts[k]) next.push_back(mono_lcm(a, b));
    acc = next;
  }
  return acc;
}

Ideal mono_ideal(const RingSpec& R, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> gens;
  for (const auto& m : ms) gens.push_back(poly_term(R, Scalar::one(R.field), m));
  return make_ideal(R, gens);
}

}  // namespace

TEST_CASE("std basis: hand-run Buchberger example") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  Ideal I = std_basis(parse_ideal(R, {"x^2+y^2", "x*y"}));
  REQUIRE(I.sbasis.size() == 3);
  std::vector<std::string> got;
  for (const auto& p : I.sbasis) got.push_back(poly_to_string(R, p));
  // S(x^2+y^2, xy) reduces to y^3, then all pairs reduce to zero;
  // basis is sorted by descending leading monomial
  CHECK(got[0] == "y^3");
  CHECK(got[1] == "x^2 + y^2");
  CHECK(got[2] == "x*y");
}

TEST_CASE("std basis: trivial and local examples") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x"}, MonomialOrder::antigraded_revlex_local);
  Ideal I = std_basis(parse_ideal(R, {"x"}));
  REQUIRE(I.sbasis.size() == 1);
  CHECK(poly_to_string(R, I.sbasis[0]) == "x");

  // local: lowest-degree term leads; lead ideal of (x - x^2) is (x)
  Ideal J = std_basis(parse_ideal(R, {"x - x^2"}));
  REQUIRE(J.sbasis.size() == 1);
  CHECK(J.sbasis[0].leading().mono.exp[0] == 1);

  // Mora division: x = (1-x)^{-1} (x - x^2) in the local ring
  CHECK(ideal_member(parse_poly("x", R), J));
  CHECK(normal_form(parse_poly("x", R), J).is_zero());
}

TEST_CASE("normal form basics") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  Ideal I = parse_ideal(R, {"x^2"});
  CHECK(normal_form(parse_poly("x^3", R), I).is_zero());
  Ideal J = parse_ideal(R, {"x"});
  CHECK(poly_to_string(R, normal_form(parse_poly("y^2", R), J)) == "y^2");
  CHECK(ideal_member(parse_poly("x", R), J));
  CHECK(ideal_member(poly_zero(), J));
  Ideal Y = parse_ideal(R, {"y"});
  CHECK(!ideal_member(parse_poly("x", R), Y));
}

TEST_CASE("membership soundness: tracked cofactors and Buchberger criterion") {
  for (auto ord : {MonomialOrder::grevlex_global, MonomialOrder::antigraded_revlex_local}) {
    RingSpec R = parse_ring(FieldSpec::prime(32003), {"x", "y"}, ord, {"x^3+y^3"});
    SBOptions opt;
    opt.track = true;
    StandardBasis sb(R, 1, 1, opt);
    std::vector<Polynomial> gens = {parse_poly("x^2+y^2", R), parse_poly("x*y", R)};
    sb.add_generators({mvec_from_poly(gens[0], 0), mvec_from_poly(gens[1], 0)});
    sb.adjoin_quotient(1);
    sb.complete();
    CHECK(sb.certify_spairs());

    // every tracked element is an explicit combination of the generators mod quotient
    for (const auto& e : sb.elems()) {
      if (e.cof.empty()) continue;  // untracked extras (quotient columns)
      Polynomial acc;
      for (size_t i = 0; i < gens.size(); ++i)
        acc = poly_add(R, acc, poly_mul(R, e.cof[i], gens[i]));
      Polynomial elem;
      for (const auto& t : e.v.terms) elem.terms.push_back({t.coeff, t.mono});
      Polynomial diff = poly_sub(R, acc, elem);
      CHECK(nf_mod_quotient(R, diff).is_zero());
    }

    // every generator reduces to zero against the basis
    for (const auto& g : gens) CHECK(sb.member(mvec_from_poly(g, 0)));
  }
}

TEST_CASE("colon: worked examples") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  // (xy) : (x) = (y)
  Ideal C = colon_ideal(parse_ideal(R, {"x*y"}), parse_ideal(R, {"x"}));
  CHECK(ideals_equal(C, parse_ideal(R, {"y"})));
  // (I : (1)) = I
  Ideal I = parse_ideal(R, {"x^2", "y^3"});
  CHECK(ideals_equal(colon_ideal(I, parse_ideal(R, {"1"})), I));
}

TEST_CASE("colon agrees with the monomial-ideal oracle") {
  std::mt19937 rng(17);
  for (auto ord : {MonomialOrder::grevlex_global, MonomialOrder::antigraded_revlex_local}) {
    RingSpec R = ring3(FieldSpec::prime(32003), ord);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Monomial> I, J;
      int ni = 1 + trial % 3, nj = 1 + (trial / 3) % 2;
      for (int i = 0; i < ni; ++i) I.push_back(rand_mono(rng, 3, 3));
      for (int j = 0; j < nj; ++j) J.push_back(rand_mono(rng, 3, 2));
      Ideal computed = colon_ideal(mono_ideal(R, I), mono_ideal(R, J));
      Ideal expected = mono_ideal(R, mono_colon_oracle(I, J));
      CHECK(ideals_equal(computed, expected));
    }
  }
}

TEST_CASE("intersection: examples and oracle") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  Ideal X = parse_ideal(R, {"x"}), Y = parse_ideal(R, {"y"});
  CHECK(ideals_equal(intersect_ideals(X, Y), parse_ideal(R, {"x*y"})));
  Ideal I = parse_ideal(R, {"x^2", "x*y + y^2"});
  CHECK(ideals_equal(intersect_ideals(I, I), I));
  Ideal unit = parse_ideal(R, {"1"});
  CHECK(ideals_equal(intersect_ideals(I, unit), I));

  // containment both ways on random monomial ideals
  std::mt19937 rng(23);
  RingSpec R3 = ring3(FieldSpec::prime(32003), MonomialOrder::antigraded_revlex_local);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Monomial> A, B;
    for (int i = 0; i < 2; ++i) A.push_back(rand_mono(rng, 3, 3));
    for (int i = 0; i < 2; ++i) B.push_back(rand_mono(rng, 3, 3));
    Ideal meet = intersect_ideals(mono_ideal(R3, A), mono_ideal(R3, B));
    for (const auto& g : meet.gens) {
      Ideal ia = mono_ideal(R3, A), ib = mono_ideal(R3, B);
      CHECK(ideal_member(g, ia));
      CHECK(ideal_member(g, ib));
    }
    // oracle: pairwise lcms generate the intersection
    std::vector<Monomial> lcms;
    for (const auto& a : A)
      for (const auto& b : B) lcms.push_back(mono_lcm(a, b));
    CHECK(ideals_equal(meet, mono_ideal(R3, lcms)));
  }
}

TEST_CASE("minimal generators: Nakayama examples") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::antigraded_revlex_local);
  auto mg = minimal_generators(parse_ideal(R, {"x", "x^2"}));
  REQUIRE(mg.size() == 1);
  CHECK(poly_to_string(R, mg[0]) == "x");

  // mingens count equals dim_k I/mI: cross-check small cases
  auto mg2 = minimal_generators(parse_ideal(R, {"x^2", "x*y", "y^2", "x^2+y^2"}));
  CHECK(mg2.size() == 3);

  RingSpec G = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  CHECK_THROWS_AS(minimal_generators(parse_ideal(G, {"x+1"})), Error);
}

TEST_CASE("contained_in_power") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::antigraded_revlex_local);
  CHECK(contained_in_power(parse_ideal(R, {"x^2"}), 2));
  CHECK(!contained_in_power(parse_ideal(R, {"x"}), 2));
  CHECK(contained_in_power(parse_ideal(R, {"x^2*y + y^3"}), 3));
}

TEST_CASE("krull_dim") {
  // k[x,y,z] local mod (x^2+y^2+z^2) has dimension 2
  RingSpec R = ring3(FieldSpec::prime(32003), MonomialOrder::antigraded_revlex_local,
                     {"x^2+y^2+z^2"});
  CHECK(krull_dim(R) == 2);
  RingSpec A = parse_ring(FieldSpec::rationals(), {"x", "y"},
                         MonomialOrder::antigraded_revlex_local, {"x^2", "y^2"});
  CHECK(krull_dim(A) == 0);
  RingSpec P = ring3(FieldSpec::rationals(), MonomialOrder::grevlex_global);
  CHECK(krull_dim(P) == 3);
}

TEST_CASE("vspace_dim and socle") {
  auto local = MonomialOrder::antigraded_revlex_local;
  RingSpec A = parse_ring(FieldSpec::rationals(), {"x"}, local, {"x^3"});
  CHECK(vspace_dim(A) == 3);
  CHECK(socle_dim(A) == 1);
  CHECK(is_gorenstein_artinian(A));

  RingSpec B = parse_ring(FieldSpec::rationals(), {"x", "y"}, local, {"x^2", "y^2"});
  CHECK(vspace_dim(B) == 4);
  CHECK(socle_dim(B) == 1);

  RingSpec C = parse_ring(FieldSpec::rationals(), {"x", "y"}, local, {"x^2", "x*y", "y^2"});
  CHECK(socle_dim(C) == 2);
  CHECK(!is_gorenstein_artinian(C));

  RingSpec D = ring3(FieldSpec::rationals(), local, {"x", "y", "z"});
  CHECK(vspace_dim(D) == 1);
}

TEST_CASE("intersect and colon respect quotient rings") {
  // A = k[x]/(x^3): (0 : x) = (x^2)
  RingSpec A = parse_ring(FieldSpec::rationals(), {"x"}, MonomialOrder::antigraded_revlex_local,
                         {"x^3"});
  Ideal zero = make_ideal(A, std::vector<Polynomial>{});
  Ideal col = colon_ideal(zero, parse_ideal(A, {"x"}));
  CHECK(ideals_equal(col, parse_ideal(A, {"x^2"})));
}

TEST_CASE("lead ideal: minimal monomial generators") {
  RingSpec R = parse_ring(FieldSpec::rationals(), {"x", "y"}, MonomialOrder::grevlex_global);
  Ideal I = parse_ideal(R, {"x^2+y^2", "x*y"});
  auto L = lead_ideal(I);
  REQUIRE(L.size() == 3);
  // no generator divides another
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = 0; j < L.size(); ++j)
      if (i != j) CHECK(!mono_divides(L[i], L[j]));
}

TEST_CASE("mingens count equals dim_k I/mI by independent linear algebra") {
  // Artinian ring: plain normal forms are canonical and linear, so the rank
  // of the reduced generators modulo m*I + q computes dim_k I/mI directly
  RingSpec A = parse_ring(FieldSpec::prime(32003), {"x", "y"},
                          MonomialOrder::antigraded_revlex_local, {"x^3", "y^3"});
  std::vector<std::vector<std::string>> cases = {
      {"x", "x^2"},
      {"x^2", "x*y", "y^2", "x^2+y^2"},
      {"x*y", "x^2*y", "x+y"},
      {"x^2*y^2"},
  };
  for (const auto& gens : cases) {
    Ideal I = parse_ideal(A, gens);
    size_t computed = minimal_generators(I).size();

    // membership basis for m*I + quotient
    StandardBasis sb(A, 1, 1);
    std::vector<MVec> mI;
    for (const auto& g : I.gens)
      for (size_t v = 0; v < A.nvars(); ++v) {
        Monomial xm(A.nvars());
        xm.exp[v] = 1;
        mI.push_back(mvec_from_poly(poly_mul_term(A, g, Scalar::one(A.field), xm), 0));
      }
    sb.add_extras(mI);
    sb.adjoin_quotient(1);
    sb.complete();

    // collect normal forms of all generators, rank over appearing monomials
    std::vector<Polynomial> nfs;
    std::vector<Monomial> monos;
    for (const auto& g : I.gens) {
      MVec red = sb.nf_plain(mvec_from_poly(g, 0));
      Polynomial p;
      for (const auto& t : red.terms) {
        p.terms.push_back({t.coeff, t.mono});
        bool seen = false;
        for (const auto& m : monos)
          if (m == t.mono) seen = true;
        if (!seen) monos.push_back(t.mono);
      }
      nfs.push_back(p);
    }
    ScalarMat M(nfs.size(), monos.size(), A.field);
    for (size_t i = 0; i < nfs.size(); ++i)
      for (const auto& t : nfs[i].terms)
        for (size_t j = 0; j < monos.size(); ++j)
          if (monos[j] == t.mono) M.at(i, j) = t.coeff;
    CHECK(computed == mat_rank(M));
  }
}

TEST_CASE("std basis lead ideal matches graded linear algebra on random homogeneous ideals") {
  // independent completeness oracle: for homogeneous I and each degree d,
  // #monomials(d) - rank(multiples of gens in degree d) must equal the number
  // of degree-d standard monomials of the computed lead ideal
  std::mt19937 rng(41);
  FieldSpec gf = FieldSpec::prime(32003);
  for (auto ord : {MonomialOrder::grevlex_global, MonomialOrder::antigraded_revlex_local}) {
    RingSpec P = make_ring(gf, {"x", "y", "z"}, ord);
    for (int trial = 0; trial < 10; ++trial) {
      // 2-3 random homogeneous generators of degree 2-3
      std::vector<Polynomial> gens;
      int ng = 2 + trial % 2;
      for (int g = 0; g < ng; ++g) {
        int deg = 2 + static_cast<int>(rng() % 2);
        Polynomial f;
        for (const auto& m : monomials_of_degree(P, deg)) {
          int c = static_cast<int>(rng() % 5) - 2;
          if (c) f = poly_add(P, f, poly_term(P, Scalar::from_int(gf, c), m));
        }
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      Ideal I = std_basis(make_ideal(P, gens));
      std::vector<Monomial> leads;
      for (const auto& p : I.sbasis) leads.push_back(p.leading().mono);

      for (int d = 2; d <= 6; ++d) {
        auto monos = monomials_of_degree(P, d);
        auto idx = [&](const Monomial& m) {
          for (size_t i = 0; i < monos.size(); ++i)
            if (monos[i] == m) return static_cast<int>(i);
          return -1;
        };
        std::vector<std::vector<Scalar>> rows;
        for (const auto& g : gens) {
          int gd = g.terms[0].mono.degree();
          if (gd > d) continue;
          for (const auto& m : monomials_of_degree(P, d - gd)) {
            Polynomial p = poly_mul_term(P, g, Scalar::one(gf), m);
            std::vector<Scalar> row(monos.size(), Scalar::zero(gf));
            for (const auto& t : p.terms) row[static_cast<size_t>(idx(t.mono))] = t.coeff;
            rows.push_back(std::move(row));
          }
        }
        ScalarMat M(rows.size(), monos.size(), gf);
        for (size_t i = 0; i < rows.size(); ++i)
          for (size_t j = 0; j < monos.size(); ++j) M.at(i, j) = rows[i][j];
        size_t ideal_dim = mat_rank(M);

        size_t standard = 0;
        for (const auto& m : monos) {
          bool divisible = false;
          for (const auto& l : leads)
            if (mono_divides(l, m)) { divisible = true; break; }
          if (!divisible) ++standard;
        }
        CHECK(standard == monos.size() - ideal_dim);
      }
    }
  }
}
