#include "linkmod/ideal.hpp"

#include <algorithm>
#include <functional>

#include "linkmod/linalg.hpp"

namespace linkmod {

namespace {

std::vector<Polynomial> basis_to_polys(const StandardBasis& sb) {
  std::vector<Polynomial> out;
  for (const auto& e : sb.elems()) {
    Polynomial p;
    for (const auto& t : e.v.terms) {
      if (t.comp != 0) throw Error("basis_to_polys: unexpected component");
      p.terms.push_back({t.coeff, t.mono});
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<MVec> polys_to_mvecs(const std::vector<Polynomial>& ps) {
  std::vector<MVec> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(mvec_from_poly(p, 0));
  return out;
}

// standard monomials of a monomial lead ideal, no truncation bound;
// finite only if the lead ideal is m-primary (checked by caller)
std::vector<Monomial> standard_monomials_of(const RingSpec& R, const std::vector<Monomial>& leads) {
  std::vector<Monomial> out;
  std::set<std::vector<int32_t>> seen;
  std::vector<Monomial> frontier{Monomial(R.nvars())};
  seen.insert(frontier[0].exp);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      bool standard = true;
      for (const auto& l : leads)
        if (mono_divides(l, m)) { standard = false; break; }
      if (!standard) continue;
      out.push_back(m);
      if (out.size() > 500000) throw Error("standard_monomials_of: not finite");
      for (size_t v = 0; v < R.nvars(); ++v) {
        Monomial m2 = m;
        m2.exp[v]++;
        if (seen.insert(m2.exp).second) next.push_back(m2);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

RingSpec make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order,
                   std::vector<Polynomial> quotient) {
  RingSpec R;
  R.field = field;
  R.vars = std::move(vars);
  R.order = order;
  if (quotient.empty()) return R;

  for (const auto& q : quotient) {
    if (q.is_zero()) throw Error("make_ring: zero quotient generator");
    if (q.is_constant()) throw Error("make_ring: unit quotient generator");
    if (R.is_local() && !q.constant_coeff(field).is_zero())
      throw Error("make_ring: local quotient generator must lie in the maximal ideal");
  }

  // standard basis of the quotient over the bare ring
  StandardBasis sb(R, 1, 1);
  sb.add_generators(polys_to_mvecs(quotient));
  sb.complete();
  R.quotient = std::move(quotient);
  R.quotient_std = basis_to_polys(sb);

  // Artinian detection: lead ideal contains a pure power of every variable
  std::vector<Monomial> leads;
  for (const auto& q : R.quotient_std) leads.push_back(q.leading().mono);
  bool artinian = !R.vars.empty();
  for (size_t v = 0; v < R.nvars() && artinian; ++v) {
    bool pure = false;
    for (const auto& l : leads) {
      bool only_v = l.exp[v] > 0;
      for (size_t w = 0; w < R.nvars() && only_v; ++w)
        if (w != v && l.exp[w] > 0) only_v = false;
      if (only_v) { pure = true; break; }
    }
    artinian = pure;
  }
  // truncation is only wired for local orders (the Artinian rings we compute in)
  if (artinian && R.is_local()) {
    std::vector<Monomial> stds = standard_monomials_of(R, leads);
    int32_t maxdeg = 0;
    for (const auto& m : stds) maxdeg = std::max(maxdeg, m.degree());
    int32_t T = maxdeg + 1;
    int32_t cap = 4 * T + 16;
    for (; T <= cap; ++T) {
      bool all_in = true;
      for (const auto& m : monomials_of_degree(R, T)) {
        MVec v = mvec_from_poly(poly_term(R, Scalar::one(R.field), m), 0);
        if (!sb.member(v)) { all_in = false; break; }
      }
      if (all_in) break;
    }
    if (T > cap) throw Error("make_ring: failed to find m-power inside quotient");
    // boundary-complete basis: adjoin the degree-T monomials (all lie in the
    // quotient), so plain division terminates and gives canonical reductions
    RingSpec bare = R;
    bare.trunc_degree.reset();
    std::vector<Polynomial> gens2 = R.quotient;
    for (const auto& m : monomials_of_degree(R, T))
      gens2.push_back(poly_term(R, Scalar::one(R.field), m));
    StandardBasis sb2(bare, 1, 1);
    sb2.add_generators(polys_to_mvecs(gens2));
    sb2.complete();
    R.quotient_std = basis_to_polys(sb2);
    R.trunc_degree = T;
  }
  return R;
}

RingSpec parse_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order,
                    const std::vector<std::string>& quotient_texts) {
  RingSpec bare;
  bare.field = field;
  bare.vars = vars;
  bare.order = order;
  std::vector<Polynomial> qs;
  for (const auto& t : quotient_texts) qs.push_back(parse_poly(t, bare));
  return make_ring(field, std::move(vars), order, std::move(qs));
}

RingSpec ambient_ring(const RingSpec& R) {
  RingSpec P;
  P.field = R.field;
  P.vars = R.vars;
  P.order = R.order;
  return P;
}

Ideal make_ideal(const RingSpec& R, std::vector<Polynomial> gens) {
  Ideal I;
  I.ring = R;
  I.gens = std::move(gens);
  return I;
}

Ideal parse_ideal(const RingSpec& R, const std::vector<std::string>& gen_texts) {
  std::vector<Polynomial> gens;
  for (const auto& t : gen_texts) gens.push_back(parse_poly(t, R));
  return make_ideal(R, std::move(gens));
}

const std::vector<Polynomial>& ensure_std(Ideal& I) {
  if (!I.has_sbasis) {
    StandardBasis sb(I.ring, 1, 1);
    sb.add_generators(polys_to_mvecs(I.gens));
    sb.adjoin_quotient(1);
    sb.complete();
    I.sbasis = basis_to_polys(sb);
    I.has_sbasis = true;
  }
  return I.sbasis;
}

Ideal std_basis(Ideal I) {
  ensure_std(I);
  return I;
}

std::vector<Monomial> lead_ideal(Ideal& I) {
  ensure_std(I);
  // the basis is lead-interreduced, so its leads already generate minimally
  std::vector<Monomial> out;
  for (const auto& p : I.sbasis) out.push_back(p.leading().mono);
  return out;
}

namespace {

StandardBasis reducer_for(Ideal& I) {
  ensure_std(I);
  StandardBasis sb(I.ring, 1, 1);
  sb.seed_completed(polys_to_mvecs(I.sbasis));
  return sb;
}

Polynomial mvec_to_poly(const MVec& v) {
  Polynomial p;
  for (const auto& t : v.terms) {
    if (t.comp != 0) throw Error("mvec_to_poly: unexpected component");
    p.terms.push_back({t.coeff, t.mono});
  }
  return p;
}

bool fully_reduced(const StandardBasis& sb, const MVec& v) {
  for (const auto& t : v.terms)
    for (const auto& e : sb.elems())
      if (e.v.leading().comp == t.comp && mono_divides(e.v.leading().mono, t.mono)) return false;
  return true;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, Ideal& I) {
  StandardBasis sb = reducer_for(I);
  MVec v = mvec_from_poly(f, 0);
  MVec plain = sb.nf_plain(v);
  if (fully_reduced(sb, plain)) return mvec_to_poly(plain);
  MVec weak = sb.reduce(v, false).rem;
  if (weak.is_zero()) return {};
  return mvec_to_poly(plain);
}

bool ideal_member(const Polynomial& f, Ideal& I) {
  StandardBasis sb = reducer_for(I);
  return sb.member(mvec_from_poly(f, 0));
}

Polynomial nf_mod_quotient(const RingSpec& R, const Polynomial& f) {
  if (R.quotient_std.empty()) return f;
  StandardBasis sb(R, 1, 1);
  sb.seed_completed(polys_to_mvecs(R.quotient_std));
  MVec plain = sb.nf_plain(mvec_from_poly(f, 0));
  if (fully_reduced(sb, plain)) return mvec_to_poly(plain);
  MVec weak = sb.reduce(mvec_from_poly(f, 0), false).rem;
  if (weak.is_zero()) return {};
  return mvec_to_poly(plain);
}

Ideal colon_ideal(Ideal I, const Ideal& J) {
  require_same_frame(I.ring, J.ring, "colon_ideal");
  std::vector<Ideal> parts;
  bool all_zero = true;
  for (const auto& g : J.gens) {
    if (g.is_zero()) continue;
    all_zero = false;
    std::vector<MVec> main;
    main.push_back(mvec_from_poly(g, 0));
    for (const auto& f : I.gens) main.push_back(mvec_from_poly(f, 0));
    auto syz = syzygy_columns(I.ring, 1, main, {});
    std::vector<Polynomial> gens;
    for (auto& s : syz)
      if (!nf_mod_quotient(I.ring, s[0]).is_zero()) gens.push_back(s[0]);
    parts.push_back(make_ideal(I.ring, std::move(gens)));
  }
  if (all_zero) {
    // colon by the zero ideal is the unit ideal
    return make_ideal(I.ring, std::vector<Polynomial>{poly_const(I.ring, Scalar::one(I.ring.field))});
  }
  Ideal acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = intersect_ideals(acc, parts[i]);
  return acc;
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
  require_same_frame(I.ring, J.ring, "intersect_ideals");
  const RingSpec& R = I.ring;
  std::vector<MVec> main;
  MVec diag;  // terms already in module order: same monomial, smaller component first
  diag.terms.push_back({Scalar::one(R.field), Monomial(R.nvars()), 0});
  diag.terms.push_back({Scalar::one(R.field), Monomial(R.nvars()), 1});
  main.push_back(diag);
  for (const auto& g : I.gens)
    if (!g.is_zero()) main.push_back(mvec_from_poly(g, 0));
  for (const auto& h : J.gens)
    if (!h.is_zero()) main.push_back(mvec_from_poly(h, 1));
  auto syz = syzygy_columns(R, 2, main, {});
  std::vector<Polynomial> gens;
  for (auto& s : syz)
    if (!nf_mod_quotient(R, s[0]).is_zero()) gens.push_back(s[0]);
  return make_ideal(R, std::move(gens));
}

std::vector<Polynomial> minimal_generators(Ideal I) {
  const RingSpec& R = I.ring;
  if (!R.is_local()) {
    for (const auto& g : I.gens) {
      if (g.is_zero()) continue;
      int32_t d = g.terms[0].mono.degree();
      for (const auto& t : g.terms)
        if (t.mono.degree() != d) throw Error("minimal_generators: global order requires homogeneous input");
    }
  }
  ensure_std(I);

  // candidates: input generators first, then standard basis ascending by lead
  std::vector<Polynomial> cands;
  for (const auto& g : I.gens)
    if (!g.is_zero()) cands.push_back(g);
  std::vector<Polynomial> sorted_basis = I.sbasis;
  std::sort(sorted_basis.begin(), sorted_basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading().mono, b.leading().mono, R.order) == Cmp::LT;
  });
  for (auto& p : sorted_basis) cands.push_back(p);

  // membership basis for m*I + quotient, extended by the chosen generators
  StandardBasis sb(R, 1, 1);
  std::vector<MVec> mI;
  for (const auto& g : I.gens) {
    if (g.is_zero()) continue;
    for (size_t v = 0; v < R.nvars(); ++v) {
      Monomial xm(R.nvars());
      xm.exp[v] = 1;
      mI.push_back(mvec_from_poly(poly_mul_term(R, g, Scalar::one(R.field), xm), 0));
    }
  }
  sb.add_extras(mI);
  sb.adjoin_quotient(1);
  sb.complete();

  std::vector<Polynomial> kept;
  for (const auto& c : cands) {
    if (sb.member(mvec_from_poly(c, 0))) continue;
    kept.push_back(c);
    sb.add_extras({mvec_from_poly(c, 0)});
    sb.complete();
  }
  return kept;
}

bool contained_in_power(Ideal I, int32_t k) {
  const RingSpec& R = I.ring;
  StandardBasis sb(R, 1, 1);
  std::vector<MVec> gens;
  for (const auto& m : monomials_of_degree(R, k))
    gens.push_back(mvec_from_poly(poly_term(R, Scalar::one(R.field), m), 0));
  sb.add_extras(gens);
  sb.adjoin_quotient(1);
  sb.complete();
  for (const auto& g : I.gens)
    if (!sb.member(mvec_from_poly(g, 0))) return false;
  return true;
}

std::vector<Monomial> monomials_of_degree(const RingSpec& R, int32_t k) {
  return monomials_of_degree(R.nvars(), k);
}

int32_t krull_dim(const RingSpec& R) {
  if (R.quotient_std.empty()) return static_cast<int32_t>(R.nvars());
  std::vector<Monomial> leads;
  for (const auto& q : R.quotient_std) leads.push_back(q.leading().mono);
  size_t n = R.nvars();
  int32_t best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& l : leads) {
      bool supported = true;
      for (size_t v = 0; v < n; ++v)
        if (l.exp[v] > 0 && !(mask & (1u << v))) { supported = false; break; }
      if (supported) { independent = false; break; }
    }
    if (independent) best = std::max(best, static_cast<int32_t>(__builtin_popcount(mask)));
  }
  return best;
}

int32_t vspace_dim(const RingSpec& R) {
  return static_cast<int32_t>(ring_standard_monomials(R).size());
}

int32_t socle_dim(const RingSpec& R) {
  std::vector<Monomial> basis = ring_standard_monomials(R);
  StandardBasis sb(R, 1, 1);
  sb.seed_completed([&] {
    std::vector<MVec> v;
    for (const auto& q : R.quotient_std) v.push_back(mvec_from_poly(q, 0));
    return v;
  }());
  auto index_of = [&](const Monomial& m) -> int {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == m) return static_cast<int>(i);
    return -1;
  };
  size_t n = basis.size();
  size_t nv = R.nvars();
  ScalarMat M(n * nv, n, R.field);
  for (size_t j = 0; j < n; ++j) {
    for (size_t v = 0; v < nv; ++v) {
      Monomial xm(R.nvars());
      xm.exp[v] = 1;
      MVec prod = mvec_from_poly(poly_term(R, Scalar::one(R.field), mono_mul(basis[j], xm)), 0);
      mvec_truncate(R, prod);
      MVec red = sb.nf_plain(prod);
      for (const auto& t : red.terms) {
        int i = index_of(t.mono);
        if (i < 0) throw Error("socle_dim: non-standard monomial after reduction");
        M.at(v * n + static_cast<size_t>(i), j) = t.coeff;
      }
    }
  }
  return static_cast<int32_t>(mat_kernel(M, R.field).size());
}

bool is_gorenstein_artinian(const RingSpec& R) { return socle_dim(R) == 1; }

}  // namespace linkmod
