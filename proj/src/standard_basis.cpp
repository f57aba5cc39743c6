#include "linkmod/standard_basis.hpp"

#include <algorithm>
#include <set>

#include "linkmod/linalg.hpp"

namespace linkmod {

namespace {

// τ = lt(h)/lt(g) as (scalar, monomial); requires divisibility.
struct Quot {
  Scalar c;
  Monomial m;
};

Quot term_quot(const MTerm& num, const MTerm& den) {
  return {num.coeff / den.coeff, mono_div(num.mono, den.mono)};
}

Polynomial poly_add_term(const RingSpec& R, const Polynomial& f, const Scalar& c, const Monomial& m) {
  return poly_add(R, f, poly_term(R, c, m));
}

}  // namespace

bool StandardBasis::PairLess::operator()(const Pair& a, const Pair& b) const {
  if (a.deg != b.deg) return a.deg < b.deg;
  if (a.lcm.exp != b.lcm.exp) return a.lcm.exp < b.lcm.exp;  // lex on lcm exponents
  if (a.comp != b.comp) return a.comp < b.comp;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

StandardBasis::StandardBasis(const RingSpec& R, int32_t ncomp, int32_t split, SBOptions opt)
    : ring_(&R), ord_{&R, split}, ncomp_(ncomp), opt_(opt) {}

void StandardBasis::add_generators(const std::vector<MVec>& gens) {
  for (const auto& g : gens) {
    size_t idx = ngens_++;
    std::vector<Polynomial> cof;
    if (opt_.track) {
      cof.resize(ngens_);
      for (auto& b : basis_) b.cof.resize(ngens_);
      cof[idx].terms.push_back({Scalar::one(ring_->field), Monomial(ring_->nvars())});
    }
    insert_elem(g, std::move(cof));
  }
}

void StandardBasis::add_extras(const std::vector<MVec>& extras) {
  for (const auto& g : extras)
    insert_elem(g, opt_.track ? std::vector<Polynomial>(ngens_) : std::vector<Polynomial>());
}

void StandardBasis::adjoin_quotient(int32_t ncomps) {
  const std::vector<Polynomial>& qs =
      ring_->quotient_std.empty() ? ring_->quotient : ring_->quotient_std;
  for (int32_t j = 0; j < ncomps; ++j)
    for (const auto& q : qs)
      insert_elem(mvec_from_poly(q, j),
                  opt_.track ? std::vector<Polynomial>(ngens_) : std::vector<Polynomial>(), true);
}

void StandardBasis::insert_elem(MVec v, std::vector<Polynomial> cof, bool qcol) {
  mvec_truncate(*ring_, v);
  if (v.is_zero()) return;
  Scalar lc = v.leading().coeff;
  if (!lc.is_one()) {
    Scalar inv = lc.inv();
    v = mvec_scale(v, inv);
    for (auto& c : cof) c = poly_scale(c, inv);
  }
  ecart_.push_back(v.ecart());
  qcol_.push_back(qcol);
  basis_.push_back({std::move(v), std::move(cof)});
  completed_ = false;
  make_pairs(static_cast<int32_t>(basis_.size()) - 1);
}

void StandardBasis::seed_completed(const std::vector<MVec>& elems) {
  for (const auto& e : elems) {
    MVec v = e;
    mvec_truncate(*ring_, v);
    if (v.is_zero()) continue;
    if (!v.leading().coeff.is_one()) v = mvec_scale(v, v.leading().coeff.inv());
    ecart_.push_back(v.ecart());
    qcol_.push_back(false);
    basis_.push_back({std::move(v), {}});
  }
  completed_ = true;
}

void StandardBasis::make_pairs(int32_t idx) {
  const MTerm& lt = basis_[static_cast<size_t>(idx)].v.leading();
  for (int32_t i = 0; i < idx; ++i) {
    const MTerm& lti = basis_[static_cast<size_t>(i)].v.leading();
    if (lti.comp != lt.comp) continue;
    if (qcol_[static_cast<size_t>(i)] && qcol_[static_cast<size_t>(idx)])
      continue;  // quotient-column pairs reduce to zero within the column set
    Monomial l = mono_lcm(lti.mono, lt.mono);
    queue_.insert({l.degree(), l, lt.comp, i, idx});
  }
  // truncation boundary: minimal multiples of the lead crossing the degree
  // bound lose their leading term; their truncations must be closed over
  if (ring_->trunc_degree) {
    int32_t gap = *ring_->trunc_degree - lt.mono.degree();
    if (gap > 0 && basis_[static_cast<size_t>(idx)].v.terms.size() > 1) {
      for (const auto& beta : monomials_of_degree(ring_->nvars(), gap))
        queue_.insert({lt.mono.degree() + gap, mono_mul(beta, lt.mono), lt.comp, idx, kBoundary});
    }
  }
}

MVec StandardBasis::spair(int32_t i, int32_t j) const {
  const MTerm& a = basis_[static_cast<size_t>(i)].v.leading();
  if (j == kBoundary)
    throw Error("spair: boundary pairs need the stored lcm");
  const MTerm& b = basis_[static_cast<size_t>(j)].v.leading();
  Monomial l = mono_lcm(a.mono, b.mono);
  // both basis elements are monic
  MVec s = mvec_axpy(ord_, MVec{}, Scalar::one(ring_->field), mono_div(l, a.mono),
                     basis_[static_cast<size_t>(i)].v);
  s = mvec_axpy(ord_, s, Scalar::one(ring_->field).neg(), mono_div(l, b.mono),
                basis_[static_cast<size_t>(j)].v);
  return s;
}

std::vector<Polynomial> StandardBasis::spair_cof(int32_t i, int32_t j) const {
  const MTerm& a = basis_[i].v.leading();
  const MTerm& b = basis_[j].v.leading();
  Monomial l = mono_lcm(a.mono, b.mono);
  std::vector<Polynomial> cof(ngens_);
  Monomial mi = mono_div(l, a.mono), mj = mono_div(l, b.mono);
  for (size_t g = 0; g < ngens_; ++g) {
    Polynomial p = poly_mul_term(*ring_, basis_[i].cof[g], Scalar::one(ring_->field), mi);
    Polynomial q = poly_mul_term(*ring_, basis_[j].cof[g], Scalar::one(ring_->field), mj);
    cof[g] = poly_sub(*ring_, p, q);
  }
  return cof;
}

StandardBasis::NF StandardBasis::reduce(const MVec& f, bool track_rel) const {
  bool local = ring_->is_local();
  MVec h = f;
  mvec_truncate(*ring_, h);

  struct Snap {
    MVec v;
    int32_t ecart;
    Polynomial unit;
    std::vector<Polynomial> relcof;  // vs basis elements
  };
  std::vector<Snap> tlocal;

  Polynomial unit = poly_const(*ring_, Scalar::one(ring_->field));
  std::vector<Polynomial> relcof;
  if (track_rel) relcof.resize(basis_.size());

  int32_t h_ecart = h.ecart();
  while (!h.is_zero()) {
    if (++steps_ > opt_.max_steps) throw Error("standard basis: reduction step budget exceeded");
    const MTerm& lt = h.leading();
    // minimal-ecart reducer; basis elements win ties, then lowest index
    int best_kind = -1;
    size_t best_idx = 0;
    int32_t best_ecart = 0;
    for (size_t i = 0; i < basis_.size(); ++i) {
      const MTerm& g = basis_[i].v.leading();
      if (g.comp != lt.comp || !mono_divides(g.mono, lt.mono)) continue;
      int32_t e = ecart_[i];
      if (best_kind < 0 || e < best_ecart) { best_kind = 0; best_idx = i; best_ecart = e; }
      if (!local) break;  // global orders: plain division, first reducer
    }
    if (local) {
      for (size_t i = 0; i < tlocal.size(); ++i) {
        const MTerm& g = tlocal[i].v.leading();
        if (g.comp != lt.comp || !mono_divides(g.mono, lt.mono)) continue;
        if (best_kind < 0 || tlocal[i].ecart < best_ecart) {
          best_kind = 1;
          best_idx = i;
          best_ecart = tlocal[i].ecart;
        }
      }
    }
    if (best_kind < 0) break;  // lead irreducible

    if (local && best_ecart > h_ecart) {
      Snap s{h, h_ecart, unit, relcof};
      tlocal.push_back(std::move(s));
    }

    if (best_kind == 0) {
      const SBElem& red = basis_[best_idx];
      Quot q = term_quot(lt, red.v.leading());
      h = mvec_axpy(ord_, h, q.c.neg(), q.m, red.v);
      if (track_rel) relcof[best_idx] = poly_add_term(*ring_, relcof[best_idx], q.c, q.m);
    } else {
      const Snap& red = tlocal[best_idx];
      Quot q = term_quot(lt, red.v.leading());
      h = mvec_axpy(ord_, h, q.c.neg(), q.m, red.v);
      if (track_rel) {
        Polynomial tscale = poly_term(*ring_, q.c, q.m);
        unit = poly_sub(*ring_, unit, poly_mul(*ring_, tscale, red.unit));
        for (size_t g = 0; g < relcof.size(); ++g)
          relcof[g] = poly_sub(*ring_, relcof[g], poly_mul(*ring_, tscale, red.relcof[g]));
      } else {
        unit.terms.clear();  // unit no longer the identity; callers must track to use it
      }
    }
    h_ecart = h.ecart();
  }

  NF out;
  out.rem = std::move(h);
  if (track_rel) {
    if (unit.constant_coeff(ring_->field).is_zero())
      throw Error("standard basis: Mora reduction lost its unit");
    out.unit = std::move(unit);
    out.cof.assign(ngens_, Polynomial{});
    for (size_t k = 0; k < basis_.size(); ++k) {
      if (relcof[k].is_zero()) continue;
      for (size_t g = 0; g < ngens_; ++g)
        if (!basis_[k].cof[g].is_zero())
          out.cof[g] = poly_add(*ring_, out.cof[g], poly_mul(*ring_, relcof[k], basis_[k].cof[g]));
    }
  }
  return out;
}

bool StandardBasis::member(const MVec& f) const { return reduce(f, false).rem.is_zero(); }

void StandardBasis::complete() {
  if (completed_) return;
  // normal strategy: smallest lcm degree first; the queue grows as elements land
  while (!queue_.empty()) {
    Pair p = *queue_.begin();
    queue_.erase(queue_.begin());
    MVec s;
    if (p.j == kBoundary) {
      // truncated minimal boundary multiple of element i
      const MTerm& lt = basis_[static_cast<size_t>(p.i)].v.leading();
      s = mvec_axpy(ord_, MVec{}, Scalar::one(ring_->field), mono_div(p.lcm, lt.mono),
                    basis_[static_cast<size_t>(p.i)].v);
    } else {
      s = spair(p.i, p.j);
    }
    if (s.is_zero()) continue;
    NF nf = reduce(s, opt_.track);
    if (nf.rem.is_zero()) continue;
    std::vector<Polynomial> cof;
    if (opt_.track) {
      // rem = unit*spair - Σ relcof·basis, all expressed against generators
      cof.assign(ngens_, Polynomial{});
      std::vector<Polynomial> scof;
      if (p.j == kBoundary) {
        const MTerm& lt = basis_[static_cast<size_t>(p.i)].v.leading();
        Monomial beta = mono_div(p.lcm, lt.mono);
        scof.assign(ngens_, Polynomial{});
        for (size_t g = 0; g < ngens_; ++g)
          scof[g] = poly_mul_term(*ring_, basis_[static_cast<size_t>(p.i)].cof[g],
                                  Scalar::one(ring_->field), beta);
      } else {
        scof = spair_cof(p.i, p.j);
      }
      for (size_t g = 0; g < ngens_; ++g) {
        cof[g] = poly_mul(*ring_, nf.unit, scof[g]);
        cof[g] = poly_sub(*ring_, cof[g], nf.cof[g]);
      }
    }
    insert_elem(std::move(nf.rem), std::move(cof));
  }
  interreduce();
  completed_ = true;
}

void StandardBasis::interreduce() {
  // order with divisors first: local orders sort descending, global ascending
  std::vector<size_t> idx(basis_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  bool local = ring_->is_local();
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    Cmp c = ord_.cmp(basis_[a].v.leading(), basis_[b].v.leading());
    if (c != Cmp::EQ) return local ? c == Cmp::GT : c == Cmp::LT;
    return a < b;
  });
  std::vector<SBElem> kept;
  std::vector<bool> kept_qcol;
  for (size_t i : idx) {
    const MTerm& lt = basis_[i].v.leading();
    bool redundant = false;
    for (const auto& k : kept) {
      const MTerm& klt = k.v.leading();
      if (klt.comp == lt.comp && mono_divides(klt.mono, lt.mono)) { redundant = true; break; }
    }
    if (!redundant) {
      kept.push_back(std::move(basis_[i]));
      kept_qcol.push_back(qcol_[i]);
    }
  }
  basis_ = std::move(kept);
  qcol_ = std::move(kept_qcol);

  // tail reduction: plain division against the kept set; keep the original
  // tail when division does not terminate (non-Artinian local cases)
  for (size_t i = 0; i < basis_.size(); ++i) {
    MVec tail = basis_[i].v;
    tail.terms.erase(tail.terms.begin());
    if (tail.is_zero()) continue;
    MVec red = nf_plain(tail, 50000);
    bool complete_red = true;
    for (const auto& t : red.terms) {
      for (const auto& b : basis_) {
        const MTerm& blt = b.v.leading();
        if (blt.comp == t.comp && mono_divides(blt.mono, t.mono)) { complete_red = false; break; }
      }
      if (!complete_red) break;
    }
    if (!complete_red) continue;
    MVec nv;
    nv.terms.push_back(basis_[i].v.leading());
    nv = mvec_add(ord_, nv, red);
    if (opt_.track) {
      // re-derive the cofactor expression for the rewritten element
      NF nf = reduce(nv, true);
      if (!nf.rem.is_zero()) continue;  // keep original rather than lose tracking
      // unit*nv = Σ cof·gen  =>  nv = inv-unit * Σ ...; constant unit only
      Scalar u0 = nf.unit.constant_coeff(ring_->field);
      if (!nf.unit.is_constant()) continue;
      Scalar ui = u0.inv();
      for (auto& c : nf.cof) c = poly_scale(c, ui);
      basis_[i].cof = std::move(nf.cof);
    }
    basis_[i].v = std::move(nv);
  }

  // canonical order: descending leading terms
  std::vector<size_t> perm(basis_.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    Cmp c = ord_.cmp(basis_[a].v.leading(), basis_[b].v.leading());
    if (c != Cmp::EQ) return c == Cmp::GT;
    return a < b;
  });
  std::vector<SBElem> sorted;
  std::vector<bool> sorted_qcol;
  for (size_t i : perm) {
    sorted.push_back(std::move(basis_[i]));
    sorted_qcol.push_back(qcol_[i]);
  }
  basis_ = std::move(sorted);
  qcol_ = std::move(sorted_qcol);
  ecart_.resize(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) ecart_[i] = basis_[i].v.ecart();
}

MVec StandardBasis::nf_plain(const MVec& f, long long fuel) const {
  MVec h = f;
  mvec_truncate(*ring_, h);
  MVec r;
  while (!h.is_zero() && fuel-- > 0) {
    const MTerm& lt = h.leading();
    int found = -1;
    for (size_t i = 0; i < basis_.size(); ++i) {
      const MTerm& g = basis_[i].v.leading();
      if (g.comp == lt.comp && mono_divides(g.mono, lt.mono)) { found = static_cast<int>(i); break; }
    }
    if (found < 0) {
      r.terms.push_back(lt);
      h.terms.erase(h.terms.begin());
      continue;
    }
    Quot q = term_quot(lt, basis_[static_cast<size_t>(found)].v.leading());
    h = mvec_axpy(ord_, h, q.c.neg(), q.m, basis_[static_cast<size_t>(found)].v);
  }
  // fuel exhausted: append what remains (best effort, still the same residue class)
  for (const auto& t : h.terms) r.terms.push_back(t);
  return r;
}

bool StandardBasis::certify_spairs() const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    for (size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i].v.leading().comp != basis_[j].v.leading().comp) continue;
      MVec s = spair(static_cast<int32_t>(i), static_cast<int32_t>(j));
      if (!reduce(s, false).rem.is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<Polynomial>> syzygy_columns(const RingSpec& R, int32_t ncomp,
                                                    const std::vector<MVec>& main,
                                                    const std::vector<MVec>& extras, SBOptions opt) {
  if (main.empty()) return {};
  int32_t total = ncomp + static_cast<int32_t>(main.size());
  StandardBasis sb(R, total, ncomp, opt);
  std::vector<MVec> gens;
  gens.reserve(main.size());
  ModOrder ord{&R, ncomp};
  for (size_t i = 0; i < main.size(); ++i) {
    MVec g = main[i];
    MVec shadow;
    shadow.terms.push_back(
        {Scalar::one(R.field), Monomial(R.nvars()), ncomp + static_cast<int32_t>(i)});
    g = mvec_add(ord, g, shadow);
    gens.push_back(std::move(g));
  }
  sb.add_generators(gens);
  sb.add_extras(extras);
  sb.adjoin_quotient(ncomp);
  sb.complete();

  std::vector<std::vector<Polynomial>> out;
  for (const auto& e : sb.elems()) {
    if (e.v.leading().comp < ncomp) continue;  // still has ambient part
    std::vector<Polynomial> col(main.size());
    for (const auto& t : e.v.terms) {
      int32_t c = t.comp - ncomp;
      if (c < 0 || c >= static_cast<int32_t>(main.size()))
        throw Error("syzygy_columns: stray component");
      col[static_cast<size_t>(c)].terms.push_back({t.coeff, t.mono});
    }
    out.push_back(std::move(col));
  }
  return out;
}

std::optional<std::vector<Polynomial>> solve_membership(const RingSpec& R, int32_t ncomp,
                                                        const MVec& target,
                                                        const std::vector<MVec>& gens) {
  SBOptions opt;
  opt.track = true;
  StandardBasis sb(R, ncomp, ncomp, opt);
  sb.add_generators(gens);
  sb.adjoin_quotient(ncomp);
  sb.complete();
  StandardBasis::NF nf = sb.reduce(target, true);
  if (!nf.rem.is_zero()) return std::nullopt;

  std::vector<Polynomial> cof = std::move(nf.cof);
  if (nf.unit.is_constant()) {
    Scalar inv = nf.unit.constant_coeff(R.field).inv();
    for (auto& c : cof) c = poly_scale(c, inv);
  } else if (R.trunc_degree) {
    Polynomial w = invert_unit(R, nf.unit);
    for (auto& c : cof) c = poly_mul(R, w, c);
  } else {
    throw Error("solve_membership: non-constant unit over a non-Artinian ring");
  }

  // certify Σ c_i gens_i ≡ target mod quotient
  ModOrder ord{&R, ncomp};
  MVec acc;
  for (size_t i = 0; i < gens.size(); ++i)
    acc = mvec_add(ord, acc, mvec_mul_poly(ord, cof[i], gens[i]));
  MVec diff = mvec_add(ord, acc, mvec_scale(target, Scalar::one(R.field).neg()));
  StandardBasis qb(R, ncomp, ncomp);
  qb.adjoin_quotient(ncomp);
  qb.complete();
  if (!qb.member(diff)) throw Error("solve_membership: certification failed");
  return cof;
}

std::vector<Monomial> ring_standard_monomials(const RingSpec& R) {
  if (!R.trunc_degree) throw Error("ring_standard_monomials: ring is not Artinian");
  std::vector<Monomial> leads;
  for (const auto& q : R.quotient_std) leads.push_back(q.leading().mono);
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
      if (out.size() > 200000) throw Error("ring_standard_monomials: not finite dimensional");
      for (size_t v = 0; v < R.nvars(); ++v) {
        Monomial m2 = m;
        m2.exp[v]++;
        if (m2.degree() >= *R.trunc_degree) continue;
        if (seen.insert(m2.exp).second) next.push_back(m2);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare_monomials(a, b, R.order) == Cmp::GT;
  });
  return out;
}

Polynomial invert_unit(const RingSpec& R, const Polynomial& u) {
  std::vector<Monomial> basis = ring_standard_monomials(R);
  StandardBasis qb(R, 1, 1);
  qb.adjoin_quotient(1);
  qb.complete();

  auto index_of = [&](const Monomial& m) -> int {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == m) return static_cast<int>(i);
    return -1;
  };

  size_t n = basis.size();
  ScalarMat M(n, n, R.field);
  for (size_t j = 0; j < n; ++j) {
    MVec prod = mvec_mul_poly(ModOrder{&R, 1}, u, mvec_from_poly(poly_term(R, Scalar::one(R.field), basis[j]), 0));
    MVec red = qb.nf_plain(prod);
    for (const auto& t : red.terms) {
      int i = index_of(t.mono);
      if (i < 0) throw Error("invert_unit: non-standard monomial survived reduction");
      M.at(static_cast<size_t>(i), j) = t.coeff;
    }
  }
  std::vector<Scalar> rhs(n, Scalar::zero(R.field));
  int one_idx = index_of(Monomial(R.nvars()));
  if (one_idx < 0) throw Error("invert_unit: 1 is not a standard monomial");
  rhs[static_cast<size_t>(one_idx)] = Scalar::one(R.field);
  auto sol = mat_solve(M, rhs);
  if (!sol) throw Error("invert_unit: element is not a unit");
  Polynomial w;
  for (size_t j = 0; j < n; ++j)
    if (!(*sol)[j].is_zero()) w = poly_add(R, w, poly_term(R, (*sol)[j], basis[j]));
  return w;
}

}  // namespace linkmod
