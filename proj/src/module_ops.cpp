#include "linkmod/module_ops.hpp"

#include <algorithm>

namespace linkmod {

namespace {

// d^T ⊗ I_m : A^{m·rows(d)} -> A^{m·cols(d)}
FreeModuleMap kron_transpose(const FreeModuleMap& d, int32_t m) {
  FreeModuleMap out(d.ring, d.cols * m, d.rows * m);
  for (int32_t s = 0; s < d.cols; ++s)
    for (int32_t t = 0; t < d.rows; ++t)
      for (int32_t j = 0; j < m; ++j) out.at(s * m + j, t * m + j) = d.at(t, s);
  return out;
}

// d ⊗ I_m : A^{m·cols(d)} -> A^{m·rows(d)}
FreeModuleMap kron(const FreeModuleMap& d, int32_t m) {
  FreeModuleMap out(d.ring, d.rows * m, d.cols * m);
  for (int32_t u = 0; u < d.rows; ++u)
    for (int32_t t = 0; t < d.cols; ++t)
      for (int32_t j = 0; j < m; ++j) out.at(u * m + j, t * m + j) = d.at(u, t);
  return out;
}

// block-diagonal r copies of psi, acting on A^{m·r} (m = rows(psi))
FreeModuleMap psi_block(const FreeModuleMap& psi, int32_t r) {
  FreeModuleMap out(psi.ring, psi.rows * r, psi.cols * r);
  for (int32_t t = 0; t < r; ++t)
    for (int32_t j = 0; j < psi.rows; ++j)
      for (int32_t c = 0; c < psi.cols; ++c) out.at(t * psi.rows + j, t * psi.cols + c) = psi.at(j, c);
  return out;
}

std::vector<MVec> unit_vectors(const RingSpec& R, int32_t n) {
  std::vector<MVec> out;
  for (int32_t i = 0; i < n; ++i) {
    MVec e;
    e.terms.push_back({Scalar::one(R.field), Monomial(R.nvars()), i});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

PresentedModule transpose_module(const PresentedModule& M) {
  MinimalPresentation mp = minimal_presentation(M);
  PresentedModule T = coker(transpose_map(mp.module.pres));
  T.minimal = entries_in_max_ideal(T.pres);
  return T;
}

PresentedModule tensor_modules(const PresentedModule& M, const PresentedModule& N) {
  require_same_frame(M.ring, N.ring, "tensor_modules");
  const RingSpec& R = M.ring;
  const FreeModuleMap& a = M.pres;
  const FreeModuleMap& b = N.pres;
  // coker of [a ⊗ I_{rows b} | I_{rows a} ⊗ b] on A^{rows a · rows b}
  FreeModuleMap part1 = kron(a, b.rows);  // A^{cols a · rows b} -> A^{rows a · rows b}
  FreeModuleMap part2 = psi_block(b, a.rows);
  FreeModuleMap pres(R, a.rows * b.rows, part1.cols + part2.cols);
  for (int32_t i = 0; i < pres.rows; ++i) {
    for (int32_t j = 0; j < part1.cols; ++j) pres.at(i, j) = part1.at(i, j);
    for (int32_t j = 0; j < part2.cols; ++j) pres.at(i, part1.cols + j) = part2.at(i, j);
  }
  return minimal_presentation(coker(pres)).module;
}

ExtTor::ExtTor(const PresentedModule& M, const PresentedModule& N, int32_t maxdeg)
    : ring_(M.ring), maxdeg_(maxdeg) {
  require_same_frame(M.ring, N.ring, "ExtTor");
  N_ = minimal_presentation(N).module;
  res_ = resolve_module(M, maxdeg + 1);
}

FreeModuleMap ExtTor::diff(int32_t k) const {
  if (k < 1 || k > static_cast<int32_t>(res_.complex.maps.size()))
    return FreeModuleMap(ring_, 0, 0);
  return res_.complex.maps[static_cast<size_t>(k) - 1];
}

PresentedModule ExtTor::ext(int32_t i) const {
  if (i < 0) throw Error("ext: negative degree");
  if (i > maxdeg_) throw Error("ext: degree beyond the prepared window");
  int32_t ri = res_.complex.rank_at(i);
  if (ri == 0) return zero_module(ring_);
  int32_t m = N_.pres.rows;
  if (m == 0) return zero_module(ring_);
  int32_t rnext = res_.complex.rank_at(i + 1);

  std::vector<MVec> U;
  if (rnext == 0) {
    U = unit_vectors(ring_, m * ri);
  } else {
    FreeModuleMap Dnext = kron_transpose(diff(i + 1), m);  // A^{m·ri} -> A^{m·rnext}
    FreeModuleMap W = psi_block(N_.pres, rnext);
    U.clear();
    auto syz = syzygy_columns(ring_, m * rnext, columns_to_mvecs(Dnext), columns_to_mvecs(W));
    ModOrder ord{&ring_, m * ri};
    for (const auto& col : syz) U.push_back(mvec_from_column(ring_, col, ord));
  }

  std::vector<MVec> V;
  if (i >= 1 && res_.complex.rank_at(i - 1) > 0) {
    FreeModuleMap Dthis = kron_transpose(diff(i), m);  // A^{m·r_{i-1}} -> A^{m·ri}
    for (auto& v : columns_to_mvecs(Dthis)) V.push_back(std::move(v));
  }
  for (auto& v : columns_to_mvecs(psi_block(N_.pres, ri))) V.push_back(std::move(v));
  return present_subquotient(ring_, m * ri, U, V);
}

PresentedModule ExtTor::tor(int32_t i) const {
  if (i < 0) throw Error("tor: negative degree");
  if (i > maxdeg_) throw Error("tor: degree beyond the prepared window");
  if (i == 0) {
    PresentedModule M0 = coker(diff(1));
    if (res_.complex.rank_at(0) == 0) return zero_module(ring_);
    return tensor_modules(M0, N_);
  }
  int32_t ri = res_.complex.rank_at(i);
  if (ri == 0) return zero_module(ring_);
  int32_t m = N_.pres.rows;
  if (m == 0) return zero_module(ring_);
  int32_t rprev = res_.complex.rank_at(i - 1);

  FreeModuleMap Ti = kron(diff(i), m);  // A^{m·ri} -> A^{m·rprev}
  std::vector<MVec> U;
  auto syz = syzygy_columns(ring_, m * rprev, columns_to_mvecs(Ti),
                            columns_to_mvecs(psi_block(N_.pres, rprev)));
  ModOrder ord{&ring_, m * ri};
  for (const auto& col : syz) U.push_back(mvec_from_column(ring_, col, ord));

  std::vector<MVec> V;
  if (res_.complex.rank_at(i + 1) > 0) {
    FreeModuleMap Tnext = kron(diff(i + 1), m);
    for (auto& v : columns_to_mvecs(Tnext)) V.push_back(std::move(v));
  }
  for (auto& v : columns_to_mvecs(psi_block(N_.pres, ri))) V.push_back(std::move(v));
  return present_subquotient(ring_, m * ri, U, V);
}

PresentedModule ext_module(const PresentedModule& M, const PresentedModule& N, int32_t i) {
  return ExtTor(M, N, i).ext(i);
}

PresentedModule tor_module(const PresentedModule& M, const PresentedModule& N, int32_t i) {
  return ExtTor(M, N, i).tor(i);
}

PresentedModule hom_modules(const PresentedModule& M, const PresentedModule& N,
                            std::vector<MVec>* carriers) {
  require_same_frame(M.ring, N.ring, "hom_modules");
  const RingSpec& R = M.ring;
  PresentedModule Nm = minimal_presentation(N).module;
  MinimalPresentation mp = minimal_presentation(M);
  int32_t r0 = mp.module.pres.rows;
  int32_t m = Nm.pres.rows;
  if (r0 == 0 || m == 0) {
    if (carriers) carriers->clear();
    return zero_module(R);
  }
  const FreeModuleMap& d1 = mp.module.pres;
  std::vector<MVec> U;
  if (d1.cols == 0) {
    U = unit_vectors(R, m * r0);
  } else {
    FreeModuleMap D1 = kron_transpose(d1, m);
    auto syz = syzygy_columns(R, m * d1.cols, columns_to_mvecs(D1),
                              columns_to_mvecs(psi_block(Nm.pres, d1.cols)));
    ModOrder ord{&R, m * r0};
    for (const auto& col : syz) U.push_back(mvec_from_column(R, col, ord));
  }
  std::vector<MVec> V = columns_to_mvecs(psi_block(Nm.pres, r0));
  return present_subquotient(R, m * r0, U, V, carriers);
}

Ideal annihilator_of(const PresentedModule& M) {
  const RingSpec& R = M.ring;
  int32_t r = M.pres.rows;
  if (r == 0)
    return make_ideal(R, std::vector<Polynomial>{poly_const(R, Scalar::one(R.field))});
  std::optional<Ideal> acc;
  for (int32_t j = 0; j < r; ++j) {
    MVec e;
    e.terms.push_back({Scalar::one(R.field), Monomial(R.nvars()), j});
    auto syz = syzygy_columns(R, r, {e}, columns_to_mvecs(M.pres));
    std::vector<Polynomial> gens;
    for (auto& s : syz)
      if (!s[0].is_zero()) gens.push_back(s[0]);
    Ideal part = make_ideal(R, std::move(gens));
    acc = acc ? intersect_ideals(*acc, part) : part;
  }
  return *acc;
}

CodimProfile codim_profile_of(const PresentedModule& M, int32_t bound) {
  const RingSpec& R = M.ring;
  int32_t dim = krull_dim(R);
  if (bound < 0) bound = dim + 1;
  if (module_is_zero(M)) return {0, true};
  PresentedModule A1 = free_module(R, 1);
  ExtTor et(M, A1, bound);
  std::vector<int32_t> nonzero;
  for (int32_t i = 0; i <= bound; ++i)
    if (!module_is_zero(et.ext(i))) nonzero.push_back(i);
  if (nonzero.empty()) {
    if (bound < dim) throw Error("codim_profile: inconclusive (bound below ring dimension)");
    throw Error("codim_profile: nonzero module with no Ext into the ring");
  }
  CodimProfile out;
  out.g = nonzero[0];
  out.isCM = nonzero.size() == 1;
  return out;
}

PresentedModule dagger_dual(const PresentedModule& D) {
  CodimProfile p = codim_profile_of(D);
  if (!p.isCM) throw Error("dagger_dual: module is not Cohen-Macaulay (Ext into the ring at several indices)");
  return ext_module(D, free_module(D.ring, 1), p.g);
}

TraceStability trace_and_stability(const PresentedModule& M) {
  const RingSpec& R = M.ring;
  std::vector<MVec> carriers;
  hom_modules(M, free_module(R, 1), &carriers);
  std::vector<Polynomial> gens;
  for (const auto& h : carriers) {
    // carrier in A^{r0}: entries are the images of the generators
    for (const auto& t : h.terms) {
      Polynomial p;
      p.terms.push_back({t.coeff, t.mono});
      gens.push_back(p);
    }
  }
  TraceStability out{make_ideal(R, std::move(gens)), false};
  Polynomial one = poly_const(R, Scalar::one(R.field));
  out.stable = !ideal_member(one, out.trace);
  return out;
}

std::string Fingerprint::to_string() const {
  std::string s = "betti[";
  for (size_t i = 0; i < betti.size(); ++i) s += (i ? "," : "") + std::to_string(betti[i]);
  s += "] filt[";
  for (size_t i = 0; i < filt.size(); ++i) s += (i ? "," : "") + std::to_string(filt[i]);
  s += "] ann[";
  for (size_t i = 0; i < ann_leads.size(); ++i) s += (i ? "," : "") + ann_leads[i];
  s += "]";
  return s;
}

Fingerprint module_fingerprint(const PresentedModule& M, int32_t betti_bound, int32_t filt_bound) {
  const RingSpec& R = M.ring;
  Fingerprint fp;
  Resolution res = resolve_module(M, betti_bound);
  fp.betti = res.betti.betti;

  MinimalPresentation mp = minimal_presentation(M);
  int32_t r = mp.module.pres.rows;
  for (int32_t j = 1; j <= filt_bound; ++j) {
    if (r == 0) { fp.filt.push_back(0); continue; }
    auto monos = monomials_of_degree(R, j);
    FreeModuleMap f(R, r, mp.module.pres.cols + static_cast<int32_t>(monos.size()) * r);
    for (int32_t i = 0; i < r; ++i)
      for (int32_t c = 0; c < mp.module.pres.cols; ++c) f.at(i, c) = mp.module.pres.at(i, c);
    int32_t col = mp.module.pres.cols;
    for (int32_t t = 0; t < r; ++t)
      for (const auto& m : monos) f.at(t, col++) = poly_term(R, Scalar::one(R.field), m);
    auto len = module_length(coker(f));
    if (!len) throw Error("module_fingerprint: filtration quotient not finite");
    fp.filt.push_back(*len);
  }

  Ideal ann = std_basis(annihilator_of(M));
  for (const auto& p : ann.sbasis) fp.ann_leads.push_back(mono_to_string(R, p.leading().mono));
  return fp;
}

PresentedModule artinian_dual(const PresentedModule& L) {
  const RingSpec& R = L.ring;
  if (!R.trunc_degree || socle_dim(R) != 1)
    throw Error("artinian_dual: base ring must be Artinian Gorenstein");
  return hom_modules(L, free_module(R, 1));
}

}  // namespace linkmod
