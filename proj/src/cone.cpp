#include "linkmod/cone.hpp"

namespace linkmod {

namespace {

FreeModuleMap resolution_diff(const Resolution& res, int32_t k) {
  // d_k : F_k -> F_{k-1}; zero-sized when out of range
  if (k < 1 || k > static_cast<int32_t>(res.complex.maps.size()))
    return FreeModuleMap(res.complex.ring, res.complex.rank_at(k - 1), res.complex.rank_at(k));
  return res.complex.maps[static_cast<size_t>(k) - 1];
}

}  // namespace

ConeComplex ferrand_cone(const PresentedModule& M, const Ideal& q, int32_t bound) {
  require_same_frame(M.ring, q.ring, "ferrand_cone");
  const RingSpec& A = M.ring;
  MinimalPresentation mp = minimal_presentation(M);
  if (!ideal_annihilates(q, mp.module)) throw Error("ferrand_cone: q does not annihilate M");

  ConeComplex cone;
  cone.ring = A;
  cone.q = q;
  cone.g = codim_profile_of(mp.module).g;
  cone.P = resolve_module(mp.module, bound + 2);

  int32_t r0 = cone.P.complex.ranks[0];
  // P0/qP0: r0 copies of A/q
  std::vector<Polynomial> qgens;
  for (const auto& g : q.gens)
    if (!nf_mod_quotient(A, g).is_zero()) qgens.push_back(g);
  FreeModuleMap qpres(A, r0, static_cast<int32_t>(qgens.size()) * r0);
  {
    int32_t col = 0;
    for (int32_t t = 0; t < r0; ++t)
      for (const auto& g : qgens) qpres.at(t, col++) = g;
  }
  cone.Q = resolve_module(coker(qpres), bound + 2);
  if (cone.Q.complex.ranks[0] != r0)
    throw Error("ferrand_cone: resolution of P0/qP0 lost generators");

  // chain lift φ: Q -> P over the identity in degree 0
  int32_t steps = static_cast<int32_t>(cone.Q.complex.maps.size());
  cone.lift.resize(static_cast<size_t>(steps) + 1);
  FreeModuleMap phi0(A, r0, r0);
  for (int32_t i = 0; i < r0; ++i) phi0.at(i, i) = poly_const(A, Scalar::one(A.field));
  cone.lift[0] = phi0;
  for (int32_t i = 1; i <= steps; ++i) {
    FreeModuleMap dQ = resolution_diff(cone.Q, i);
    FreeModuleMap dP = resolution_diff(cone.P, i);
    FreeModuleMap target = compose(cone.lift[static_cast<size_t>(i) - 1], dQ);
    FreeModuleMap phi(A, dP.cols, dQ.cols);
    if (dQ.cols > 0) {
      std::vector<MVec> gens = columns_to_mvecs(dP);
      for (int32_t j = 0; j < dQ.cols; ++j) {
        MVec tcol = column_to_mvec(target, j);
        auto sol = solve_membership(A, target.rows, tcol, gens);
        if (!sol) throw Error("ferrand_cone: chain lift failed (target not in image)");
        for (int32_t t = 0; t < dP.cols; ++t) phi.at(t, j) = (*sol)[static_cast<size_t>(t)];
      }
    }
    cone.lift[static_cast<size_t>(i)] = std::move(phi);
  }

  // cone: C^i = (Q*)^i ⊕ (P*)^{i+1}, indices -1..bound
  cone.C.ring = A;
  cone.C.lo = -1;
  cone.C.cohomological = true;
  auto rQ = [&](int32_t i) { return cone.Q.complex.rank_at(i); };
  auto rP = [&](int32_t i) { return cone.P.complex.rank_at(i); };
  for (int32_t i = -1; i <= bound; ++i) cone.C.ranks.push_back(rQ(i) + rP(i + 1));
  for (int32_t i = -1; i < bound; ++i) {
    FreeModuleMap dQs = transpose_map(resolution_diff(cone.Q, i + 1));   // (Q*)^i -> (Q*)^{i+1}
    FreeModuleMap phis = transpose_map(i + 1 <= steps && i + 1 >= 0
                                           ? cone.lift[static_cast<size_t>(i) + 1]
                                           : FreeModuleMap(A, rP(i + 1), rQ(i + 1)));
    FreeModuleMap dPs = transpose_map(resolution_diff(cone.P, i + 2));   // (P*)^{i+1} -> (P*)^{i+2}
    FreeModuleMap d(A, rQ(i + 1) + rP(i + 2), rQ(i) + rP(i + 1));
    for (int32_t a = 0; a < dQs.rows; ++a)
      for (int32_t b = 0; b < dQs.cols; ++b) d.at(a, b) = dQs.at(a, b);
    for (int32_t a = 0; a < phis.rows; ++a)
      for (int32_t b = 0; b < phis.cols; ++b) d.at(a, rQ(i) + b) = phis.at(a, b);
    for (int32_t a = 0; a < dPs.rows; ++a)
      for (int32_t b = 0; b < dPs.cols; ++b) d.at(rQ(i + 1) + a, rQ(i) + b) = poly_neg(dPs.at(a, b));
    cone.C.maps.push_back(std::move(d));
  }
  if (!complex_d2_zero(cone.C)) throw Error("ferrand_cone: cone differential does not square to zero");
  return cone;
}

PresentedModule cone_cohomology(const ConeComplex& cone, int32_t i) {
  const RingSpec& A = cone.ring;
  const FreeComplex& C = cone.C;
  if (i < C.lo || i >= C.hi()) throw Error("cone_cohomology: index out of range");
  int32_t k = i - C.lo;  // maps[k]: term(i) -> term(i+1)
  const FreeModuleMap& dout = C.maps[static_cast<size_t>(k)];
  int32_t rank_i = C.ranks[static_cast<size_t>(k)];
  if (rank_i == 0) return zero_module(A);

  std::vector<MVec> U;
  if (dout.rows == 0) {
    for (int32_t t = 0; t < rank_i; ++t) {
      MVec e;
      e.terms.push_back({Scalar::one(A.field), Monomial(A.nvars()), t});
      U.push_back(std::move(e));
    }
  } else {
    auto syz = syzygy_columns(A, dout.rows, columns_to_mvecs(dout), {});
    ModOrder ord{&A, rank_i};
    for (const auto& col : syz) U.push_back(mvec_from_column(A, col, ord));
  }
  std::vector<MVec> V;
  if (k > 0) V = columns_to_mvecs(C.maps[static_cast<size_t>(k) - 1]);
  return present_subquotient(A, rank_i, U, V);
}

MCMApprox mcm_approx(const ConeComplex& cone, int32_t ext_bound) {
  const RingSpec& A = cone.ring;
  const FreeComplex& C = cone.C;
  int32_t g = cone.g;
  int32_t kg = g - C.lo;
  if (kg <= 0 || kg >= static_cast<int32_t>(C.maps.size()))
    throw Error("mcm_approx: cone window too small for the codimension");

  MCMApprox out;
  int32_t rank_g = C.ranks[static_cast<size_t>(kg)];

  // Z^g = ker(d^g)
  std::vector<MVec> Xgens;
  const FreeModuleMap& dg = C.maps[static_cast<size_t>(kg)];
  if (dg.rows == 0) {
    for (int32_t t = 0; t < rank_g; ++t) {
      MVec e;
      e.terms.push_back({Scalar::one(A.field), Monomial(A.nvars()), t});
      Xgens.push_back(std::move(e));
    }
  } else {
    auto syz = syzygy_columns(A, dg.rows, columns_to_mvecs(dg), {});
    ModOrder ord{&A, rank_g};
    for (const auto& col : syz) Xgens.push_back(mvec_from_column(A, col, ord));
  }
  std::vector<MVec> Xcarriers;
  out.X = present_subquotient(A, rank_g, Xgens, {}, &Xcarriers);

  // B^g = im(d^{g-1})
  const FreeModuleMap& dgm1 = C.maps[static_cast<size_t>(kg) - 1];
  std::vector<MVec> Ygens = columns_to_mvecs(dgm1);
  std::vector<MVec> Ycarriers;
  out.Y = present_subquotient(A, rank_g, Ygens, {}, &Ycarriers);

  out.N = cone_cohomology(cone, g);

  // Y ⊆ X by membership of carriers
  {
    StandardBasis sb(A, rank_g, rank_g);
    sb.add_extras(Xgens);
    sb.adjoin_quotient(rank_g);
    sb.complete();
    out.y_inside_x = true;
    for (const auto& y : Ycarriers)
      if (!sb.member(y)) out.y_inside_x = false;
  }

  // projdim Y within dim A
  int32_t d = krull_dim(A);
  Resolution ry = resolve_module(out.Y, d + 1);
  out.projdim_Y = -1;
  for (int32_t i = 0; i <= d + 1; ++i)
    if (ry.betti.betti[static_cast<size_t>(i)] != 0) out.projdim_Y = i;
  if (out.projdim_Y > d) throw Error("mcm_approx: projdim of B^g exceeds dim A");

  // X maximal Cohen-Macaulay: Ext^i(X, A) = 0 for 1..ext_bound
  out.x_mcm = true;
  {
    ExtTor et(out.X, free_module(A, 1), ext_bound);
    for (int32_t i = 1; i <= ext_bound; ++i)
      if (!module_is_zero(et.ext(i))) out.x_mcm = false;
  }

  auto lx = module_length(out.X);
  auto ly = module_length(out.Y);
  auto ln = module_length(out.N);
  out.lengths_match = lx && ly && ln ? (*lx == *ly + *ln) : false;
  return out;
}

}  // namespace linkmod
