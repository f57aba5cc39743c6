#include "linkmod/linkage.hpp"

namespace linkmod {

PresentedModule horizontal_link(const PresentedModule& M) {
  MinimalPresentation mp = minimal_presentation(M);
  if (mp.module.pres.rows == 0) throw Error("horizontal_link: zero module");
  TraceStability ts = trace_and_stability(mp.module);
  if (!ts.stable)
    throw Error("horizontal_link: module has a free direct summand (stability required)");
  PresentedModule Tr = transpose_module(mp.module);
  PresentedModule N = syzygy_module_of(Tr);
  return minimal_presentation(N).module;
}

bool ideal_annihilates(const Ideal& q, const PresentedModule& M) {
  const RingSpec& R = M.ring;
  int32_t r = M.pres.rows;
  if (r == 0) return true;
  StandardBasis sb(R, r, r);
  sb.add_extras(columns_to_mvecs(M.pres));
  sb.adjoin_quotient(r);
  sb.complete();
  for (const auto& g : q.gens) {
    for (int32_t j = 0; j < r; ++j) {
      MVec v = mvec_from_poly(g, j);
      if (!sb.member(v)) return false;
    }
  }
  return true;
}

LinkageDatum link_via(const PresentedModule& M, const Ideal& q) {
  require_same_frame(M.ring, q.ring, "link_via");
  const RingSpec& A = M.ring;
  MinimalPresentation mp = minimal_presentation(M);
  if (!ideal_annihilates(q, mp.module))
    throw Error("link_via: q does not annihilate M");

  std::vector<Polynomial> quot = A.quotient;
  for (const auto& g : q.gens)
    if (!nf_mod_quotient(A, g).is_zero()) quot.push_back(g);
  RingSpec B = make_ring(A.field, A.vars, A.order, quot);

  LinkageDatum out;
  out.ambient = A;
  out.q = q;
  out.B = B;
  out.M_B = minimal_presentation(change_ring(mp.module, B)).module;
  out.N_B = horizontal_link(out.M_B);
  out.M_A = restrict_scalars(out.M_B, A);
  out.N_A = restrict_scalars(out.N_B, A);
  out.g = codim_profile_of(out.M_A).g;

  if (!ideal_annihilates(q, out.N_A)) throw Error("link_via: q does not annihilate the link");
  return out;
}

}  // namespace linkmod
