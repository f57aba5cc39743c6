#ifndef LINKMOD_CONE_HPP
#define LINKMOD_CONE_HPP

#include "linkmod/linkage.hpp"

namespace linkmod {

/// The mapping-cone construction: P a minimal resolution of M, Q a minimal
/// resolution of P0/qP0, φ: Q → P a chain lift of the natural surjection;
/// C = cone(φ*) with C^i = (Q*)^i ⊕ (P*)^{i+1} and
/// d(q̄, p̄) = (d_{Q*} q̄ + φ*(p̄), −d_{P*} p̄).
struct ConeComplex {
  RingSpec ring;
  Ideal q;
  int32_t g = 0;
  FreeComplex C;                    // cohomological, lo = -1
  Resolution P;                     // resolution of M
  Resolution Q;                     // resolution of P0/qP0
  std::vector<FreeModuleMap> lift;  // φ_i : Q_i -> P_i
};

ConeComplex ferrand_cone(const PresentedModule& M, const Ideal& q, int32_t bound);

/// H^i(C), presented minimally. Valid for lo <= i < hi of the cone.
PresentedModule cone_cohomology(const ConeComplex& cone, int32_t i);

struct MCMApprox {
  PresentedModule Y;  // B^g(C), finite projective dimension
  PresentedModule X;  // Z^g(C), maximal Cohen-Macaulay
  PresentedModule N;  // X/Y, the linked module
  int32_t projdim_Y = -1;
  bool y_inside_x = false;
  bool x_mcm = false;       // Ext^i(X, A) = 0 for 1..bound
  bool lengths_match = false;  // l(X) = l(Y) + l(N) when finite
};

MCMApprox mcm_approx(const ConeComplex& cone, int32_t ext_bound = 8);

}  // namespace linkmod

#endif
