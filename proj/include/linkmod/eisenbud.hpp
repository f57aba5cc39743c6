#ifndef LINKMOD_EISENBUD_HPP
#define LINKMOD_EISENBUD_HPP

#include "linkmod/module_ops.hpp"

namespace linkmod {

/// Degree -2 cohomology operators of a resolution over A = P/(f_1..f_c):
/// lift the differentials to P, write the square of the lifted differential
/// as Σ f_j·t̃_j exactly, and reduce mod (f).
struct CohomOperators {
  RingSpec ambient;                                  // P
  std::vector<Polynomial> f;                         // the regular sequence
  Resolution res;                                    // minimal resolution over A
  // t[j][s]: F_s -> F_{s-2} over A, for 2 <= s <= bound
  std::vector<std::vector<FreeModuleMap>> t;
  // witnesses over P: t̃[j][s] with ∂̃∘∂̃ = Σ f_j t̃_j exactly
  std::vector<std::vector<FreeModuleMap>> t_lifted;
  int32_t bound = 0;
};

CohomOperators eisenbud_operators(const PresentedModule& M, int32_t bound);

/// d ∘ t_j = t_j ∘ d over A for all operators and degrees (exact check).
bool operators_chain_maps(const CohomOperators& ops);

/// Exact identity over P: ∂̃² − Σ f_j t̃_j = 0 at every degree.
bool operators_identity_exact(const CohomOperators& ops);

/// A square map over a local ring is an isomorphism iff it is surjective.
bool map_is_isomorphism(const FreeModuleMap& m);

}  // namespace linkmod

#endif
