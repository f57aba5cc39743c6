#ifndef LINKMOD_LINKAGE_HPP
#define LINKMOD_LINKAGE_HPP

#include "linkmod/module_ops.hpp"

namespace linkmod {

/// N = Ω_B(Tr_B(M)), the horizontal link over M's own ring. Requires a
/// stable module (no free direct summand).
PresentedModule horizontal_link(const PresentedModule& M);

struct LinkageDatum {
  RingSpec ambient;       // A
  Ideal q;                // the (quasi-)Gorenstein ideal
  RingSpec B;             // A/q
  PresentedModule M_B;    // M as a B-module, minimal
  PresentedModule N_B;    // the link over B
  PresentedModule M_A;    // restrictions of scalars to A
  PresentedModule N_A;
  int32_t g = 0;          // codimension of M over A
};

/// Link M via q: verifies q ⊆ ann M, forms B = A/q, links horizontally over
/// B, and re-presents both modules over A.
LinkageDatum link_via(const PresentedModule& M, const Ideal& q);

/// true iff every generator of q annihilates M.
bool ideal_annihilates(const Ideal& q, const PresentedModule& M);

}  // namespace linkmod

#endif
