#ifndef LINKMOD_COMPLEXITY_HPP
#define LINKMOD_COMPLEXITY_HPP

#include "linkmod/linkage.hpp"

namespace linkmod {

enum class CxClass { zero, one, two, three_plus, inconclusive };

std::string cx_class_name(CxClass c);

/// Betti-growth classification on the window [2, bound]. Class zero is
/// certified (a syzygy became zero); the others are window evidence only.
struct ComplexityEstimate {
  BettiTable betti;
  CxClass cls = CxClass::inconclusive;
  bool certified = false;  // true only for class zero
  std::string evidence;
};

ComplexityEstimate complexity_estimate(const PresentedModule& M, int32_t bound);

/// Transfer report: complexities of M, its link N, and A/q, with the
/// regime that applies and whether the window evidence matches the predicted
/// equality.
struct ComplexityTransferReport {
  ComplexityEstimate cx_M, cx_N, cx_Aq;
  bool q_gorenstein_evidence = false;
  int32_t q_type = -1;         // socle dimension (Artinian) or Ext-type; 1 = Gorenstein evidence
  std::string regime;          // which clause of the transfer statement applies
  bool matches_prediction = false;
  std::string label;           // always window evidence, never a proof
};

ComplexityTransferReport complexity_transfer_check(const LinkageDatum& datum, int32_t bound);

}  // namespace linkmod

#endif
