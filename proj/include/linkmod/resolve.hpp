#ifndef LINKMOD_RESOLVE_HPP
#define LINKMOD_RESOLVE_HPP

#include "linkmod/module.hpp"

namespace linkmod {

/// Indexed family of free-module maps. Terms live at indices lo..lo+ranks.size()-1.
/// Homological: maps[k] sends term(lo+k+1) -> term(lo+k).
/// Cohomological: maps[k] sends term(lo+k) -> term(lo+k+1).
struct FreeComplex {
  RingSpec ring;
  int32_t lo = 0;
  bool cohomological = false;
  std::vector<int32_t> ranks;
  std::vector<FreeModuleMap> maps;  // size ranks.size()-1

  int32_t hi() const { return lo + static_cast<int32_t>(ranks.size()) - 1; }
  int32_t rank_at(int32_t i) const {
    int32_t k = i - lo;
    if (k < 0 || k >= static_cast<int32_t>(ranks.size())) return 0;
    return ranks[static_cast<size_t>(k)];
  }
};

/// d∘d ≡ 0 modulo the quotient, all composable pairs.
bool complex_d2_zero(const FreeComplex& C);

struct BettiTable {
  std::string module_id;
  int32_t bound = 0;
  std::vector<int32_t> betti;
};

struct Resolution {
  FreeComplex complex;  // homological, lo = 0
  BettiTable betti;
};

/// Minimal free resolution to homological degree `bound`: iterated syzygies
/// with Nakayama-minimal generator selection, so differentials land in m by
/// construction (certified). Stops early when a syzygy is zero.
Resolution resolve_module(const PresentedModule& M, int32_t bound, std::string id = "");

/// Homotopy-equivalent complex with all entries in m. Cancels constant unit
/// entries; if non-constant units survive (non-Artinian, non-homogeneous data)
/// the resolution is recomputed from its cokernel.
FreeComplex minimize_complex(const FreeComplex& C);

/// Ω^1: cokernel of the second differential of the minimal resolution.
PresentedModule syzygy_module_of(const PresentedModule& M);

}  // namespace linkmod

#endif
