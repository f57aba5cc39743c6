#ifndef LINKMOD_VERDICTS_HPP
#define LINKMOD_VERDICTS_HPP

#include "linkmod/module_ops.hpp"

namespace linkmod {

enum class VanishingMode { ext_from, ext_into, tor };

/// Windowed Ext/Tor vanishing evidence.
///   ext_from: Ext^i(first, second); ext_into: Ext^i(second, first);
///   tor: Tor_i(first, second).
/// periodic_upgrade fires when the ring is a hypersurface and the driving
/// resolution repeats with period two inside the window (two consecutive
/// differentials recur exactly); window vanishing then certifies asymptotic
/// vanishing. Otherwise the verdict is window evidence only.
struct VanishingVerdict {
  bool vanishes_on_window = false;
  bool periodic_upgrade = false;
  int32_t window_lo = 0, window_hi = 0;
  std::vector<int32_t> nonzero_indices;
  std::string label;  // "window evidence" or "certified by hypersurface periodicity"
};

VanishingVerdict vanishing_verdict(const PresentedModule& first, const PresentedModule& second,
                                   VanishingMode mode, int32_t window_lo, int32_t window_hi);

/// Exact two-periodicity of a minimal resolution inside [0, hi]: some pair of
/// consecutive differentials recurs verbatim two steps later.
bool resolution_two_periodic(const Resolution& res, int32_t hi, int32_t from = 0);

/// Smallest p with d_{p+3} = d_{p+1} and d_{p+4} = d_{p+2}, if any within hi.
std::optional<int32_t> resolution_period_start(const Resolution& res, int32_t hi);

/// The ring is a hypersurface: its quotient ideal has exactly one minimal generator.
bool is_hypersurface(const RingSpec& R);

}  // namespace linkmod

#endif
