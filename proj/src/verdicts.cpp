#include "linkmod/verdicts.hpp"

namespace linkmod {

bool is_hypersurface(const RingSpec& R) {
  if (R.quotient.empty()) return false;
  Ideal q = make_ideal(ambient_ring(R), R.quotient);
  if (!R.is_local()) return R.quotient.size() == 1;
  return minimal_generators(q).size() == 1;
}

namespace {

bool maps_equal(const FreeModuleMap& a, const FreeModuleMap& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (size_t k = 0; k < a.entries.size(); ++k)
    if (!poly_eq(nf_mod_quotient(a.ring, a.entries[k]), nf_mod_quotient(b.ring, b.entries[k])))
      return false;
  return true;
}

}  // namespace

bool resolution_two_periodic(const Resolution& res, int32_t hi, int32_t from) {
  const auto& maps = res.complex.maps;
  // need maps d_{p+1}, d_{p+2}, d_{p+3}, d_{p+4} with d_{p+3} = d_{p+1}, d_{p+4} = d_{p+2}
  for (int32_t p = from; p + 4 <= hi && p + 4 <= static_cast<int32_t>(maps.size()); ++p) {
    if (maps_equal(maps[static_cast<size_t>(p)], maps[static_cast<size_t>(p) + 2]) &&
        maps_equal(maps[static_cast<size_t>(p) + 1], maps[static_cast<size_t>(p) + 3]))
      return true;
  }
  return false;
}

std::optional<int32_t> resolution_period_start(const Resolution& res, int32_t hi) {
  const auto& maps = res.complex.maps;
  for (int32_t p = 0; p + 4 <= hi && p + 4 <= static_cast<int32_t>(maps.size()); ++p) {
    if (maps_equal(maps[static_cast<size_t>(p)], maps[static_cast<size_t>(p) + 2]) &&
        maps_equal(maps[static_cast<size_t>(p) + 1], maps[static_cast<size_t>(p) + 3]))
      return p;
  }
  return std::nullopt;
}

VanishingVerdict vanishing_verdict(const PresentedModule& first, const PresentedModule& second,
                                   VanishingMode mode, int32_t window_lo, int32_t window_hi) {
  if (window_lo < 0 || window_hi < window_lo) throw Error("vanishing_verdict: bad window");
  VanishingVerdict out;
  out.window_lo = window_lo;
  out.window_hi = window_hi;

  const PresentedModule& resolved = mode == VanishingMode::ext_into ? second : first;
  const PresentedModule& other = mode == VanishingMode::ext_into ? first : second;

  ExtTor et(resolved, other, window_hi);
  for (int32_t i = window_lo; i <= window_hi; ++i) {
    PresentedModule H = mode == VanishingMode::tor ? et.tor(i) : et.ext(i);
    if (!module_is_zero(H)) out.nonzero_indices.push_back(i);
  }
  out.vanishes_on_window = out.nonzero_indices.empty();

  if (is_hypersurface(resolved.ring) &&
      resolution_two_periodic(et.resolution(), window_hi))
    out.periodic_upgrade = true;
  out.label = out.periodic_upgrade && out.vanishes_on_window
                  ? "certified by hypersurface periodicity"
                  : "window evidence";
  return out;
}

}  // namespace linkmod
