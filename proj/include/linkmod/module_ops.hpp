#ifndef LINKMOD_MODULE_OPS_HPP
#define LINKMOD_MODULE_OPS_HPP

#include "linkmod/resolve.hpp"

namespace linkmod {

/// Auslander transpose: cokernel of the dualized minimal presentation.
PresentedModule transpose_module(const PresentedModule& M);

PresentedModule tensor_modules(const PresentedModule& M, const PresentedModule& N);

/// Ext^i(M,N) and Tor_i(M,N) with one shared resolution of M.
class ExtTor {
public:
  ExtTor(const PresentedModule& M, const PresentedModule& N, int32_t maxdeg);
  PresentedModule ext(int32_t i) const;
  PresentedModule tor(int32_t i) const;
  const Resolution& resolution() const { return res_; }

private:
  FreeModuleMap diff(int32_t k) const;  // d_k, zero-sized if absent
  RingSpec ring_;
  PresentedModule N_;
  Resolution res_;
  int32_t maxdeg_;
};

PresentedModule ext_module(const PresentedModule& M, const PresentedModule& N, int32_t i);
PresentedModule tor_module(const PresentedModule& M, const PresentedModule& N, int32_t i);

/// Hom(M,N) = Ext^0; carriers (optional) are the chosen generating
/// homomorphisms as vectors in N^{rank F0}.
PresentedModule hom_modules(const PresentedModule& M, const PresentedModule& N,
                            std::vector<MVec>* carriers = nullptr);

Ideal annihilator_of(const PresentedModule& M);

struct CodimProfile {
  int32_t g = 0;
  bool isCM = false;
};
/// Ext^i(M, A) scan over 0..bound (default dim+1). CM iff exactly one
/// nonvanishing index. Throws when the scan is inconclusive (all vanish,
/// bound < dim, M nonzero).
CodimProfile codim_profile_of(const PresentedModule& M, int32_t bound = -1);

/// D† = Ext^g(D, A) for Cohen-Macaulay D of codimension g.
PresentedModule dagger_dual(const PresentedModule& D);

struct TraceStability {
  Ideal trace;
  bool stable = false;
};
TraceStability trace_and_stability(const PresentedModule& M);

/// Necessary-condition isomorphism evidence: Betti window, filtration
/// dimensions dim_k M/m^j M, lead terms of the annihilator.
struct Fingerprint {
  std::vector<int32_t> betti;
  std::vector<int64_t> filt;
  std::vector<std::string> ann_leads;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.betti == b.betti && a.filt == b.filt && a.ann_leads == b.ann_leads;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
  std::string to_string() const;
};
Fingerprint module_fingerprint(const PresentedModule& M, int32_t betti_bound = 8,
                               int32_t filt_bound = 6);

/// Matlis dual Hom(L, A) over an Artinian Gorenstein base (where E ≅ A).
PresentedModule artinian_dual(const PresentedModule& L);

}  // namespace linkmod

#endif
