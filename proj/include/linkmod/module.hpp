#ifndef LINKMOD_MODULE_HPP
#define LINKMOD_MODULE_HPP

#include "linkmod/ideal.hpp"

namespace linkmod {

/// Map between free modules, matrix of polynomials (rows = target rank).
struct FreeModuleMap {
  RingSpec ring;
  int32_t rows = 0, cols = 0;
  std::vector<Polynomial> entries;  // row-major, rows*cols

  FreeModuleMap() = default;
  FreeModuleMap(const RingSpec& R, int32_t r, int32_t c)
      : ring(R), rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  Polynomial& at(int32_t i, int32_t j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const Polynomial& at(int32_t i, int32_t j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  std::vector<Polynomial> column(int32_t j) const;
};

FreeModuleMap transpose_map(const FreeModuleMap& f);
FreeModuleMap compose(const FreeModuleMap& f, const FreeModuleMap& g);  // f ∘ g
bool map_is_zero_mod_quotient(const FreeModuleMap& f);
/// Every entry reduced against the ring quotient; no nonzero constant coefficients
/// means the map is part of a minimal complex.
FreeModuleMap reduce_entries(const FreeModuleMap& f);
bool entries_in_max_ideal(const FreeModuleMap& f);

MVec column_to_mvec(const FreeModuleMap& f, int32_t j);
std::vector<MVec> columns_to_mvecs(const FreeModuleMap& f);
FreeModuleMap map_from_columns(const RingSpec& R, int32_t rows,
                               const std::vector<std::vector<Polynomial>>& cols);

/// Finitely presented module: cokernel of `pres`. rows = number of generators;
/// a rank-0 target is the zero module.
struct PresentedModule {
  RingSpec ring;
  FreeModuleMap pres;
  bool minimal = false;
};

PresentedModule free_module(const RingSpec& R, int32_t rank);
PresentedModule zero_module(const RingSpec& R);
PresentedModule cyclic_module(const RingSpec& R, const Ideal& I);  // A/I
PresentedModule coker(const FreeModuleMap& f);
PresentedModule residue_field_module(const RingSpec& R);  // k = A/m

bool module_is_zero(const PresentedModule& M);

/// Nakayama-greedy minimal generator subset of the given columns (indices
/// into `cols`), via membership against m·span + quotient + chosen.
std::vector<size_t> module_mingens(const RingSpec& R, int32_t ncomp,
                                   const std::vector<MVec>& cols);

struct MinimalPresentation {
  PresentedModule module;
  std::vector<int32_t> gen_map;  // new generator i = old generator gen_map[i]
};
MinimalPresentation minimal_presentation(const PresentedModule& M);

/// (im U + quotient)/(im V + quotient) as a minimally presented module.
/// Requires im V ⊆ im U + quotient (not re-checked). carriers, when requested,
/// are the ambient columns of the chosen generators.
PresentedModule present_subquotient(const RingSpec& R, int32_t ncomp,
                                    const std::vector<MVec>& U, const std::vector<MVec>& V,
                                    std::vector<MVec>* carriers = nullptr);

/// Columns generate ker(f) over the ring (quotient adjoined per component).
FreeModuleMap syzygy_map(const FreeModuleMap& f);

/// k-dimension of the cokernel, when finite (standard module monomial count).
std::optional<int64_t> module_length(const PresentedModule& M);

/// Re-present a module over a larger quotient ring (B = A/q) as a module over
/// A: adjoin B's extra quotient generators as relations.
PresentedModule restrict_scalars(const PresentedModule& M, const RingSpec& A);

/// View the same presentation over a finer ring frame (e.g. A-module seen
/// over B = A/q when q kills the module). Entries are reduced mod B.quotient.
PresentedModule change_ring(const PresentedModule& M, const RingSpec& B);

}  // namespace linkmod

#endif
