#ifndef LINKMOD_REPRO7_HPP
#define LINKMOD_REPRO7_HPP

#include "linkmod/emit.hpp"

namespace linkmod {

/// Canned reproduction of the quotient-ring linkage computation:
/// R = k[x,y,z] local mod u = x^2+y^2+z^2, I = (x^7,y^7):(xy+yz+xz),
/// generator counts, the containment chain, and (with deep=true) the
/// complexity-separation pipeline over A = k[x,y,z]/(u, x^8).
struct Repro7Options {
  int64_t characteristic = 32003;
  int32_t bound = 8;
  bool deep = false;
  double deep_budget_seconds = 1800.0;
  EmitFormat format = EmitFormat::text;
  std::optional<int64_t> seed;
};

struct Repro7Result {
  int exit_code = 0;  // 0 all checks pass, 1 some check failed
  std::vector<OutputRecord> records;
};

Repro7Result run_repro7(const Repro7Options& opt);

}  // namespace linkmod

#endif
