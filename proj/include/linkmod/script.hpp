#ifndef LINKMOD_SCRIPT_HPP
#define LINKMOD_SCRIPT_HPP

#include "linkmod/emit.hpp"

namespace linkmod {

/// Session-language driver. Statements are ';'-terminated:
///   ring R = char 32003 vars x, y, z order local mod x^2+y^2+z^2;
///   let I = colon(ideal(x^7, y^7), ideal(x*y+y*z+x*z));
///   show betti(resolve(cyclic(I), 8));
///   check mingens(I) == 12;
/// Functions mirror the library surface (std, nf, colon, intersect, mingens,
/// resolve, betti, transpose, omega, hom, tensor, ext, tor, dagger, ann,
/// link, linkvia, cone, hcoh, mcmapprox, cx, cxtransfer, eisenbud, verdict, ...).
struct ScriptOptions {
  EmitFormat format = EmitFormat::text;
  int32_t bound = 8;
  int64_t characteristic = 32003;
  std::optional<int64_t> seed;
  bool fail_fast = false;
};

struct ScriptResult {
  int exit_code = 0;  // 0 ok, 1 check failed, 2 parse error, 3 internal error
  std::vector<OutputRecord> records;
  std::string error;
};

ScriptResult run_script_text(const std::string& text, const ScriptOptions& opt);
ScriptResult run_script_file(const std::string& path, const ScriptOptions& opt);

}  // namespace linkmod

#endif
