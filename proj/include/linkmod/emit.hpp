#ifndef LINKMOD_EMIT_HPP
#define LINKMOD_EMIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linkmod {

struct Provenance {
  int64_t characteristic = 0;
  std::string order;            // "local" | "grevlex" | ""
  int32_t resolution_bound = 8;
  int32_t window_lo = 2, window_hi = 8;
  std::optional<int64_t> seed;
};

struct CheckInfo {
  std::string expr;
  bool pass = false;
};

/// One unit of CLI output. `payload_json` is a serialized JSON object;
/// `payload_text` the human-readable form. Both are deterministic
/// byte-for-byte for identical inputs and bounds.
struct OutputRecord {
  std::string kind;
  std::string payload_json;
  std::string payload_text;
  Provenance provenance;
  std::optional<CheckInfo> check;
};

enum class EmitFormat { text, json };

std::string emit_record(const OutputRecord& rec, EmitFormat format);

/// Aligned two-row Betti table (degrees / ranks).
std::string format_betti_text(const std::vector<int32_t>& betti);

}  // namespace linkmod

#endif
