#include "linkmod/emit.hpp"

#include <json.hpp>

namespace linkmod {

std::string format_betti_text(const std::vector<int32_t>& betti) {
  std::string top = "  i    :";
  std::string bot = "  beta :";
  for (size_t i = 0; i < betti.size(); ++i) {
    std::string a = std::to_string(i);
    std::string b = std::to_string(betti[i]);
    size_t w = std::max(a.size(), b.size()) + 1;
    top += std::string(w - a.size(), ' ') + a;
    bot += std::string(w - b.size(), ' ') + b;
  }
  return top + "\n" + bot;
}

std::string emit_record(const OutputRecord& rec, EmitFormat format) {
  if (format == EmitFormat::text) {
    std::string s = "[" + rec.kind + "]";
    if (rec.check) s += std::string(" check ") + (rec.check->pass ? "PASS" : "FAIL") + ": " + rec.check->expr;
    s += "\n";
    if (!rec.payload_text.empty()) s += rec.payload_text + "\n";
    return s;
  }
  nlohmann::ordered_json j;
  j["kind"] = rec.kind;
  j["payload"] = nlohmann::ordered_json::parse(rec.payload_json.empty() ? "null" : rec.payload_json);
  nlohmann::ordered_json prov;
  prov["characteristic"] = rec.provenance.characteristic;
  prov["order"] = rec.provenance.order;
  prov["bounds"] = {{"resolution", rec.provenance.resolution_bound},
                    {"window", {rec.provenance.window_lo, rec.provenance.window_hi}}};
  if (rec.provenance.seed)
    prov["seed"] = *rec.provenance.seed;
  else
    prov["seed"] = nullptr;
  j["provenance"] = prov;
  if (rec.check) {
    j["check"] = {{"expr", rec.check->expr}, {"pass", rec.check->pass}};
  } else {
    j["check"] = nullptr;
  }
  return j.dump() + "\n";
}

}  // namespace linkmod
