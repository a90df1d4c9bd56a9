#include "scedeco/system.hpp"

#include "scedeco/errors.hpp"

namespace scedeco {

json genome_delta(const genome& from, const genome& to) {
  if (from.size() != to.size()) throw config_error("genome delta: length mismatch");
  json delta = json::array();
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] != to[i]) {
      delta.push_back(json{{"index", i}, {"value", to[i]}});
    }
  }
  return delta;
}

genome apply_genome_delta(const genome& base, const json& delta) {
  genome out = base;
  for (const auto& entry : delta) {
    const auto idx = entry.at("index").get<std::size_t>();
    if (idx >= out.size()) throw config_error("genome delta: index out of range");
    out[idx] = entry.at("value").get<std::int64_t>();
  }
  return out;
}

}  // namespace scedeco
