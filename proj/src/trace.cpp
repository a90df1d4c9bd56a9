#include "scedeco/trace.hpp"

namespace scedeco {

json trace::to_json() const {
  json steps_j = json::array();
  for (const auto& s : steps) {
    steps_j.push_back(json{{"action", scedeco::to_json(s.action)},
                           {"situation", scedeco::to_json(s.situation)}});
  }
  return json{{"seed", seed},
              {"steps", steps_j},
              {"terminal", scedeco::to_json(terminal)}};
}

trace trace::from_json(const json& j) {
  trace t;
  t.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& s : j.at("steps")) {
    t.steps.push_back(step{field_map_from_json(s.at("situation")),
                           field_map_from_json(s.at("action"))});
  }
  t.terminal = field_map_from_json(j.at("terminal"));
  return t;
}

}  // namespace scedeco
