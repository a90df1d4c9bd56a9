#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scedeco/record.hpp"
#include "scedeco/system.hpp"
#include "scedeco/trace.hpp"

namespace scedeco {

// Canonical id of an environment built by composing a base environment
// with component systems. Declared compositions are compared on this.
inline std::string composed_env_id(const std::string& base_id,
                                   const std::vector<std::string>& component_ids) {
  std::string id = base_id;
  for (const auto& c : component_ids) id += "*" + c;
  return id;
}

// A concrete, instantiated environment: runs one closed-loop episode of a
// system, deterministically in (genome, seed), never longer than horizon.
struct environment {
  std::string id;
  json params;
  std::int64_t horizon = 0;
  std::function<trace(const system_under_test&, std::uint64_t seed)> episode;
};

// Replayable stand-in for a scenario's situation component: everything
// needed to re-create the episode an observation came from.
struct episode_context {
  std::string env_id;
  std::uint64_t seed = 0;
  json params;

  friend bool operator==(const episode_context& a, const episode_context& b) {
    return a.env_id == b.env_id && a.seed == b.seed && a.params == b.params;
  }

  json to_json() const {
    return json{{"env", env_id}, {"params", params}, {"seed", seed}};
  }
  static episode_context from_json(const json& j) {
    return episode_context{j.at("env").get<std::string>(),
                           j.at("seed").get<std::uint64_t>(), j.at("params")};
  }
};

}  // namespace scedeco
