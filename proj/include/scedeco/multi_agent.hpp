#pragma once

#include <string>
#include <vector>

#include "scedeco/adaptation.hpp"

namespace scedeco {

// One agent of a claimed multi-agent decomposition: the component system
// together with the singleton adaptation domain it is claimed to adapt to.
struct agent_decomposition {
  system_under_test system;
  adaptation_domain domain;
};

struct agent_conditions {
  std::string agent_id;
  // Declared environment equals the base composed with all other agents
  // (checked structurally on environment ids).
  bool composition_matches = false;
  std::string expected_env_id;
  std::string declared_env_id;
  // Goal or fitness differs from the global clause's.
  bool objective_differs = false;
  // The agent adapts to its own domain.
  adaptation_report adapts;
};

struct multi_agent_report {
  bool verdict = false;
  std::vector<agent_conditions> agents;

  json to_json() const;
};

// Checks the three defining conditions of a multi-agent decomposition for
// every agent: declared composition identity, differing objective, and
// per-agent adaptation. Requires at least two agents, each with a
// singleton domain.
multi_agent_report check_multi_agent(const world& w,
                                     const std::vector<agent_decomposition>& agents,
                                     const clause& global,
                                     const environment& base_env,
                                     const seed_policy& seeds = {});

}  // namespace scedeco
