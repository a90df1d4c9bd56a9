#include "scedeco/multi_agent.hpp"

#include "scedeco/errors.hpp"

namespace scedeco {

json multi_agent_report::to_json() const {
  json agents_j = json::array();
  for (const auto& a : agents) {
    agents_j.push_back(json{{"adapts", a.adapts.to_json()},
                            {"agent", a.agent_id},
                            {"composition-matches", a.composition_matches},
                            {"declared-env", a.declared_env_id},
                            {"expected-env", a.expected_env_id},
                            {"objective-differs", a.objective_differs}});
  }
  return json{{"agents", agents_j}, {"verdict", verdict}};
}

multi_agent_report check_multi_agent(const world& w,
                                     const std::vector<agent_decomposition>& agents,
                                     const clause& global,
                                     const environment& base_env,
                                     const seed_policy& seeds) {
  if (agents.size() < 2) {
    throw config_error("multi-agent decomposition requires more than one agent");
  }
  for (const auto& a : agents) {
    if (a.domain.clauses.size() != 1) {
      throw unsupported_error("agent domains must be singletons");
    }
  }

  multi_agent_report report;
  report.verdict = true;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const agent_decomposition& a = agents[i];
    agent_conditions cond;
    cond.agent_id = a.system.id;

    std::vector<std::string> peer_ids;
    for (std::size_t j = 0; j < agents.size(); ++j) {
      if (j != i) peer_ids.push_back(agents[j].system.id);
    }
    cond.expected_env_id = composed_env_id(base_env.id, peer_ids);
    cond.declared_env_id = a.domain.clauses[0].env.id;
    cond.composition_matches = cond.expected_env_id == cond.declared_env_id;

    const clause& own = a.domain.clauses[0];
    cond.objective_differs = !(own.objective == global.objective) ||
                             own.measure.name != global.measure.name;

    cond.adapts = adapts_to(w, a.system, a.domain, seeds);

    report.verdict = report.verdict && cond.composition_matches &&
                     cond.objective_differs && cond.adapts.verdict;
    report.agents.push_back(std::move(cond));
  }
  return report;
}

}  // namespace scedeco
