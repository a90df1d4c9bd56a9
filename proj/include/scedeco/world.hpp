#pragma once

#include <functional>
#include <map>
#include <string>

#include "scedeco/environment.hpp"
#include "scedeco/goal.hpp"
#include "scedeco/measure.hpp"
#include "scedeco/rng.hpp"

namespace scedeco {

// Registries for goal atoms, fitness measures, and environment families.
// Populated at startup by the domain modules and by run configuration;
// everything else resolves names through a const reference to this.
class world {
 public:
  using atom_evaluator = std::function<bool(const json& params, const trace&)>;

  // An environment family keyed by catalog id. instantiate() builds the
  // concrete environment for a parameter record; families that support
  // context mutation are the ones the antagonist can search over.
  struct env_family {
    std::string id;
    json base_params;
    bool mutable_context = false;
    std::function<environment(const json& params)> instantiate;
    std::function<json(const json& params, rng&)> mutate_context;
  };

  void register_atom(const std::string& name, atom_evaluator fn);
  bool has_atom(const std::string& name) const { return atoms_.count(name) > 0; }
  bool eval_atom(const goal_atom& atom, const trace& t) const;

  void register_measure(fitness_measure m);
  // Resolves a measure name; composite "max(a,b)" names resolve
  // recursively so softened domains survive a serialization round trip.
  fitness_measure measure(const std::string& name) const;
  bool has_measure(const std::string& name) const;

  void register_family(env_family f);
  const env_family& family(const std::string& id) const;
  environment instantiate(const std::string& env_id) const;
  environment instantiate(const std::string& env_id, const json& params) const;
  environment instantiate(const episode_context& ctx) const;
  bool supports_context_mutation(const std::string& env_id) const;
  json mutate_context(const std::string& env_id, const json& params, rng& r) const;

 private:
  std::map<std::string, atom_evaluator> atoms_;
  std::map<std::string, fitness_measure> measures_;
  std::map<std::string, env_family> families_;
};

}  // namespace scedeco
