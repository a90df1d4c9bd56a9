#include "scedeco/run_config.hpp"

#include "scedeco/domains/boolfit.hpp"
#include "scedeco/domains/gridworld.hpp"
#include "scedeco/errors.hpp"
#include "scedeco/scenario.hpp"

namespace scedeco {

namespace {

genome resolve_initial_genome(const json& spec_j, const std::string& family,
                              const json& params) {
  if (spec_j.is_array()) return genome_from_json(spec_j);
  if (!spec_j.is_object() || !spec_j.contains("preset")) {
    throw config_error("initial-genome must be an array or a preset object");
  }
  const std::string preset = spec_j.at("preset").get<std::string>();
  if (family == "gridworld") {
    const auto cfg = gridworld::config::from_params(params);
    if (preset == "stay-put") return gridworld::stay_put_genome(cfg);
    if (preset == "greedy") return gridworld::greedy_genome(cfg);
    if (preset == "shortest-path") return gridworld::shortest_path_genome(cfg);
  } else if (family == "boolfit") {
    const auto cfg = boolfit::config::from_params(params);
    if (preset == "zeros") return genome(static_cast<std::size_t>(cfg.row_count()), 0);
    if (preset == "target") return cfg.target_outputs;
  }
  throw config_error("unknown genome preset '" + preset + "' for family " + family);
}

}  // namespace

run_setup load_run_config(const json& config) {
  run_setup rs;
  rs.w = std::make_unique<world>();
  gridworld::register_vocabulary(*rs.w);
  boolfit::register_vocabulary(*rs.w);

  const json& domain_j = config.at("domain");
  const std::string family = domain_j.at("family").get<std::string>();
  const std::string env_id = domain_j.at("env-id").get<std::string>();
  const std::string domain_id = domain_j.at("id").get<std::string>();
  const json& params = domain_j.at("params");

  json canonical_params;
  if (family == "gridworld") {
    const auto cfg = gridworld::config::from_params(params);
    canonical_params = cfg.to_params();
    gridworld::register_family(*rs.w, env_id, cfg);
    rs.spec = gridworld::policy_genome_spec(cfg);
    rs.make_system = [cfg](const std::string& id, const genome& g) {
      return gridworld::make_policy_system(id, g, cfg);
    };
  } else if (family == "boolfit") {
    const auto cfg = boolfit::config::from_params(params);
    canonical_params = cfg.to_params();
    boolfit::register_family(*rs.w, env_id, cfg);
    rs.spec = boolfit::table_genome_spec(cfg);
    rs.make_system = [cfg](const std::string& id, const genome& g) {
      return boolfit::make_table_system(id, g, cfg);
    };
  } else {
    throw config_error("unknown domain family: " + family);
  }

  std::vector<clause> clauses;
  for (const auto& cj : domain_j.at("clauses")) {
    clause c;
    c.env = rs.w->instantiate(env_id, canonical_params);
    c.objective = goal::from_json(cj.at("goal"));
    for (const auto& atom : c.objective.atoms()) {
      if (!rs.w->has_atom(atom.name)) {
        throw config_error("clause goal uses unregistered atom: " + atom.name);
      }
    }
    c.measure = rs.w->measure(cj.at("measure").get<std::string>());
    clauses.push_back(std::move(c));
  }
  if (clauses.empty()) throw config_error("domain has no clauses");
  rs.base_domain = make_domain(domain_id, std::move(clauses));

  rs.optimizer = optimizer_config::from_json(config.at("optimizer"));
  if (rs.optimizer.proposals_per_generation < 1) {
    throw config_error("proposals-per-generation must be positive");
  }
  rs.antagonist = antagonist_config::from_json(config.at("antagonist"));
  rs.root_seed = config.at("root-seed").get<std::uint64_t>();
  rs.initial_genome = resolve_initial_genome(config.at("initial-genome"), family, params);
  if (rs.initial_genome.size() != rs.spec.length()) {
    throw config_error("initial genome length does not match the domain");
  }

  const json& schedule_j = config.at("schedule");
  adaptation_domain phase_domain = rs.base_domain;
  json phases_snapshot = json::array();
  for (const auto& pj : schedule_j.at("phases")) {
    schedule_phase phase;
    phase.name = pj.at("name").get<std::string>();
    phase.mutation_budget = pj.at("budget").get<std::int64_t>();
    phase.generations = pj.at("generations").get<std::int64_t>();
    if (pj.contains("harden")) {
      for (const auto& hj : pj.at("harden")) {
        std::vector<std::size_t> selector;
        for (const auto& idx : hj.at("clauses")) selector.push_back(idx.get<std::size_t>());
        goal zeta = goal::from_json(json{{"atoms", hj.at("atoms")}});
        for (const auto& atom : zeta.atoms()) {
          if (!rs.w->has_atom(atom.name)) {
            throw config_error("hardening uses unregistered atom: " + atom.name);
          }
        }
        phase_domain = harden_domain(phase_domain, zeta, selector);
      }
    }
    phase.space.id = "space-p" + std::to_string(rs.schedule.phases.size());
    phase.space.domains.push_back(phase_domain);
    rs.schedule.phases.push_back(std::move(phase));
    phases_snapshot.push_back(pj);
  }
  rs.schedule.off_site_border = schedule_j.at("off-site-border").get<std::size_t>();
  rs.schedule.validate();

  rs.snapshot = json{{"antagonist", rs.antagonist.to_json()},
                     {"domain",
                      json{{"clauses", domain_j.at("clauses")},
                           {"env-id", env_id},
                           {"family", family},
                           {"id", domain_id},
                           {"params", canonical_params}}},
                     {"initial-genome", genome_to_json(rs.initial_genome)},
                     {"optimizer", rs.optimizer.to_json()},
                     {"root-seed", rs.root_seed},
                     {"schedule",
                      json{{"off-site-border", rs.schedule.off_site_border},
                           {"phases", phases_snapshot}}}};
  return rs;
}

coevolution_setup to_coevolution_setup(const run_setup& rs) {
  coevolution_setup setup;
  setup.w = rs.w.get();
  setup.spec = rs.spec;
  setup.make_system = rs.make_system;
  setup.config_snapshot = rs.snapshot;
  return setup;
}

coevolution_run run_configured(const run_setup& rs, event_sink& sink) {
  const system_under_test initial = rs.make_system("sys-0", rs.initial_genome);
  const scenario_suite empty_suite(rs.schedule.phases.front().space.domains[0],
                                   "suite-p0");
  return coevolve(to_coevolution_setup(rs), rs.schedule, initial, empty_suite,
                  rs.optimizer, rs.antagonist, rs.root_seed, sink);
}

}  // namespace scedeco
