#include "scedeco/evolution.hpp"

#include <algorithm>

#include "scedeco/errors.hpp"
#include "scedeco/parallel.hpp"

namespace scedeco {

namespace {

std::string strategy_name(optimizer_config::strategy_t s) {
  return s == optimizer_config::strategy_t::hill_climb ? "hill-climb" : "one-plus-one-ea";
}

std::string strategy_name(antagonist_config::strategy_t s) {
  return s == antagonist_config::strategy_t::random_sample ? "random-sample"
                                                           : "mutation-search";
}

std::string objective_name(antagonist_config::hardness_t h) {
  return h == antagonist_config::hardness_t::minimize_system_fitness
             ? "minimize-system-fitness"
             : "flip-goal-to-fail";
}

// Outcome of running one system against one live scenario's context.
struct scenario_outcome {
  bool g = false;
  fitness_value f = fitness_value::scalar(0);
  trace behavior;
};

std::vector<scenario_outcome> eval_on_suite(const world& w, const system_under_test& s,
                                            const scenario_suite& suite) {
  const std::vector<scenario> live = suite.live();
  std::vector<scenario_outcome> out(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    const scenario& sc = live[i];
    const clause& c = suite.domain().clauses[sc.ref.clause_index];
    scenario_outcome& o = out[i];
    o.behavior = evaluate(s, w.instantiate(sc.x), sc.x.seed);
    o.g = satisfies(w, o.behavior, c.objective);
    o.f = fitness_of(o.behavior, c.measure);
  }
  return out;
}

// Candidate must keep every goal the parent holds and weakly dominate
// every scenario fitness.
bool dominates(const std::vector<scenario_outcome>& parent,
               const std::vector<scenario_outcome>& cand) {
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i].g && !cand[i].g) return false;
    if (!fitness_leq(parent[i].f, cand[i].f)) return false;
  }
  return true;
}

bool strictly_improves(const std::vector<scenario_outcome>& parent,
                       const std::vector<scenario_outcome>& cand) {
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (!parent[i].g && cand[i].g) return true;
    if (compare(cand[i].f, parent[i].f) == ordering::greater) return true;
  }
  return false;
}

// Total order for picking the best acceptable candidate: per scenario,
// goal flag first, then fitness; incomparable fitness ranks as a tie.
int compare_outcomes(const std::vector<scenario_outcome>& a,
                     const std::vector<scenario_outcome>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].g != b[i].g) return a[i].g ? 1 : -1;
    switch (compare(a[i].f, b[i].f)) {
      case ordering::less: return -1;
      case ordering::greater: return 1;
      default: break;
    }
  }
  return 0;
}

json results_json(const std::vector<scenario_outcome>& outcomes) {
  json arr = json::array();
  for (const auto& o : outcomes) {
    arr.push_back(json{{"f", o.f.to_json()}, {"g", o.g}});
  }
  return arr;
}

adaptation_report report_on_suite(const scenario_suite& suite,
                                  const std::vector<scenario_outcome>& outcomes) {
  adaptation_report report;
  report.domain_id = suite.id();
  report.verdict = true;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    clause_result r;
    r.index = i;
    r.goal_satisfied = outcomes[i].g;
    r.fitness = outcomes[i].f;
    r.trace_digest = outcomes[i].behavior.digest();
    report.verdict = report.verdict && r.goal_satisfied;
    report.clauses.push_back(std::move(r));
  }
  return report;
}

struct candidate_record {
  json delta;
  bool acceptable = false;
  std::string results_digest;
};

genome propose(const genome& parent, optimizer_config::strategy_t strategy,
               std::int64_t budget, const genome_spec& spec, rng& r) {
  if (strategy == optimizer_config::strategy_t::hill_climb) {
    return mutate(parent, budget, spec, r);
  }
  // (1+1)-EA kernel: each entry redrawn with probability 1/n, capped at
  // the phase budget.
  genome child = parent;
  const std::size_t n = parent.size();
  std::int64_t changed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool flip = r.next_below(n) == 0;
    const std::int64_t value =
        static_cast<std::int64_t>(r.next_below(static_cast<std::uint64_t>(
            spec.cardinalities[i])));
    if (flip && changed < budget) {
      child[i] = value;
      if (child[i] != parent[i]) ++changed;
    }
  }
  return child;
}

adaptation_step evolve_step_impl(const world& w, const system_under_test& current,
                                 const scenario_suite& suite,
                                 const optimizer_config& opt, std::int64_t budget,
                                 const genome_spec& spec,
                                 const system_factory& make_system, rng& r,
                                 const std::string& child_id,
                                 std::vector<candidate_record>* records) {
  if (suite.domain().clauses.empty()) {
    throw config_error("evolve step on a degenerate suite (no clauses)");
  }
  const std::vector<scenario_outcome> parent_outcomes = eval_on_suite(w, current, suite);

  const std::int64_t proposal_count = std::max<std::int64_t>(0, opt.proposals_per_generation);
  std::vector<genome> candidates;
  candidates.reserve(static_cast<std::size_t>(proposal_count));
  for (std::int64_t k = 0; k < proposal_count; ++k) {
    candidates.push_back(propose(current.genes, opt.strategy, budget, spec, r));
  }

  const std::vector<std::vector<scenario_outcome>> evaluations =
      parallel_map<std::vector<scenario_outcome>>(
          candidates.size(), [&](std::size_t k) {
            const system_under_test cand =
                make_system("candidate-" + std::to_string(k), candidates[k]);
            return eval_on_suite(w, cand, suite);
          });

  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const bool acceptable = dominates(parent_outcomes, evaluations[k]) &&
                            strictly_improves(parent_outcomes, evaluations[k]);
    if (records != nullptr) {
      records->push_back(candidate_record{genome_delta(current.genes, candidates[k]),
                                          acceptable,
                                          digest_of_json(results_json(evaluations[k]))});
    }
    if (!acceptable) continue;
    if (!best) {
      best = k;
      continue;
    }
    const int cmp = compare_outcomes(evaluations[k], evaluations[*best]);
    // Ties break toward the lexicographically smallest genome.
    if (cmp > 0 || (cmp == 0 && candidates[k] < candidates[*best])) best = k;
  }

  adaptation_step step;
  step.parent_id = current.id;
  step.parent_on_suite = report_on_suite(suite, parent_outcomes);
  if (!best) {
    step.child_id = current.id;
    step.accepted = false;
    step.child_on_suite = step.parent_on_suite;
    return step;
  }
  step.accepted = true;
  step.child_id = child_id;
  step.delta = genome_delta(current.genes, candidates[*best]);
  step.child_on_suite = report_on_suite(suite, evaluations[*best]);
  return step;
}

fitness_value median_fitness(std::vector<fitness_value> values) {
  // Selection rather than sort: the comparator need not be a strict weak
  // ordering for partially ordered kinds.
  const std::size_t target = (values.size() - 1) / 2;
  std::vector<fitness_value> picked;
  std::vector<bool> used(values.size(), false);
  for (std::size_t round = 0; round <= target; ++round) {
    std::size_t min_idx = values.size();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (used[i]) continue;
      if (min_idx == values.size() ||
          compare(values[i], values[min_idx]) == ordering::less) {
        min_idx = i;
      }
    }
    used[min_idx] = true;
    if (round == target) return values[min_idx];
    picked.push_back(values[min_idx]);
  }
  return values.front();
}

}  // namespace

json optimizer_config::to_json() const {
  return json{{"mutation-budget", mutation_budget},
              {"proposals-per-generation", proposals_per_generation},
              {"rng-seed", rng_seed},
              {"stall-flag-generations", stall_flag_generations},
              {"strategy", strategy_name(strategy)}};
}

optimizer_config optimizer_config::from_json(const json& j) {
  optimizer_config c;
  const std::string s = j.at("strategy").get<std::string>();
  if (s == "hill-climb") c.strategy = strategy_t::hill_climb;
  else if (s == "one-plus-one-ea") c.strategy = strategy_t::one_plus_one_ea;
  else throw config_error("unknown optimizer strategy: " + s);
  c.mutation_budget = j.at("mutation-budget").get<std::int64_t>();
  c.proposals_per_generation = j.at("proposals-per-generation").get<std::int64_t>();
  c.rng_seed = j.at("rng-seed").get<std::uint64_t>();
  if (j.contains("stall-flag-generations")) {
    c.stall_flag_generations = j.at("stall-flag-generations").get<std::int64_t>();
  }
  if (c.mutation_budget < 0) throw config_error("negative mutation budget");
  if (c.proposals_per_generation < 0) throw config_error("negative proposal count");
  return c;
}

json antagonist_config::to_json() const {
  return json{{"candidates-per-round", candidates_per_round},
              {"hardness-objective", objective_name(objective)},
              {"rng-seed", rng_seed},
              {"search-strategy", strategy_name(strategy)}};
}

antagonist_config antagonist_config::from_json(const json& j) {
  antagonist_config c;
  const std::string s = j.at("search-strategy").get<std::string>();
  if (s == "random-sample") c.strategy = strategy_t::random_sample;
  else if (s == "mutation-search") c.strategy = strategy_t::mutation_search;
  else throw config_error("unknown antagonist strategy: " + s);
  const std::string h = j.at("hardness-objective").get<std::string>();
  if (h == "minimize-system-fitness") c.objective = hardness_t::minimize_system_fitness;
  else if (h == "flip-goal-to-fail") c.objective = hardness_t::flip_goal_to_fail;
  else throw config_error("unknown hardness objective: " + h);
  c.candidates_per_round = j.at("candidates-per-round").get<std::int64_t>();
  c.rng_seed = j.at("rng-seed").get<std::uint64_t>();
  if (c.candidates_per_round < 0) throw config_error("negative candidate count");
  return c;
}

void cooldown_schedule::validate() const {
  if (phases.empty()) throw config_error("schedule has no phases");
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const schedule_phase& p = phases[i];
    if (p.mutation_budget < 0) throw config_error("negative mutation budget");
    if (p.generations < 0) throw config_error("negative generation count");
    if (p.space.domains.empty()) {
      throw config_error("phase " + std::to_string(i) + " has an empty space");
    }
    if (i > 0 && phases[i - 1].mutation_budget < p.mutation_budget) {
      throw config_error("mutation budgets must be non-increasing across phases");
    }
  }
  if (off_site_border >= phases.size()) {
    throw config_error("off-site border beyond the last phase");
  }
  std::vector<adaptation_space> spaces;
  spaces.reserve(phases.size());
  for (const auto& p : phases) spaces.push_back(p.space);
  const sequence_check spaces_ok = verify_space_sequence(spaces);
  if (!spaces_ok.ok) {
    throw config_error("phase spaces do not form an adaptation space sequence: " +
                       spaces_ok.violation);
  }
}

genome mutate(const genome& g, std::int64_t budget, const genome_spec& spec, rng& r) {
  if (budget > static_cast<std::int64_t>(g.size())) {
    throw config_error("mutation budget exceeds genome length");
  }
  if (g.size() != spec.length()) throw config_error("genome does not match spec");
  genome out = g;
  // Partial Fisher-Yates pick of `budget` distinct positions.
  std::vector<std::size_t> positions(g.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  for (std::int64_t k = 0; k < budget; ++k) {
    const std::size_t pick =
        static_cast<std::size_t>(k) +
        static_cast<std::size_t>(r.next_below(positions.size() - static_cast<std::size_t>(k)));
    std::swap(positions[static_cast<std::size_t>(k)], positions[pick]);
    const std::size_t pos = positions[static_cast<std::size_t>(k)];
    out[pos] = static_cast<std::int64_t>(
        r.next_below(static_cast<std::uint64_t>(spec.cardinalities[pos])));
  }
  return out;
}

adaptation_step evolve_step(const world& w, const system_under_test& current,
                            const scenario_suite& suite, const optimizer_config& opt,
                            std::int64_t budget, const genome_spec& spec,
                            const system_factory& make_system, rng& r,
                            const std::string& child_id) {
  return evolve_step_impl(w, current, suite, opt, budget, spec, make_system, r,
                          child_id, nullptr);
}

std::vector<scenario> antagonist_step(const world& w, const system_under_test& s,
                                      const scenario_suite& suite,
                                      const antagonist_config& cfg, rng& r) {
  std::vector<scenario> kept;
  if (cfg.candidates_per_round == 0) return kept;

  const adaptation_domain& domain = suite.domain();
  std::vector<std::size_t> mutable_clauses;
  for (std::size_t i = 0; i < domain.clauses.size(); ++i) {
    if (w.supports_context_mutation(domain.clauses[i].env.id)) {
      mutable_clauses.push_back(i);
    }
  }
  if (mutable_clauses.empty()) {
    throw unsupported_error("no clause environment supports context mutation");
  }

  const std::vector<scenario> live = suite.live();
  std::vector<std::size_t> mutable_live;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (w.supports_context_mutation(live[i].x.env_id)) mutable_live.push_back(i);
  }

  for (std::int64_t k = 0; k < cfg.candidates_per_round; ++k) {
    std::size_t clause_index = 0;
    std::string env_id;
    json base_params;
    if (cfg.strategy == antagonist_config::strategy_t::mutation_search &&
        !mutable_live.empty()) {
      const scenario& source =
          live[mutable_live[static_cast<std::size_t>(r.next_below(mutable_live.size()))]];
      clause_index = source.ref.clause_index;
      env_id = source.x.env_id;
      base_params = source.x.params;
    } else {
      clause_index =
          mutable_clauses[static_cast<std::size_t>(r.next_below(mutable_clauses.size()))];
      env_id = domain.clauses[clause_index].env.id;
      base_params = domain.clauses[clause_index].env.params;
    }

    const json params = w.mutate_context(env_id, base_params, r);
    const std::uint64_t seed = r.next_u64();
    const environment env = w.instantiate(env_id, params);
    const trace t = evaluate(s, env, seed);
    const clause& c = domain.clauses[clause_index];

    scenario sc;
    sc.x = episode_context{env_id, seed, params};
    sc.y_digest = t.digest();
    sc.g = satisfies(w, t, c.objective);
    sc.f = fitness_of(t, c.measure);
    sc.ref = clause_ref{domain.id, clause_index};
    sc.origin = scenario_origin::generated;

    if (cfg.objective == antagonist_config::hardness_t::flip_goal_to_fail) {
      if (sc.g) continue;
    } else {
      std::vector<fitness_value> baseline;
      for (const scenario& existing : live) {
        if (existing.ref.clause_index == clause_index) baseline.push_back(existing.f);
      }
      if (!baseline.empty() && !fitness_leq(sc.f, median_fitness(std::move(baseline)))) {
        continue;
      }
    }
    kept.push_back(std::move(sc));
  }
  return kept;
}

json coevolution_run::to_json() const {
  json systems_j = json::array();
  for (const auto& s : systems) {
    systems_j.push_back(json{{"genome", genome_to_json(s.genes)}, {"id", s.id}});
  }
  json suites_j = json::array();
  for (const auto& s : suites) suites_j.push_back(s.to_json());
  json phases_j = json::array();
  for (const auto& p : phases) {
    phases_j.push_back(json{{"budget", p.budget},
                            {"domain", p.domain_id},
                            {"name", p.name},
                            {"phase", p.phase_index},
                            {"suite-versions", p.suite_versions},
                            {"system-versions", p.system_versions}});
  }
  return json{{"config", config},
              {"final-report", final_report},
              {"phases", phases_j},
              {"suites", suites_j},
              {"systems", systems_j}};
}

coevolution_run coevolve(const coevolution_setup& setup,
                         const cooldown_schedule& schedule,
                         const system_under_test& initial,
                         const scenario_suite& initial_suite,
                         const optimizer_config& opt, const antagonist_config& ant,
                         std::uint64_t root_seed, event_sink& log) {
  schedule.validate();
  if (setup.w == nullptr || !setup.make_system) {
    throw config_error("coevolution setup is incomplete");
  }
  for (const auto& p : schedule.phases) {
    if (p.space.domains.size() != 1) {
      throw config_error("coevolve runs against singleton phase spaces");
    }
  }
  const world& w = *setup.w;
  const seed_policy seeds{root_seed};

  coevolution_run run;
  run.config = setup.config_snapshot;

  system_under_test current = setup.make_system("sys-0", initial.genes);
  run.systems.push_back(current);
  std::size_t current_index = 0;
  std::uint64_t system_counter = 1;

  log.emit("run-start", json{{"config", setup.config_snapshot},
                             {"initial-system", current.id},
                             {"root-seed", root_seed}});

  rng opt_rng(mix64(mix64(root_seed, "optimizer"), opt.rng_seed));
  rng ant_rng(mix64(mix64(root_seed, "antagonist"), ant.rng_seed));

  std::uint64_t accepted_total = 0;
  std::uint64_t generations_total = 0;
  std::vector<std::size_t> flagged_phases;
  std::vector<bool> phase_safety_checks;

  for (std::size_t p = 0; p < schedule.phases.size(); ++p) {
    const schedule_phase& phase = schedule.phases[p];
    const adaptation_domain& domain = phase.space.domains[0];
    const std::string suite_id = "suite-p" + std::to_string(p);

    // Cooldown safety evidence: the system entering this phase still
    // adapts to everything demanded before it.
    if (p > 0) {
      bool safe = true;
      for (std::size_t q = 0; q < p; ++q) {
        for (const auto& d : schedule.phases[q].space.domains) {
          safe = safe && adapts_to(w, current, d, seeds).verdict;
        }
      }
      phase_safety_checks.push_back(safe);
    }

    log.emit("phase-start", json{{"budget", phase.mutation_budget},
                                 {"domain", domain.id},
                                 {"generations", phase.generations},
                                 {"name", phase.name},
                                 {"phase", p},
                                 {"suite", suite_id}});

    scenario_suite suite(domain, suite_id);
    if (p == 0 && initial_suite.live_count() > 0) {
      if (initial_suite.domain().id != domain.id) {
        throw config_error("initial suite is over domain " + initial_suite.domain().id +
                           ", phase 0 uses " + domain.id);
      }
      suite = initial_suite;
      for (const scenario& sc : suite.live()) {
        const clause& c = domain.clauses[sc.ref.clause_index];
        const trace t = evaluate(current, w.instantiate(sc.x), sc.x.seed);
        if (satisfies(w, t, c.objective) != sc.g || !(fitness_of(t, c.measure) == sc.f)) {
          throw config_error("initial suite scenario " + sc.id +
                             " is inconsistent with the initial system");
        }
        log.emit("scenario-added", json{{"generation", 0},
                                        {"phase", p},
                                        {"scenario", sc.to_json()},
                                        {"suite", suite.id()}});
      }
    } else {
      for (std::size_t i = 0; i < domain.clauses.size(); ++i) {
        const scenario sc =
            record_scenario(w, current, domain, i, seeds.seed_for(domain, i));
        suite = append_scenario(suite, sc);
        log.emit("scenario-added", json{{"generation", 0},
                                        {"phase", p},
                                        {"scenario", suite.entries().back().to_json()},
                                        {"suite", suite.id()}});
      }
    }

    phase_marker marker;
    marker.phase_index = p;
    marker.name = phase.name;
    marker.domain_id = domain.id;
    marker.budget = phase.mutation_budget;
    run.suites.push_back(suite);
    marker.suite_versions.push_back(run.suites.size() - 1);
    marker.system_versions.push_back(current_index);

    std::int64_t stall = 0;
    bool flagged = false;
    for (std::int64_t gen = 1; gen <= phase.generations; ++gen) {
      ++generations_total;
      std::vector<candidate_record> records;
      const std::string child_id = "sys-" + std::to_string(system_counter);
      const adaptation_step step =
          evolve_step_impl(w, current, suite, opt, phase.mutation_budget, setup.spec,
                           setup.make_system, opt_rng, child_id, &records);
      for (std::size_t k = 0; k < records.size(); ++k) {
        log.emit("candidate-evaluated", json{{"acceptable", records[k].acceptable},
                                             {"candidate", k},
                                             {"delta", records[k].delta},
                                             {"generation", gen},
                                             {"phase", p},
                                             {"results-digest", records[k].results_digest}});
      }
      if (step.accepted) {
        log.emit("candidate-accepted",
                 json{{"child", step.child_id},
                      {"delta", step.delta},
                      {"evidence",
                       json{{"child-report", digest_of_json(step.child_on_suite.to_json())},
                            {"parent-report",
                             digest_of_json(step.parent_on_suite.to_json())}}},
                      {"generation", gen},
                      {"parent", step.parent_id},
                      {"phase", p}});
        current = setup.make_system(step.child_id,
                                    apply_genome_delta(current.genes, step.delta));
        ++system_counter;
        ++accepted_total;
        run.systems.push_back(current);
        current_index = run.systems.size() - 1;
        stall = 0;

        // Mastered updates: refresh every live scenario to the accepted
        // child's outcomes. The acceptance rule guarantees these harden.
        const std::vector<scenario> live_now = suite.live();
        const std::vector<scenario_outcome> outcomes = eval_on_suite(w, current, suite);
        for (std::size_t i = 0; i < live_now.size(); ++i) {
          const scenario& sc = live_now[i];
          const scenario_outcome& o = outcomes[i];
          const std::string new_digest = o.behavior.digest();
          if (o.g == sc.g && o.f == sc.f && new_digest == sc.y_digest) continue;
          suite = update_mastered(suite, sc.id, o.g, o.f, o.behavior);
          log.emit("scenario-updated", json{{"f", o.f.to_json()},
                                            {"g", o.g},
                                            {"generation", gen},
                                            {"phase", p},
                                            {"scenario", sc.id},
                                            {"suite", suite.id()},
                                            {"y-digest", new_digest}});
        }
      } else {
        ++stall;
        if (opt.stall_flag_generations > 0 && stall >= opt.stall_flag_generations) {
          flagged = true;
        }
      }

      for (scenario& sc : antagonist_step(w, current, suite, ant, ant_rng)) {
        suite = append_scenario(suite, std::move(sc));
        log.emit("scenario-added", json{{"generation", gen},
                                        {"phase", p},
                                        {"scenario", suite.entries().back().to_json()},
                                        {"suite", suite.id()}});
      }

      run.suites.push_back(suite);
      marker.suite_versions.push_back(run.suites.size() - 1);
      marker.system_versions.push_back(current_index);
    }
    if (flagged) flagged_phases.push_back(p);
    run.phases.push_back(std::move(marker));

    if (p + 1 < schedule.phases.size()) {
      log.emit("cooldown-advanced",
               json{{"from-budget", phase.mutation_budget},
                    {"from-phase", p},
                    {"to-budget", schedule.phases[p + 1].mutation_budget},
                    {"to-phase", p + 1}});
    }
  }

  // Post-hoc validation of the sequence properties the acceptance rule is
  // meant to guarantee.
  bool adaptation_ok = true;
  bool scenario_ok = true;
  bool frontier_ok = true;
  std::string first_violation;
  for (std::size_t p = 0; p < run.phases.size(); ++p) {
    const phase_marker& marker = run.phases[p];
    std::vector<system_under_test> chain;
    std::vector<scenario_suite> suite_chain;
    for (const std::size_t idx : marker.system_versions) chain.push_back(run.systems[idx]);
    for (const std::size_t idx : marker.suite_versions) suite_chain.push_back(run.suites[idx]);

    adaptation_space singleton;
    singleton.id = "run-phase-" + std::to_string(p);
    singleton.domains.push_back(schedule.phases[p].space.domains[0]);
    const sequence_check a = is_adaptation_sequence(w, chain, singleton, seeds);
    if (!a.ok && adaptation_ok) {
      adaptation_ok = false;
      first_violation = "phase " + std::to_string(p) + ": " + a.violation;
    }
    const sequence_check s =
        is_scenario_sequence(w, suite_chain, chain, schedule.phases[p].space.domains[0]);
    if (!s.ok && scenario_ok) {
      scenario_ok = false;
      if (first_violation.empty()) {
        first_violation = "phase " + std::to_string(p) + ": " + s.violation;
      }
    }
    const sequence_check fchk = hardness_frontier_monotone(suite_chain);
    frontier_ok = frontier_ok && fchk.ok;
  }
  std::vector<adaptation_space> spaces;
  for (const auto& ph : schedule.phases) spaces.push_back(ph.space);
  const bool spaces_ok = verify_space_sequence(spaces).ok;
  bool phase_safety = true;
  for (const bool b : phase_safety_checks) phase_safety = phase_safety && b;
  bool budgets_ok = true;
  for (std::size_t p = 1; p < schedule.phases.size(); ++p) {
    budgets_ok = budgets_ok && schedule.phases[p - 1].mutation_budget >=
                                   schedule.phases[p].mutation_budget;
  }

  log.emit("validation", json{{"adaptation-sequence", adaptation_ok},
                              {"budgets-non-increasing", budgets_ok},
                              {"hardness-frontier-monotone", frontier_ok},
                              {"phase-safety", phase_safety},
                              {"scenario-sequence", scenario_ok},
                              {"space-sequence", spaces_ok}});
  if (!adaptation_ok || !scenario_ok) {
    throw internal_consistency_error("run failed post-hoc sequence validation: " +
                                     first_violation);
  }

  json flagged_j = json::array();
  for (const auto f : flagged_phases) flagged_j.push_back(f);
  run.final_report = json{{"accepted-steps", accepted_total},
                          {"final-system", current.id},
                          {"flagged-phases", flagged_j},
                          {"generations", generations_total},
                          {"phase-safety", phase_safety},
                          {"space-sequence", spaces_ok}};
  log.emit("run-end", run.final_report);
  return run;
}

self_adapt_segment self_adapt_segment::parse(const genome& g) {
  if (g.size() <= length) {
    throw config_error("genome has no optimizer segment and payload");
  }
  self_adapt_segment seg;
  seg.strategy = g[0];
  seg.proposals = g[1];
  seg.budget = g[2];
  seg.seed = static_cast<std::uint64_t>(g[3]);
  if (seg.strategy != 0 && seg.strategy != 1) {
    throw config_error("unknown optimizer segment strategy");
  }
  if (seg.proposals < 0 || seg.budget < 0) {
    throw config_error("negative optimizer segment parameter");
  }
  return seg;
}

std::vector<system_under_test> self_adapt(const world& w, const system_under_test& s0,
                                          std::size_t n, const scenario_suite& suite,
                                          const genome_spec& payload_spec,
                                          const system_factory& make_system,
                                          event_sink* log) {
  if (n == 0) throw config_error("self-adaptation needs a positive length");
  const self_adapt_segment segment = self_adapt_segment::parse(s0.genes);
  const std::size_t payload_len = s0.genes.size() - self_adapt_segment::length;
  if (payload_spec.length() != payload_len) {
    throw config_error("payload spec does not match genome layout");
  }

  if (log != nullptr) {
    log->emit("run-start", json{{"config", json{{"mode", "self-adapt"}, {"n", n}}},
                                {"initial-system", s0.id},
                                {"root-seed", segment.seed}});
  }

  std::vector<system_under_test> sequence{s0};
  for (std::size_t i = 1; i < n; ++i) {
    const system_under_test& prev = sequence.back();
    if (segment.strategy == 0) {
      sequence.push_back(prev);
      continue;
    }
    rng r(mix64(segment.seed, i));
    const genome prev_payload(prev.genes.begin() + self_adapt_segment::length,
                              prev.genes.end());
    const std::vector<scenario_outcome> parent_outcomes = eval_on_suite(w, prev, suite);

    std::optional<genome> best_payload;
    std::optional<std::vector<scenario_outcome>> best_outcomes;
    for (std::int64_t k = 0; k < segment.proposals; ++k) {
      genome payload = mutate(prev_payload, segment.budget, payload_spec, r);
      genome full(prev.genes.begin(), prev.genes.begin() + self_adapt_segment::length);
      full.insert(full.end(), payload.begin(), payload.end());
      const system_under_test cand = make_system("sa-cand", full);
      std::vector<scenario_outcome> outcomes = eval_on_suite(w, cand, suite);
      if (!dominates(parent_outcomes, outcomes) ||
          !strictly_improves(parent_outcomes, outcomes)) {
        continue;
      }
      if (!best_outcomes || compare_outcomes(outcomes, *best_outcomes) > 0 ||
          (compare_outcomes(outcomes, *best_outcomes) == 0 && payload < *best_payload)) {
        best_payload = std::move(payload);
        best_outcomes = std::move(outcomes);
      }
    }
    if (!best_payload) {
      sequence.push_back(prev);
      continue;
    }
    genome full(prev.genes.begin(), prev.genes.begin() + self_adapt_segment::length);
    full.insert(full.end(), best_payload->begin(), best_payload->end());
    const std::string child_id = "sa-" + std::to_string(i);
    system_under_test child = make_system(child_id, full);
    if (log != nullptr) {
      log->emit("candidate-accepted", json{{"child", child_id},
                                           {"delta", genome_delta(prev.genes, full)},
                                           {"generation", i},
                                           {"parent", prev.id},
                                           {"phase", 0}});
    }
    sequence.push_back(std::move(child));
  }
  if (log != nullptr) {
    log->emit("run-end", json{{"accepted-steps", 0},
                              {"final-system", sequence.back().id},
                              {"flagged-phases", json::array()},
                              {"generations", n - 1}});
  }
  return sequence;
}

sequence_check is_adaptation_sequence(const world& w,
                                      const std::vector<system_under_test>& systems,
                                      const adaptation_space& space,
                                      const seed_policy& seeds) {
  for (std::size_t i = 0; i + 1 < systems.size(); ++i) {
    const ternary verdict =
        at_least_as_adaptive_opt(w, systems[i], systems[i + 1], space, seeds);
    if (verdict != ternary::yes) {
      return sequence_check{false,
                            "system " + systems[i + 1].id +
                                " is not at-least-as-adaptive-with-optimization over " +
                                systems[i].id + " (" + to_string(verdict) + ")",
                            i + 1};
    }
  }
  return {};
}

sequence_check verify_space_sequence(const std::vector<adaptation_space>& spaces) {
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t j = i + 1; j < spaces.size(); ++j) {
      for (const adaptation_domain& d : spaces[i].domains) {
        bool witnessed = false;
        for (const adaptation_domain& candidate : spaces[j].domains) {
          bool all_clauses = true;
          for (const clause& c : d.clauses) {
            bool found = false;
            for (const clause& cc : candidate.clauses) {
              if (cc.env.id == c.env.id && cc.measure.name == c.measure.name &&
                  goal_implies(cc.objective, c.objective)) {
                found = true;
                break;
              }
            }
            all_clauses = all_clauses && found;
          }
          if (all_clauses) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          return sequence_check{false,
                                "domain " + d.id + " of space " + std::to_string(i) +
                                    " has no witness in space " + std::to_string(j),
                                j};
        }
      }
    }
  }
  return {};
}

sequence_check hardness_frontier_monotone(const std::vector<scenario_suite>& suites) {
  const auto frontier = [](const scenario_suite& suite, std::size_t clause_index) {
    std::vector<scenario> on_clause;
    for (const scenario& sc : suite.live()) {
      if (sc.ref.clause_index == clause_index) on_clause.push_back(sc);
    }
    std::vector<scenario> maximal;
    for (const scenario& sc : on_clause) {
      bool strictly_below = false;
      for (const scenario& other : on_clause) {
        if (scenario_leq(sc, other) && !scenario_leq(other, sc)) {
          strictly_below = true;
          break;
        }
      }
      if (!strictly_below) maximal.push_back(sc);
    }
    return maximal;
  };

  for (std::size_t v = 0; v + 1 < suites.size(); ++v) {
    const std::size_t clause_count = suites[v].domain().clauses.size();
    for (std::size_t c = 0; c < clause_count; ++c) {
      const std::vector<scenario> before = frontier(suites[v], c);
      const std::vector<scenario> after = frontier(suites[v + 1], c);
      for (const scenario& sc : before) {
        bool dominated = false;
        for (const scenario& next : after) {
          if (scenario_leq(sc, next)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) {
          return sequence_check{false,
                                "frontier scenario " + sc.id + " of suite version " +
                                    std::to_string(v) + " not dominated at version " +
                                    std::to_string(v + 1),
                                v + 1};
        }
      }
    }
  }
  return {};
}

}  // namespace scedeco
