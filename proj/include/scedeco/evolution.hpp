#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scedeco/lineage.hpp"
#include "scedeco/scenario.hpp"

namespace scedeco {

// Builds a runnable system for a candidate genome; the domain module
// supplies this (policy tables, truth tables, ...).
using system_factory =
    std::function<system_under_test(const std::string& id, const genome& g)>;

struct optimizer_config {
  enum class strategy_t { hill_climb, one_plus_one_ea };
  strategy_t strategy = strategy_t::hill_climb;
  std::int64_t mutation_budget = 1;
  std::int64_t proposals_per_generation = 16;
  std::uint64_t rng_seed = 0;
  // A phase gets flagged in the run report after this many consecutive
  // generations without an acceptable candidate.
  std::int64_t stall_flag_generations = 5;

  json to_json() const;
  static optimizer_config from_json(const json& j);
};

struct antagonist_config {
  enum class strategy_t { random_sample, mutation_search };
  enum class hardness_t { minimize_system_fitness, flip_goal_to_fail };
  strategy_t strategy = strategy_t::mutation_search;
  hardness_t objective = hardness_t::minimize_system_fitness;
  std::int64_t candidates_per_round = 4;
  std::uint64_t rng_seed = 0;

  json to_json() const;
  static antagonist_config from_json(const json& j);
};

struct schedule_phase {
  std::string name;
  adaptation_space space;
  std::int64_t mutation_budget = 1;
  std::int64_t generations = 0;
};

// Phased reduction of permitted change. Budgets must be non-increasing
// and consecutive phase spaces must pass the space-sequence condition, so
// later phases only ever demand more.
struct cooldown_schedule {
  std::vector<schedule_phase> phases;
  std::size_t off_site_border = 0;  // index of the last off-site phase

  void validate() const;
};

// One optimizer move: the proposal round's outcome plus the evidence pair
// (parent and child measured on the current suite).
struct adaptation_step {
  std::string parent_id;
  std::string child_id;
  json delta = json::array();
  bool accepted = false;
  adaptation_report parent_on_suite;
  adaptation_report child_on_suite;
};

// Mutation kernel: a copy of g differing in at most `budget` entries,
// each redrawn uniformly from its alphabet. Deterministic in the rng
// state.
genome mutate(const genome& g, std::int64_t budget, const genome_spec& spec, rng& r);

// Proposes candidates and accepts the best one that keeps every scenario
// goal the parent satisfied, is fitness-dominating on every scenario, and
// strictly improves at least one. Otherwise returns an unaccepted step
// with child = parent.
adaptation_step evolve_step(const world& w, const system_under_test& current,
                            const scenario_suite& suite, const optimizer_config& opt,
                            std::int64_t budget, const genome_spec& spec,
                            const system_factory& make_system, rng& r,
                            const std::string& child_id = "child");

// Searches episode contexts for scenarios the current system handles
// badly. Returned scenarios are evaluated against the system, marked
// generated, and filtered by the hardness objective; they extend a suite,
// never replace anything in it.
std::vector<scenario> antagonist_step(const world& w, const system_under_test& s,
                                      const scenario_suite& suite,
                                      const antagonist_config& cfg, rng& r);

struct phase_marker {
  std::size_t phase_index = 0;
  std::string name;
  std::string domain_id;
  std::int64_t budget = 0;
  // Indices into coevolution_run::systems / ::suites, aligned pairwise:
  // entry k is the state after generation k of this phase.
  std::vector<std::size_t> system_versions;
  std::vector<std::size_t> suite_versions;
};

struct coevolution_run {
  json config;
  std::vector<system_under_test> systems;
  std::vector<scenario_suite> suites;
  std::vector<phase_marker> phases;
  json final_report;

  json to_json() const;
};

// Everything coevolve needs beyond the formal configs: the world the run
// executes in, the genome alphabet, the genome -> system builder, and the
// caller's config snapshot (embedded in the log so replay can rebuild the
// same setup from the file alone).
struct coevolution_setup {
  const world* w = nullptr;
  genome_spec spec;
  system_factory make_system;
  json config_snapshot = json::object();
};

// The arms race: per generation, one optimizer step followed by one
// antagonist round, under each phase's mutation budget, every event
// logged before the engine proceeds. The returned run has been validated
// as an adaptation sequence and a scenario sequence per phase.
coevolution_run coevolve(const coevolution_setup& setup,
                         const cooldown_schedule& schedule,
                         const system_under_test& initial,
                         const scenario_suite& initial_suite,
                         const optimizer_config& opt, const antagonist_config& ant,
                         std::uint64_t root_seed, event_sink& log);

// Genome layout of a self-adaptive system: a fixed-length optimizer
// segment followed by the behavioral payload.
struct self_adapt_segment {
  static constexpr std::size_t length = 4;
  std::int64_t strategy = 0;  // 0 identity, 1 hill-climb
  std::int64_t proposals = 0;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;

  static self_adapt_segment parse(const genome& g);
};

// Iterates s_i = combine(s_0, s_{i-1}): the segment carried by s0 is the
// mechanism, the previous version's payload the material. The result is
// an adaptation sequence on the suite's domain by the same acceptance
// rule evolve_step uses.
std::vector<system_under_test> self_adapt(const world& w, const system_under_test& s0,
                                          std::size_t n, const scenario_suite& suite,
                                          const genome_spec& payload_spec,
                                          const system_factory& make_system,
                                          event_sink* log = nullptr);

// Consecutive-pair check of the adaptivity-with-optimization preorder;
// transitivity extends it to all index pairs.
sequence_check is_adaptation_sequence(const world& w,
                                      const std::vector<system_under_test>& systems,
                                      const adaptation_space& space,
                                      const seed_policy& seeds = {});

// Sound, incomplete certification that later spaces only demand more:
// every domain of an earlier space needs a witness domain later whose
// clauses match environments and measures and imply the earlier goals.
sequence_check verify_space_sequence(const std::vector<adaptation_space>& spaces);

// True iff every per-clause dominating frontier only moves up across
// consecutive suite versions.
sequence_check hardness_frontier_monotone(const std::vector<scenario_suite>& suites);

}  // namespace scedeco
