#include <doctest.h>

#include <cstdlib>

#include "scedeco/domains/oracle.hpp"
#include "scedeco/errors.hpp"
#include "scedeco/evolution.hpp"
#include "scedeco/replay.hpp"
#include "scedeco/run_config.hpp"

#include "../support/test_world.hpp"

using namespace scedeco;
using testsupport::fixture;
namespace gw = scedeco::gridworld;

namespace {

fitness_value sc(std::int64_t v) { return fitness_value::scalar(v); }

std::size_t hamming(const genome& a, const genome& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

// 2x2 reach domain with the distance measure, which gives single-entry
// mutations a gradient to climb.
adaptation_domain distance_domain2(const fixture& f) {
  clause c = f.reach_clause("grid2", f.g2, "neg-remaining-manhattan");
  return make_domain("d2-dist", {c});
}

scenario_suite canonical_suite(const fixture& f, const adaptation_domain& d,
                               const system_under_test& s, std::uint64_t run_seed = 0) {
  const seed_policy seeds{run_seed};
  scenario_suite suite(d, "suite-" + d.id);
  for (std::size_t i = 0; i < d.clauses.size(); ++i) {
    suite = append_scenario(suite, record_scenario(f.w, s, d, i, seeds.seed_for(d, i)));
  }
  return suite;
}

system_factory grid_factory(const gw::config& cfg) {
  return [cfg](const std::string& id, const genome& g) {
    return gw::make_policy_system(id, g, cfg);
  };
}

}  // namespace

TEST_CASE("mutate: budget zero copies the genome") {
  const fixture f;
  const genome_spec spec = gw::policy_genome_spec(f.g3);
  const genome g = gw::stay_put_genome(f.g3);
  rng r(1);
  CHECK(mutate(g, 0, spec, r) == g);
}

TEST_CASE("mutate: budget bounds the Hamming distance") {
  const fixture f;
  const genome_spec spec = gw::policy_genome_spec(f.g3);
  const genome g = gw::stay_put_genome(f.g3);
  rng r(2);
  for (int i = 0; i < 200; ++i) {
    CHECK(hamming(g, mutate(g, 1, spec, r)) <= 1);
    CHECK(hamming(g, mutate(g, 4, spec, r)) <= 4);
  }
}

TEST_CASE("mutate: deterministic in the rng state") {
  const fixture f;
  const genome_spec spec = gw::policy_genome_spec(f.g3);
  const genome g = gw::greedy_genome(f.g3);
  rng a(77), b(77);
  for (int i = 0; i < 20; ++i) CHECK(mutate(g, 3, spec, a) == mutate(g, 3, spec, b));
}

TEST_CASE("mutate: budget beyond the genome length is an error") {
  const fixture f;
  const genome_spec spec = gw::policy_genome_spec(f.g3);
  rng r(3);
  CHECK_THROWS_AS(mutate(gw::stay_put_genome(f.g3), 10, spec, r), config_error);
}

TEST_CASE("evolve_step: an already optimal parent is never displaced") {
  const fixture f;
  const adaptation_domain d = f.reach_domain2();
  const system_under_test optimal =
      gw::make_policy_system("opt", gw::shortest_path_genome(f.g2), f.g2);
  // Confirm optimality by enumerating every 2x2 policy table.
  const fitness_value opt_fitness = adapts_to(f.w, optimal, d).clauses[0].fitness;
  oracle::for_each_genome(gw::policy_genome_spec(f.g2), [&](const genome& g) {
    const auto r = adapts_to(f.w, gw::make_policy_system("e", g, f.g2), d);
    REQUIRE(fitness_leq(r.clauses[0].fitness, opt_fitness));
    return true;
  });

  const scenario_suite suite = canonical_suite(f, d, optimal);
  optimizer_config opt;
  opt.proposals_per_generation = 64;
  rng r(42);
  const adaptation_step step = evolve_step(f.w, optimal, suite, opt, 2,
                                           gw::policy_genome_spec(f.g2),
                                           grid_factory(f.g2), r);
  CHECK_FALSE(step.accepted);
  CHECK(step.child_id == optimal.id);
}

TEST_CASE("evolve_step: stay-put improves under the distance gradient") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  const system_under_test stay = gw::make_policy_system("stay", gw::stay_put_genome(f.g2), f.g2);
  const scenario_suite suite = canonical_suite(f, d, stay);

  // Exhaustive budget-1 proposal enumeration: acceptable candidates exist
  // and each strictly improves the distance fitness.
  const fitness_value parent_f = adapts_to(f.w, stay, d).clauses[0].fitness;
  std::size_t acceptable = 0;
  for (std::size_t pos = 0; pos < 4; ++pos) {
    for (std::int64_t a = 0; a < gw::action_count; ++a) {
      genome g = stay.genes;
      g[pos] = a;
      const auto rep = adapts_to(f.w, gw::make_policy_system("e", g, f.g2), d);
      if (compare(rep.clauses[0].fitness, parent_f) == ordering::greater) ++acceptable;
    }
  }
  CHECK(acceptable > 0);

  optimizer_config opt;
  opt.proposals_per_generation = 64;
  rng r(7);
  const adaptation_step step = evolve_step(f.w, stay, suite, opt, 1,
                                           gw::policy_genome_spec(f.g2),
                                           grid_factory(f.g2), r, "sys-1");
  CHECK(step.accepted);
  CHECK(step.child_id == "sys-1");
  CHECK(compare(step.child_on_suite.clauses[0].fitness,
                step.parent_on_suite.clauses[0].fitness) == ordering::greater);
}

TEST_CASE("evolve_step: no proposals, no acceptance") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  const system_under_test stay = gw::make_policy_system("stay", gw::stay_put_genome(f.g2), f.g2);
  const scenario_suite suite = canonical_suite(f, d, stay);
  optimizer_config opt;
  opt.proposals_per_generation = 0;
  rng r(9);
  CHECK_FALSE(evolve_step(f.w, stay, suite, opt, 1, gw::policy_genome_spec(f.g2),
                          grid_factory(f.g2), r).accepted);
}

TEST_CASE("evolve_step: accepted steps leave the parent dominated") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  system_under_test current = gw::make_policy_system("sys-0", gw::stay_put_genome(f.g2), f.g2);
  scenario_suite suite = canonical_suite(f, d, current);
  optimizer_config opt;
  opt.proposals_per_generation = 32;
  rng r(13);
  for (int gen = 0; gen < 6; ++gen) {
    const adaptation_step step =
        evolve_step(f.w, current, suite, opt, 1, gw::policy_genome_spec(f.g2),
                    grid_factory(f.g2), r, "sys-" + std::to_string(gen + 1));
    if (!step.accepted) continue;
    const system_under_test child =
        gw::make_policy_system(step.child_id, apply_genome_delta(current.genes, step.delta), f.g2);
    CHECK(at_least_as_optimal(f.w, current, child, d) == ternary::yes);
    for (const scenario& live : suite.live()) {
      suite = update_mastered(suite, live.id,
                              step.child_on_suite.clauses[0].goal_satisfied,
                              step.child_on_suite.clauses[0].fitness);
    }
    current = child;
  }
  // The gradient is short on a 2x2: this must end optimal.
  CHECK(adapts_to(f.w, current, d).clauses[0].fitness ==
        oracle::oracle_best_fitness(d.clauses[0]));
}

TEST_CASE("evolve_step: parallel evaluation matches single-threaded") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  const system_under_test stay = gw::make_policy_system("stay", gw::stay_put_genome(f.g2), f.g2);
  const scenario_suite suite = canonical_suite(f, d, stay);
  optimizer_config opt;
  opt.proposals_per_generation = 48;

  const auto run_once = [&] {
    rng r(21);
    return evolve_step(f.w, stay, suite, opt, 1, gw::policy_genome_spec(f.g2),
                       grid_factory(f.g2), r, "sys-1");
  };
  const adaptation_step sequential = run_once();
  setenv("SCEDECO_THREADS", "4", 1);
  const adaptation_step threaded = run_once();
  unsetenv("SCEDECO_THREADS");
  CHECK(sequential.accepted == threaded.accepted);
  CHECK(sequential.delta == threaded.delta);
  CHECK(sequential.child_on_suite.to_json() == threaded.child_on_suite.to_json());
}

TEST_CASE("antagonist_step: zero candidates yield nothing") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  const system_under_test stay = gw::make_policy_system("s", gw::stay_put_genome(f.g2), f.g2);
  const scenario_suite suite = canonical_suite(f, d, stay);
  antagonist_config cfg;
  cfg.candidates_per_round = 0;
  rng r(5);
  CHECK(antagonist_step(f.w, stay, suite, cfg, r).empty());
}

TEST_CASE("antagonist_step: finds the obstacle that blinds the greedy walker") {
  fixture f;
  gw::config cfg4;
  cfg4.width = 4;
  cfg4.height = 4;
  cfg4.start = {0, 0};
  cfg4.target = {3, 3};
  cfg4.horizon = 24;
  cfg4.mutation.mutate_obstacles = true;
  cfg4.mutation.max_obstacles = 1;
  gw::register_family(f.w, "grid4", cfg4);

  // Obstacle-blind greedy, computed on the empty grid.
  const system_under_test blind =
      gw::make_policy_system("blind", gw::greedy_genome(cfg4), cfg4);

  clause c;
  c.env = gw::make_environment("grid4", cfg4);
  c.objective = goal({goal_atom{"reach-target"}});
  c.measure = f.w.measure("neg-steps");
  const adaptation_domain d = make_domain("d4", {c});

  // Exhaustive ground truth: some single-obstacle layout defeats it.
  std::size_t failing_layouts = 0;
  for (std::int64_t y = 0; y < 4; ++y) {
    for (std::int64_t x = 0; x < 4; ++x) {
      const gw::cell obstacle{x, y};
      if (obstacle == cfg4.start || obstacle == cfg4.target) continue;
      gw::config layout = cfg4;
      layout.obstacles.insert(obstacle);
      if (gw::shortest_path_genome(layout)[layout.cell_index(layout.start)] == gw::stay) {
        continue;  // unsolvable layouts are outside the mutation space
      }
      adaptation_domain d_layout = d;
      d_layout.clauses[0].env = gw::make_environment("grid4", layout);
      if (!adapts_to(f.w, blind, d_layout).verdict) ++failing_layouts;
    }
  }
  CHECK(failing_layouts > 0);

  const scenario_suite suite = canonical_suite(f, d, blind);
  antagonist_config ant;
  ant.strategy = antagonist_config::strategy_t::random_sample;
  ant.objective = antagonist_config::hardness_t::flip_goal_to_fail;
  ant.candidates_per_round = 40;
  rng r(42);
  const std::vector<scenario> found = antagonist_step(f.w, blind, suite, ant, r);
  CHECK(!found.empty());
  for (const scenario& s : found) {
    CHECK_FALSE(s.g);
    CHECK(s.origin == scenario_origin::generated);
  }
}

TEST_CASE("antagonist_step: a fully routing 2x2 policy cannot be made to fail") {
  const fixture f;
  // The shortest-path table routes every cell, so every mutated start
  // (the only mutation this family allows) still reaches.
  const system_under_test router =
      gw::make_policy_system("router", gw::shortest_path_genome(f.g2), f.g2);
  const adaptation_domain d = f.reach_domain2();

  std::size_t layouts = 0;
  for (std::int64_t y = 0; y < 2; ++y) {
    for (std::int64_t x = 0; x < 2; ++x) {
      const gw::cell start{x, y};
      if (start == f.g2.target) continue;
      gw::config layout = f.g2;
      layout.start = start;
      adaptation_domain d_layout = d;
      d_layout.clauses[0].env = gw::make_environment("grid2", layout);
      REQUIRE(adapts_to(f.w, router, d_layout).verdict);
      ++layouts;
    }
  }
  CHECK(layouts == 3);  // exhaustive over every legal start

  const scenario_suite suite = canonical_suite(f, d, router);
  antagonist_config ant;
  ant.objective = antagonist_config::hardness_t::flip_goal_to_fail;
  ant.candidates_per_round = 32;
  rng r(11);
  CHECK(antagonist_step(f.w, router, suite, ant, r).empty());

  ant.objective = antagonist_config::hardness_t::minimize_system_fitness;
  rng r2(12);
  for (const scenario& s : antagonist_step(f.w, router, suite, ant, r2)) {
    CHECK(s.g);  // generated scenarios exist, but none fail
  }
}

TEST_CASE("antagonist_step: non-parameterizable environments are unsupported") {
  const fixture f;
  const adaptation_domain d = f.xor_domain();
  const system_under_test s =
      scedeco::boolfit::make_table_system("t", f.x2.target_outputs, f.x2);
  const scenario_suite suite = canonical_suite(f, d, s);
  antagonist_config ant;
  rng r(3);
  CHECK_THROWS_AS(antagonist_step(f.w, s, suite, ant, r), unsupported_error);
}

TEST_CASE("antagonist_step: minimized fitness stays at or below the clause median") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  const system_under_test stay = gw::make_policy_system("s", gw::stay_put_genome(f.g2), f.g2);
  scenario_suite suite = canonical_suite(f, d, stay);
  antagonist_config ant;
  ant.candidates_per_round = 16;
  rng r(8);
  const std::vector<scenario> found = antagonist_step(f.w, stay, suite, ant, r);
  std::vector<fitness_value> fs;
  for (const scenario& sc_live : suite.live()) fs.push_back(sc_live.f);
  // Single scenario in the canonical suite: the median is its fitness.
  for (const scenario& s : found) CHECK(fitness_leq(s.f, fs.front()));
}

namespace {

json smoke_config(std::uint64_t seed) {
  return json{
      {"domain",
       json{{"id", "d2"},
            {"family", "gridworld"},
            {"env-id", "grid2"},
            {"params", testsupport::grid2().to_params()},
            {"clauses",
             json::array(
                 {json{{"goal", json{{"atoms", json::array()}}},
                       {"measure", "neg-remaining-manhattan"}},
                  json{{"goal",
                        json{{"atoms", json::array({json{{"name", "reach-target"},
                                                         {"params", json::object()}}})}}},
                       {"measure", "neg-steps"}}})}}},
      {"initial-genome", json{{"preset", "stay-put"}}},
      {"optimizer",
       json{{"strategy", "hill-climb"},
            {"mutation-budget", 2},
            {"proposals-per-generation", 16},
            {"rng-seed", 0},
            {"stall-flag-generations", 4}}},
      {"antagonist",
       json{{"search-strategy", "mutation-search"},
            {"hardness-objective", "minimize-system-fitness"},
            {"candidates-per-round", 2},
            {"rng-seed", 0}}},
      {"schedule",
       json{{"off-site-border", 0},
            {"phases",
             json::array(
                 {json{{"name", "off-site"}, {"budget", 2}, {"generations", 4}},
                  json{{"name", "on-site"},
                       {"budget", 1},
                       {"generations", 3},
                       {"harden",
                        json::array({json{{"clauses", json::array({1})},
                                          {"atoms",
                                           json::array({json{{"name", "within-steps"},
                                                             {"params", json{{"k", 6}}}}})}}})}}})}}},
      {"root-seed", seed}};
}

}  // namespace

TEST_CASE("coevolve: zero generations keep the initial system and suites") {
  json cfg = smoke_config(5);
  cfg["schedule"]["phases"][0]["generations"] = 0;
  cfg["schedule"]["phases"][1]["generations"] = 0;
  const run_setup rs = load_run_config(cfg);
  recording_sink sink(rs.snapshot, rs.root_seed, nullptr);
  const coevolution_run run = run_configured(rs, sink);
  CHECK(run.systems.size() == 1);
  CHECK(run.suites.size() == 2);  // one initial suite per phase
  CHECK(verify_log(sink.log()).ok);
  CHECK_FALSE(verify_log(sink.log()).truncated);
}

TEST_CASE("coevolve: increasing budgets are rejected up front") {
  json cfg = smoke_config(5);
  cfg["schedule"]["phases"][0]["budget"] = 1;
  cfg["schedule"]["phases"][1]["budget"] = 4;
  CHECK_THROWS_AS(load_run_config(cfg), config_error);
}

TEST_CASE("coevolve: smoke run is deterministic and self-validating") {
  const run_setup rs1 = load_run_config(smoke_config(31));
  recording_sink sink1(rs1.snapshot, rs1.root_seed, nullptr);
  const coevolution_run run1 = run_configured(rs1, sink1);

  const run_setup rs2 = load_run_config(smoke_config(31));
  recording_sink sink2(rs2.snapshot, rs2.root_seed, nullptr);
  const coevolution_run run2 = run_configured(rs2, sink2);

  CHECK(run1.to_json() == run2.to_json());
  CHECK(serialize_log(sink1.log()) == serialize_log(sink2.log()));

  // A third run with another seed differs (the arms race actually moves).
  const run_setup rs3 = load_run_config(smoke_config(99));
  recording_sink sink3(rs3.snapshot, rs3.root_seed, nullptr);
  const coevolution_run run3 = run_configured(rs3, sink3);
  CHECK(run1.to_json() != run3.to_json());

  // Per-phase chains hold as sequences (coevolve already asserted this;
  // re-check through the public validators).
  for (const phase_marker& marker : run1.phases) {
    std::vector<system_under_test> chain;
    std::vector<scenario_suite> suites;
    for (const std::size_t idx : marker.system_versions) chain.push_back(run1.systems[idx]);
    for (const std::size_t idx : marker.suite_versions) suites.push_back(run1.suites[idx]);
    adaptation_space space;
    space.id = "check";
    space.domains.push_back(rs1.schedule.phases[marker.phase_index].space.domains[0]);
    CHECK(is_adaptation_sequence(*rs1.w, chain, space, seed_policy{rs1.root_seed}).ok);
    CHECK(is_scenario_sequence(*rs1.w, suites, chain,
                               rs1.schedule.phases[marker.phase_index].space.domains[0]).ok);
    CHECK(hardness_frontier_monotone(suites).ok);
  }
}

TEST_CASE("coevolve: replay reconstructs the smoke run exactly") {
  const run_setup rs = load_run_config(smoke_config(31));
  recording_sink sink(rs.snapshot, rs.root_seed, nullptr);
  const coevolution_run original = run_configured(rs, sink);

  const coevolution_run reconstructed = replay(sink.log());
  CHECK(reconstructed.to_json() == original.to_json());
}

TEST_CASE("self_adapt: n = 1 returns just the seed system") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  genome full{1, 16, 1, 5};
  const genome payload = gw::stay_put_genome(f.g2);
  full.insert(full.end(), payload.begin(), payload.end());
  const system_factory factory = [&](const std::string& id, const genome& g) {
    genome body(g.begin() + self_adapt_segment::length, g.end());
    system_under_test s = gw::make_policy_system(id, body, f.g2);
    s.genes = g;  // behavior comes from the payload, identity from the whole
    return s;
  };
  const system_under_test s0 = factory("s0", full);
  const scenario_suite suite = canonical_suite(f, d, s0);
  const auto seq = self_adapt(f.w, s0, 1, suite, gw::policy_genome_spec(f.g2), factory);
  CHECK(seq.size() == 1);
  CHECK(seq[0].id == "s0");
}

TEST_CASE("self_adapt: identity segment yields the constant sequence") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  genome full{0, 8, 1, 5};
  const genome payload = gw::stay_put_genome(f.g2);
  full.insert(full.end(), payload.begin(), payload.end());
  const system_factory factory = [&](const std::string& id, const genome& g) {
    genome body(g.begin() + self_adapt_segment::length, g.end());
    system_under_test s = gw::make_policy_system(id, body, f.g2);
    s.genes = g;
    return s;
  };
  const system_under_test s0 = factory("s0", full);
  const scenario_suite suite = canonical_suite(f, d, s0);
  const auto seq = self_adapt(f.w, s0, 10, suite, gw::policy_genome_spec(f.g2), factory);
  CHECK(seq.size() == 10);
  for (const auto& s : seq) CHECK(s.genes == s0.genes);

  adaptation_space space;
  space.id = "sa";
  space.domains.push_back(d);
  CHECK(is_adaptation_sequence(f.w, seq, space).ok);
}

TEST_CASE("self_adapt: hill-climb segment reaches the enumerated 2x2 optimum") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  genome full{1, 32, 1, 42};  // hill-climb, 32 proposals, budget 1, seed 42
  const genome payload = gw::stay_put_genome(f.g2);
  full.insert(full.end(), payload.begin(), payload.end());
  const system_factory factory = [&](const std::string& id, const genome& g) {
    genome body(g.begin() + self_adapt_segment::length, g.end());
    system_under_test s = gw::make_policy_system(id, body, f.g2);
    s.genes = g;
    return s;
  };
  const system_under_test s0 = factory("s0", full);
  const scenario_suite suite = canonical_suite(f, d, s0);
  const auto seq = self_adapt(f.w, s0, 20, suite, gw::policy_genome_spec(f.g2), factory);
  CHECK(seq.size() == 20);

  // Enumerated optimum over all 625 payload tables.
  fitness_value best = sc(-100);
  oracle::for_each_genome(gw::policy_genome_spec(f.g2), [&](const genome& g) {
    const auto rep = adapts_to(f.w, gw::make_policy_system("e", g, f.g2), d);
    if (compare(rep.clauses[0].fitness, best) == ordering::greater) {
      best = rep.clauses[0].fitness;
    }
    return true;
  });
  CHECK(best == oracle::oracle_best_fitness(d.clauses[0]));

  const genome final_payload(seq.back().genes.begin() + self_adapt_segment::length,
                             seq.back().genes.end());
  const auto final_report =
      adapts_to(f.w, gw::make_policy_system("final", final_payload, f.g2), d);
  CHECK(final_report.clauses[0].fitness == best);

  adaptation_space space;
  space.id = "sa";
  space.domains.push_back(d);
  CHECK(is_adaptation_sequence(f.w, seq, space).ok);
}

TEST_CASE("self_adapt: a missing optimizer segment is a configuration error") {
  const fixture f;
  const adaptation_domain d = distance_domain2(f);
  const system_under_test bare = gw::make_policy_system("bare", gw::stay_put_genome(f.g2), f.g2);
  const scenario_suite suite = canonical_suite(f, d, bare);
  system_under_test tiny = bare;
  tiny.genes = {1, 2};
  CHECK_THROWS_AS(
      self_adapt(f.w, tiny, 3, suite, gw::policy_genome_spec(f.g2), grid_factory(f.g2)),
      config_error);
}

TEST_CASE("is_adaptation_sequence: constants and singletons hold") {
  const fixture f;
  const adaptation_space space = f.reach_space3();
  CHECK(is_adaptation_sequence(f.w, {f.greedy3()}, space).ok);
  CHECK(is_adaptation_sequence(f.w, {f.stay_put3(), f.stay_put3(), f.stay_put3()}, space).ok);
}

TEST_CASE("is_adaptation_sequence: regression is caught at its index") {
  const fixture f;
  const adaptation_space space = f.reach_space3();
  const sequence_check check =
      is_adaptation_sequence(f.w, {f.greedy3(), f.stay_put3()}, space);
  CHECK_FALSE(check.ok);
  CHECK(check.index == 1);
}

TEST_CASE("verify_space_sequence: repetition and hardening images hold") {
  const fixture f;
  adaptation_space s1;
  s1.id = "s1";
  s1.domains.push_back(f.reach_domain3());
  CHECK(verify_space_sequence({s1, s1, s1}).ok);

  adaptation_space s2;
  s2.id = "s2";
  s2.domains.push_back(
      harden_domain(f.reach_domain3(), goal({goal_atom{"within-steps", json{{"k", 8}}}})));
  CHECK(verify_space_sequence({s1, s2}).ok);
  // The reverse direction drops a hardening atom: not certified.
  const sequence_check reversed = verify_space_sequence({s2, s1});
  CHECK_FALSE(reversed.ok);
  CHECK(reversed.index == 1);
}

TEST_CASE("verify_space_sequence: witness must match environment and measure") {
  const fixture f;
  adaptation_space s1;
  s1.id = "s1";
  s1.domains.push_back(f.reach_domain3());
  adaptation_space s2;
  s2.id = "s2";
  adaptation_domain other = f.reach_domain3();
  other.clauses[0].measure = f.w.measure("neg-remaining-manhattan");
  s2.domains.push_back(other);
  CHECK_FALSE(verify_space_sequence({s1, s2}).ok);
}

TEST_CASE("cooldown_schedule: off-site border must name a phase") {
  const fixture f;
  cooldown_schedule schedule;
  schedule_phase p;
  p.name = "only";
  p.space = f.reach_space3();
  p.mutation_budget = 1;
  p.generations = 1;
  schedule.phases.push_back(p);
  schedule.off_site_border = 3;
  CHECK_THROWS_AS(schedule.validate(), config_error);
  schedule.off_site_border = 0;
  CHECK_NOTHROW(schedule.validate());
}
