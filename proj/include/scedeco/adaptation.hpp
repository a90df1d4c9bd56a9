#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scedeco/environment.hpp"
#include "scedeco/fitness.hpp"
#include "scedeco/goal.hpp"
#include "scedeco/measure.hpp"
#include "scedeco/rng.hpp"
#include "scedeco/system.hpp"
#include "scedeco/world.hpp"

namespace scedeco {

// One (environment, goal, fitness) obligation of an adaptation domain.
struct clause {
  environment env;
  goal objective;
  fitness_measure measure;

  json to_json() const;
  static clause from_json(const world& w, const json& j);
};

// A finite set of clauses a system must satisfy. root_id names the start
// of the derived-from chain; hardened/softened descendants keep it, which
// is what keeps per-clause evaluation seeds stable across derivation.
struct adaptation_domain {
  std::string id;
  std::string root_id;
  std::optional<std::string> derived_from;
  std::vector<clause> clauses;

  json to_json() const;
  static adaptation_domain from_json(const world& w, const json& j);
};

adaptation_domain make_domain(std::string id, std::vector<clause> clauses);

// A finite set of adaptation domains.
struct adaptation_space {
  std::string id;
  std::vector<adaptation_domain> domains;

  json to_json() const;
  static adaptation_space from_json(const world& w, const json& j);
};

// Derives the per-clause episode seed from the run seed. Clauses of the
// same domain get independent seeds; derived domains share the root's.
struct seed_policy {
  std::uint64_t run_seed = 0;

  std::uint64_t seed_for(const adaptation_domain& d, std::size_t clause_index) const {
    return mix64(mix64(run_seed, d.root_id), clause_index);
  }
};

// Evidence for one clause of an adapts_to check. Fitness is recorded
// whether or not the goal held: fitness is a soft constraint.
struct clause_result {
  std::size_t index = 0;
  bool goal_satisfied = false;
  fitness_value fitness = fitness_value::scalar(0);
  std::string trace_digest;

  json to_json() const;
};

// The evidence object for "system adapts to domain": verdict is the
// conjunction of the per-clause goal flags.
struct adaptation_report {
  std::string domain_id;
  std::vector<clause_result> clauses;
  bool verdict = false;

  json to_json() const;
};

enum class ternary { yes, no, incomparable };

std::string to_string(ternary t);

// Closed-loop episode execution: the environment drives situations, the
// system supplies actions. Deterministic in (genome, seed).
trace evaluate(const system_under_test& s, const environment& e, std::uint64_t seed);

// True iff every atom of the goal holds on the trace.
bool satisfies(const world& w, const trace& t, const goal& g);

fitness_value fitness_of(const trace& t, const fitness_measure& m);

// Checks every clause of the domain under the seed policy. Evaluation
// failures are annotated with the clause index.
adaptation_report adapts_to(const world& w, const system_under_test& s,
                            const adaptation_domain& d, const seed_policy& seeds = {});

// s2 at least as adaptive as s over the given finite space: every domain
// s adapts to, s2 adapts to as well.
bool at_least_as_adaptive(const world& w, const system_under_test& s,
                          const system_under_test& s2, const adaptation_space& space,
                          const seed_policy& seeds = {});

// s2 at least as optimal as s on every clause of the domain. "no" wins
// over "incomparable"; "incomparable" wins over "yes".
ternary at_least_as_optimal(const world& w, const system_under_test& s,
                            const system_under_test& s2, const adaptation_domain& d,
                            const seed_policy& seeds = {});

// Conjunction of the adaptivity and optimality checks over every domain
// of the space.
ternary at_least_as_adaptive_opt(const world& w, const system_under_test& s,
                                 const system_under_test& s2,
                                 const adaptation_space& space,
                                 const seed_policy& seeds = {});

}  // namespace scedeco
