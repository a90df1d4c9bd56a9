#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scedeco/adaptation.hpp"

namespace scedeco {

enum class scenario_origin {
  observed,
  mastered_update,
  constraint_derived,
  predicted,
  generated,
};

std::string to_string(scenario_origin o);
scenario_origin scenario_origin_from_string(const std::string& s);

// Points a scenario at the clause it was recorded against.
struct clause_ref {
  std::string domain_id;
  std::size_t clause_index = 0;

  friend bool operator==(const clause_ref&, const clause_ref&) = default;
};

// One unit of testing knowledge: the episode context, the (digested)
// observed behavior, the goal verdict, and the fitness it earned.
struct scenario {
  std::string id;
  episode_context x;
  std::string y_digest;
  std::optional<trace> y_trace;
  bool g = false;
  fitness_value f = fitness_value::scalar(0);
  clause_ref ref;
  scenario_origin origin = scenario_origin::observed;

  json to_json() const;
  static scenario from_json(const json& j);
};

// Append-ordered scenario collection over one adaptation domain. Entries
// are never removed; a re-recorded id supersedes earlier entries of that
// id, and the live view is the latest entry per id. Appends happen only
// through append_scenario / update_mastered below, which is what keeps
// suites hardening-monotone.
class scenario_suite {
 public:
  scenario_suite() = default;
  scenario_suite(adaptation_domain domain, std::string suite_id);

  const adaptation_domain& domain() const { return domain_; }
  const std::string& id() const { return id_; }

  // Full append history, including superseded entries.
  const std::vector<scenario>& entries() const { return entries_; }

  // Latest entry per scenario id, in order of first appearance.
  std::vector<scenario> live() const;
  const scenario* find_live(const std::string& scenario_id) const;
  std::size_t live_count() const;

  friend scenario_suite append_scenario(const scenario_suite& suite, scenario s);
  friend scenario_suite update_mastered(const scenario_suite& suite,
                                        const std::string& scenario_id, bool new_g,
                                        const fitness_value& new_f,
                                        const std::optional<trace>& new_y);

  json to_json() const;
  static scenario_suite from_json(const json& j, adaptation_domain domain);

 private:
  adaptation_domain domain_;
  std::string id_;
  std::vector<scenario> entries_;
  std::uint64_t next_ordinal_ = 0;
};

// Runs the clause's episode for the given seed and captures the outcome
// as an observed scenario (id assigned when appended to a suite).
scenario record_scenario(const world& w, const system_under_test& s,
                         const adaptation_domain& d, std::size_t clause_index,
                         std::uint64_t seed, bool keep_trace = false);

// Appends a scenario under a fresh id (or its own unused id).
scenario_suite append_scenario(const scenario_suite& suite, scenario s);

// Supersedes an existing scenario with new (g, f) and optionally a new
// behavior record. Updates may only harden; the superseded entry stays in
// the history.
scenario_suite update_mastered(const scenario_suite& suite,
                               const std::string& scenario_id, bool new_g,
                               const fitness_value& new_f,
                               const std::optional<trace>& new_y = std::nullopt);

// The hardening order: c2 at least as hard as c1 iff g1 implies g2 and
// f1 ⪯ f2. Incomparable fitness counts as not-≤.
bool scenario_leq(const scenario& c1, const scenario& c2);

struct scenario_leq_diag {
  bool leq = false;
  bool incomparable_fitness = false;
};
scenario_leq_diag scenario_leq_with_diag(const scenario& c1, const scenario& c2);

// The suite order: every live scenario of c has a dominating live
// scenario in c2. Returns the witness map on success, the first
// undominated scenario id on failure.
struct suite_leq_result {
  bool leq = false;
  std::map<std::string, std::string> witness;
  std::optional<std::string> first_undominated;
};
suite_leq_result suite_leq(const scenario_suite& c, const scenario_suite& c2);

// Conjoins zeta onto the goals of the selected clauses (an empty selector
// selects every clause). The result records its derivation and keeps the
// root id, so per-clause evaluation seeds are preserved.
adaptation_domain harden_domain(const adaptation_domain& d, const goal& zeta,
                                const std::vector<std::size_t>& selector = {});

// Replaces the selected clauses' measures with the pointwise max of the
// old measure and psi. Requires a totally ordered fitness kind.
adaptation_domain soften_domain(const adaptation_domain& d, const fitness_measure& psi,
                                const std::vector<std::size_t>& selector = {});

// Prediction function standing in for a system whose behavior we can
// guess but not run.
struct predictor {
  std::string name;
  std::function<trace(const episode_context&)> predict;
};

// Perfect reference predictor: wraps actual episode execution of s.
predictor evaluating_predictor(const world& w, system_under_test s);

// Builds a predicted scenario by replaying p's predicted behavior record
// against the clause's goal and measure.
scenario predict_scenario(const world& w, const predictor& p, const episode_context& x,
                          const adaptation_domain& d, std::size_t clause_index);

struct sequence_check {
  bool ok = true;
  std::string violation;
  std::optional<std::size_t> index;
};

// A suites/systems pairing is a scenario sequence iff every suite's
// stored verdicts are consistent with re-evaluating its system and
// consecutive suites are suite_leq-ordered.
sequence_check is_scenario_sequence(const world& w,
                                    const std::vector<scenario_suite>& suites,
                                    const std::vector<system_under_test>& systems,
                                    const adaptation_domain& d);

}  // namespace scedeco
