#include "scedeco/adaptation.hpp"

#include "scedeco/errors.hpp"

namespace scedeco {

json clause::to_json() const {
  return json{{"env", env.id},
              {"goal", objective.to_json()},
              {"measure", measure.name},
              {"params", env.params}};
}

clause clause::from_json(const world& w, const json& j) {
  clause c;
  c.env = w.instantiate(j.at("env").get<std::string>(), j.at("params"));
  c.objective = goal::from_json(j.at("goal"));
  c.measure = w.measure(j.at("measure").get<std::string>());
  return c;
}

json adaptation_domain::to_json() const {
  json clauses_j = json::array();
  for (const auto& c : clauses) clauses_j.push_back(c.to_json());
  json j{{"clauses", clauses_j}, {"id", id}, {"root", root_id}};
  if (derived_from) j["derived-from"] = *derived_from;
  return j;
}

adaptation_domain adaptation_domain::from_json(const world& w, const json& j) {
  adaptation_domain d;
  d.id = j.at("id").get<std::string>();
  d.root_id = j.at("root").get<std::string>();
  if (j.contains("derived-from")) d.derived_from = j.at("derived-from").get<std::string>();
  for (const auto& c : j.at("clauses")) d.clauses.push_back(clause::from_json(w, c));
  return d;
}

adaptation_domain make_domain(std::string id, std::vector<clause> clauses) {
  adaptation_domain d;
  d.id = id;
  d.root_id = std::move(id);
  d.clauses = std::move(clauses);
  return d;
}

json adaptation_space::to_json() const {
  json domains_j = json::array();
  for (const auto& d : domains) domains_j.push_back(d.to_json());
  return json{{"domains", domains_j}, {"id", id}};
}

adaptation_space adaptation_space::from_json(const world& w, const json& j) {
  adaptation_space s;
  s.id = j.at("id").get<std::string>();
  for (const auto& d : j.at("domains")) {
    s.domains.push_back(adaptation_domain::from_json(w, d));
  }
  return s;
}

json clause_result::to_json() const {
  return json{{"fitness", fitness.to_json()},
              {"goal-satisfied", goal_satisfied},
              {"index", index},
              {"trace-digest", trace_digest}};
}

json adaptation_report::to_json() const {
  json clauses_j = json::array();
  for (const auto& c : clauses) clauses_j.push_back(c.to_json());
  return json{{"clauses", clauses_j}, {"domain", domain_id}, {"verdict", verdict}};
}

std::string to_string(ternary t) {
  switch (t) {
    case ternary::yes: return "yes";
    case ternary::no: return "no";
    case ternary::incomparable: return "incomparable";
  }
  return "?";
}

trace evaluate(const system_under_test& s, const environment& e, std::uint64_t seed) {
  if (e.horizon < 1) throw config_error("environment horizon must be >= 1");
  return e.episode(s, seed);
}

bool satisfies(const world& w, const trace& t, const goal& g) {
  for (const auto& atom : g.atoms()) {
    if (!w.eval_atom(atom, t)) return false;
  }
  return true;
}

fitness_value fitness_of(const trace& t, const fitness_measure& m) {
  return m.eval(t);
}

adaptation_report adapts_to(const world& w, const system_under_test& s,
                            const adaptation_domain& d, const seed_policy& seeds) {
  adaptation_report report;
  report.domain_id = d.id;
  report.verdict = true;
  for (std::size_t i = 0; i < d.clauses.size(); ++i) {
    const clause& c = d.clauses[i];
    trace t;
    try {
      t = evaluate(s, c.env, seeds.seed_for(d, i));
    } catch (const domain_mismatch_error& e) {
      throw domain_mismatch_error("clause " + std::to_string(i) + " of domain " +
                                  d.id + ": " + e.what());
    }
    clause_result r;
    r.index = i;
    r.goal_satisfied = satisfies(w, t, c.objective);
    r.fitness = fitness_of(t, c.measure);
    r.trace_digest = t.digest();
    report.verdict = report.verdict && r.goal_satisfied;
    report.clauses.push_back(std::move(r));
  }
  return report;
}

bool at_least_as_adaptive(const world& w, const system_under_test& s,
                          const system_under_test& s2, const adaptation_space& space,
                          const seed_policy& seeds) {
  for (const auto& d : space.domains) {
    if (adapts_to(w, s, d, seeds).verdict && !adapts_to(w, s2, d, seeds).verdict) {
      return false;
    }
  }
  return true;
}

ternary at_least_as_optimal(const world& w, const system_under_test& s,
                            const system_under_test& s2, const adaptation_domain& d,
                            const seed_policy& seeds) {
  const adaptation_report a = adapts_to(w, s, d, seeds);
  const adaptation_report b = adapts_to(w, s2, d, seeds);
  bool saw_incomparable = false;
  for (std::size_t i = 0; i < d.clauses.size(); ++i) {
    switch (compare(a.clauses[i].fitness, b.clauses[i].fitness)) {
      case ordering::greater: return ternary::no;
      case ordering::incomparable: saw_incomparable = true; break;
      default: break;
    }
  }
  return saw_incomparable ? ternary::incomparable : ternary::yes;
}

ternary at_least_as_adaptive_opt(const world& w, const system_under_test& s,
                                 const system_under_test& s2,
                                 const adaptation_space& space,
                                 const seed_policy& seeds) {
  if (!at_least_as_adaptive(w, s, s2, space, seeds)) return ternary::no;
  bool saw_incomparable = false;
  for (const auto& d : space.domains) {
    switch (at_least_as_optimal(w, s, s2, d, seeds)) {
      case ternary::no: return ternary::no;
      case ternary::incomparable: saw_incomparable = true; break;
      case ternary::yes: break;
    }
  }
  return saw_incomparable ? ternary::incomparable : ternary::yes;
}

}  // namespace scedeco
