#include "scedeco/scenario.hpp"

#include <algorithm>

#include "scedeco/errors.hpp"

namespace scedeco {

std::string to_string(scenario_origin o) {
  switch (o) {
    case scenario_origin::observed: return "observed";
    case scenario_origin::mastered_update: return "mastered-update";
    case scenario_origin::constraint_derived: return "constraint-derived";
    case scenario_origin::predicted: return "predicted";
    case scenario_origin::generated: return "generated";
  }
  return "?";
}

scenario_origin scenario_origin_from_string(const std::string& s) {
  if (s == "observed") return scenario_origin::observed;
  if (s == "mastered-update") return scenario_origin::mastered_update;
  if (s == "constraint-derived") return scenario_origin::constraint_derived;
  if (s == "predicted") return scenario_origin::predicted;
  if (s == "generated") return scenario_origin::generated;
  throw config_error("unknown scenario origin: " + s);
}

json scenario::to_json() const {
  return json{{"clause", json{{"domain", ref.domain_id}, {"index", ref.clause_index}}},
              {"f", f.to_json()},
              {"g", g},
              {"id", id},
              {"origin", to_string(origin)},
              {"x", x.to_json()},
              {"y", json{{"digest", y_digest}}}};
}

scenario scenario::from_json(const json& j) {
  scenario s;
  s.id = j.at("id").get<std::string>();
  s.x = episode_context::from_json(j.at("x"));
  s.y_digest = j.at("y").at("digest").get<std::string>();
  s.g = j.at("g").get<bool>();
  s.f = fitness_value::from_json(j.at("f"));
  s.ref.domain_id = j.at("clause").at("domain").get<std::string>();
  s.ref.clause_index = j.at("clause").at("index").get<std::size_t>();
  s.origin = scenario_origin_from_string(j.at("origin").get<std::string>());
  return s;
}

scenario_suite::scenario_suite(adaptation_domain domain, std::string suite_id)
    : domain_(std::move(domain)), id_(std::move(suite_id)) {}

std::vector<scenario> scenario_suite::live() const {
  std::vector<scenario> out;
  std::map<std::string, std::size_t> latest;
  for (std::size_t i = 0; i < entries_.size(); ++i) latest[entries_[i].id] = i;
  std::vector<bool> taken(entries_.size(), false);
  for (const auto& e : entries_) {
    const std::size_t idx = latest[e.id];
    if (!taken[idx]) {
      taken[idx] = true;
      out.push_back(entries_[idx]);
    }
  }
  return out;
}

const scenario* scenario_suite::find_live(const std::string& scenario_id) const {
  const scenario* found = nullptr;
  for (const auto& e : entries_) {
    if (e.id == scenario_id) found = &e;
  }
  return found;
}

std::size_t scenario_suite::live_count() const {
  std::map<std::string, bool> ids;
  for (const auto& e : entries_) ids[e.id] = true;
  return ids.size();
}

json scenario_suite::to_json() const {
  json scenarios_j = json::array();
  for (const auto& s : live()) scenarios_j.push_back(s.to_json());
  return json{{"domain", domain_.id}, {"scenarios", scenarios_j}, {"suite", id_}};
}

scenario_suite scenario_suite::from_json(const json& j, adaptation_domain domain) {
  if (j.at("domain").get<std::string>() != domain.id) {
    throw config_error("suite document names domain " +
                       j.at("domain").get<std::string>() + ", expected " + domain.id);
  }
  scenario_suite suite(std::move(domain), j.at("suite").get<std::string>());
  for (const auto& s : j.at("scenarios")) {
    suite.entries_.push_back(scenario::from_json(s));
    ++suite.next_ordinal_;
  }
  return suite;
}

scenario record_scenario(const world& w, const system_under_test& s,
                         const adaptation_domain& d, std::size_t clause_index,
                         std::uint64_t seed, bool keep_trace) {
  if (clause_index >= d.clauses.size()) {
    throw config_error("clause index out of range");
  }
  const clause& c = d.clauses[clause_index];
  const trace t = evaluate(s, c.env, seed);
  scenario sc;
  sc.x = episode_context{c.env.id, seed, c.env.params};
  sc.y_digest = t.digest();
  if (keep_trace) sc.y_trace = t;
  sc.g = satisfies(w, t, c.objective);
  sc.f = fitness_of(t, c.measure);
  sc.ref = clause_ref{d.id, clause_index};
  sc.origin = scenario_origin::observed;
  return sc;
}

scenario_suite append_scenario(const scenario_suite& suite, scenario s) {
  scenario_suite out = suite;
  if (s.id.empty()) {
    s.id = "sc-" + std::to_string(out.next_ordinal_);
  } else if (out.find_live(s.id) != nullptr) {
    throw config_error("scenario id already present: " + s.id);
  }
  if (s.ref.domain_id != out.domain_.id ||
      s.ref.clause_index >= out.domain_.clauses.size()) {
    throw config_error("scenario clause-ref does not resolve in suite domain");
  }
  ++out.next_ordinal_;
  out.entries_.push_back(std::move(s));
  return out;
}

scenario_suite update_mastered(const scenario_suite& suite,
                               const std::string& scenario_id, bool new_g,
                               const fitness_value& new_f,
                               const std::optional<trace>& new_y) {
  const scenario* old = suite.find_live(scenario_id);
  if (old == nullptr) throw config_error("unknown scenario id: " + scenario_id);

  scenario updated = *old;
  updated.g = new_g;
  updated.f = new_f;
  if (new_y) {
    updated.y_digest = new_y->digest();
    updated.y_trace = old->y_trace ? new_y : std::nullopt;
  }
  updated.origin = scenario_origin::mastered_update;

  if (!scenario_leq(*old, updated)) {
    throw hardening_violation_error("update would soften scenario " + scenario_id);
  }
  scenario_suite out = suite;
  out.entries_.push_back(std::move(updated));
  return out;
}

bool scenario_leq(const scenario& c1, const scenario& c2) {
  return scenario_leq_with_diag(c1, c2).leq;
}

scenario_leq_diag scenario_leq_with_diag(const scenario& c1, const scenario& c2) {
  scenario_leq_diag diag;
  if (c1.g && !c2.g) return diag;
  const ordering o = compare(c1.f, c2.f);
  diag.incomparable_fitness = o == ordering::incomparable;
  diag.leq = o == ordering::less || o == ordering::equal;
  return diag;
}

suite_leq_result suite_leq(const scenario_suite& c, const scenario_suite& c2) {
  if (c.domain().id != c2.domain().id) {
    throw config_error("suite order: domains differ (" + c.domain().id + " vs " +
                       c2.domain().id + ")");
  }
  suite_leq_result result;
  result.leq = true;
  const std::vector<scenario> right = c2.live();
  for (const scenario& sc : c.live()) {
    bool dominated = false;
    for (const scenario& candidate : right) {
      if (scenario_leq(sc, candidate)) {
        result.witness[sc.id] = candidate.id;
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      result.leq = false;
      result.first_undominated = sc.id;
      result.witness.clear();
      return result;
    }
  }
  return result;
}

namespace {

std::vector<std::size_t> resolve_selector(const adaptation_domain& d,
                                          const std::vector<std::size_t>& selector) {
  std::vector<std::size_t> out = selector;
  if (out.empty()) {
    out.resize(d.clauses.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  }
  for (const std::size_t i : out) {
    if (i >= d.clauses.size()) throw config_error("clause selector out of range");
  }
  return out;
}

std::string derived_id(const adaptation_domain& d, const std::string& tag,
                       const json& payload) {
  return d.id + "#" + tag + digest_of_json(payload).substr(0, 8);
}

}  // namespace

adaptation_domain harden_domain(const adaptation_domain& d, const goal& zeta,
                                const std::vector<std::size_t>& selector) {
  const std::vector<std::size_t> clause_indices = resolve_selector(d, selector);
  adaptation_domain out = d;
  out.derived_from = d.id;
  out.id = derived_id(d, "h",
                      json{{"selector", clause_indices}, {"zeta", zeta.to_json()}});
  for (const std::size_t i : clause_indices) {
    out.clauses[i].objective = out.clauses[i].objective.conjoin(zeta);
  }
  return out;
}

adaptation_domain soften_domain(const adaptation_domain& d, const fitness_measure& psi,
                                const std::vector<std::size_t>& selector) {
  const std::vector<std::size_t> clause_indices = resolve_selector(d, selector);
  adaptation_domain out = d;
  out.derived_from = d.id;
  out.id = derived_id(d, "s",
                      json{{"psi", psi.name}, {"selector", clause_indices}});
  for (const std::size_t i : clause_indices) {
    if (out.clauses[i].measure.kind != psi.kind) {
      throw max_undefined_error("soften: fitness kind mismatch on clause " +
                                std::to_string(i));
    }
    out.clauses[i].measure = max_measure(out.clauses[i].measure, psi);
  }
  return out;
}

predictor evaluating_predictor(const world& w, system_under_test s) {
  predictor p;
  p.name = "evaluating(" + s.id + ")";
  p.predict = [&w, s = std::move(s)](const episode_context& x) {
    return evaluate(s, w.instantiate(x), x.seed);
  };
  return p;
}

scenario predict_scenario(const world& w, const predictor& p, const episode_context& x,
                          const adaptation_domain& d, std::size_t clause_index) {
  if (clause_index >= d.clauses.size()) {
    throw config_error("clause index out of range");
  }
  const clause& c = d.clauses[clause_index];
  const trace predicted = p.predict(x);
  const environment env = w.instantiate(x);
  if (static_cast<std::int64_t>(predicted.steps.size()) > env.horizon) {
    throw shape_error("predicted behavior exceeds environment horizon");
  }
  scenario sc;
  sc.x = x;
  sc.y_digest = predicted.digest();
  sc.g = satisfies(w, predicted, c.objective);
  sc.f = fitness_of(predicted, c.measure);
  sc.ref = clause_ref{d.id, clause_index};
  sc.origin = scenario_origin::predicted;
  return sc;
}

sequence_check is_scenario_sequence(const world& w,
                                    const std::vector<scenario_suite>& suites,
                                    const std::vector<system_under_test>& systems,
                                    const adaptation_domain& d) {
  if (suites.size() != systems.size()) {
    throw config_error("scenario sequence: suites and systems differ in length");
  }
  sequence_check check;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    if (suites[i].domain().id != d.id) {
      return sequence_check{false,
                            "suite " + std::to_string(i) + " is not over domain " + d.id,
                            i};
    }
    for (const scenario& sc : suites[i].live()) {
      const clause& c = d.clauses[sc.ref.clause_index];
      const trace t = evaluate(systems[i], w.instantiate(sc.x), sc.x.seed);
      const bool g = satisfies(w, t, c.objective);
      const fitness_value f = fitness_of(t, c.measure);
      if (g != sc.g || !(f == sc.f)) {
        return sequence_check{
            false,
            "suite " + std::to_string(i) + " scenario " + sc.id +
                " disagrees with re-evaluation of system " + systems[i].id,
            i};
      }
    }
    if (i + 1 < suites.size()) {
      const suite_leq_result leq = suite_leq(suites[i], suites[i + 1]);
      if (!leq.leq) {
        return sequence_check{false,
                              "suite " + std::to_string(i) + " not dominated by suite " +
                                  std::to_string(i + 1) + " (scenario " +
                                  leq.first_undominated.value_or("?") + ")",
                              i + 1};
      }
    }
  }
  return check;
}

}  // namespace scedeco
