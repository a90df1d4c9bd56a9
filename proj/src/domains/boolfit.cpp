#include "scedeco/domains/boolfit.hpp"

#include <algorithm>

#include "scedeco/errors.hpp"

namespace scedeco::boolfit {

namespace {

void check_table_genome(const genome& g, const config& cfg) {
  if (static_cast<std::int64_t>(g.size()) != cfg.row_count()) {
    throw domain_mismatch_error("truth table genome length mismatch");
  }
  for (const auto v : g) {
    if (v != 0 && v != 1) throw domain_mismatch_error("truth table entry not a bit");
  }
}

}  // namespace

void config::validate() const {
  if (arity < 1) throw config_error("boolfit: non-positive arity");
  if (arity > 20) throw config_error("boolfit: arity too large");
  if (required_inputs.empty()) throw config_error("boolfit: no required inputs");
  for (const auto r : required_inputs) {
    if (r < 0 || r >= row_count()) throw config_error("boolfit: required input out of range");
  }
  if (static_cast<std::int64_t>(target_outputs.size()) != row_count()) {
    throw config_error("boolfit: target table length mismatch");
  }
  for (const auto v : target_outputs) {
    if (v != 0 && v != 1) throw config_error("boolfit: target entry not a bit");
  }
}

json config::to_params() const {
  json required = json::array();
  for (const auto r : required_inputs) required.push_back(r);
  json target = json::array();
  for (const auto v : target_outputs) target.push_back(v);
  return json{{"arity", arity}, {"required", required}, {"target", target}};
}

config config::from_params(const json& params) {
  config cfg;
  cfg.arity = params.at("arity").get<std::int64_t>();
  for (const auto& r : params.at("required")) {
    cfg.required_inputs.push_back(r.get<std::int64_t>());
  }
  for (const auto& v : params.at("target")) {
    cfg.target_outputs.push_back(v.get<std::int64_t>());
  }
  cfg.validate();
  return cfg;
}

void register_vocabulary(world& w) {
  w.register_atom("exact-match-on-required", [](const json&, const trace& t) {
    return field_of(t.terminal, "matched-required") == 1;
  });
  w.register_measure(fitness_measure{
      "fraction-matched", fitness_value::kind_t::scalar, [](const trace& t) {
        return fitness_value::scalar(rational(field_of(t.terminal, "matched-total"),
                                              field_of(t.terminal, "total")));
      }});
}

environment make_environment(const std::string& env_id, const config& cfg) {
  cfg.validate();
  environment e;
  e.id = env_id;
  e.params = cfg.to_params();
  e.horizon = cfg.row_count();
  e.episode = [cfg](const system_under_test& s, std::uint64_t seed) {
    trace t;
    t.seed = seed;
    field_map state = s.initial_state;
    std::int64_t matched_total = 0;
    bool matched_required = true;
    for (std::int64_t row = 0; row < cfg.row_count(); ++row) {
      const field_map situation{{"input", row}};
      const field_map action = s.act(situation, state);
      const std::int64_t out = field_of(action, "output");
      if (out != 0 && out != 1) throw domain_mismatch_error("output not a bit");
      t.steps.push_back(step{situation, action});
      const bool match = out == cfg.target_outputs[static_cast<std::size_t>(row)];
      if (match) ++matched_total;
      if (!match && std::find(cfg.required_inputs.begin(), cfg.required_inputs.end(),
                              row) != cfg.required_inputs.end()) {
        matched_required = false;
      }
    }
    t.terminal = field_map{{"matched-required", matched_required ? 1 : 0},
                           {"matched-total", matched_total},
                           {"steps", static_cast<std::int64_t>(t.steps.size())},
                           {"total", cfg.row_count()}};
    return t;
  };
  return e;
}

void register_family(world& w, const std::string& env_id, const config& cfg) {
  cfg.validate();
  world::env_family f;
  f.id = env_id;
  f.base_params = cfg.to_params();
  f.mutable_context = false;  // seeds are reserved; the table is the task
  f.instantiate = [env_id](const json& params) {
    return make_environment(env_id, config::from_params(params));
  };
  w.register_family(std::move(f));
}

system_under_test make_table_system(std::string id, genome g, const config& cfg) {
  check_table_genome(g, cfg);
  system_under_test s;
  s.id = std::move(id);
  s.genes = std::move(g);
  s.act = [table = s.genes](const field_map& situation, field_map&) {
    const std::int64_t row = field_of(situation, "input");
    if (row < 0 || row >= static_cast<std::int64_t>(table.size())) {
      throw domain_mismatch_error("input row outside the table");
    }
    return field_map{{"output", table[static_cast<std::size_t>(row)]}};
  };
  return s;
}

genome_spec table_genome_spec(const config& cfg) {
  genome_spec spec;
  spec.cardinalities.assign(static_cast<std::size_t>(cfg.row_count()), 2);
  return spec;
}

}  // namespace scedeco::boolfit
