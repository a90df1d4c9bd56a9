#include "scedeco/world.hpp"

#include "scedeco/errors.hpp"

namespace scedeco {

namespace {

// Splits "a,b" at the single top-level comma of a max(...) payload.
bool split_top_level(const std::string& s, std::string& lhs, std::string& rhs) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      lhs = s.substr(0, i);
      rhs = s.substr(i + 1);
      return true;
    }
  }
  return false;
}

}  // namespace

void world::register_atom(const std::string& name, atom_evaluator fn) {
  atoms_[name] = std::move(fn);
}

bool world::eval_atom(const goal_atom& atom, const trace& t) const {
  const auto it = atoms_.find(atom.name);
  if (it == atoms_.end()) throw registry_error("unknown goal atom: " + atom.name);
  return it->second(atom.params, t);
}

void world::register_measure(fitness_measure m) {
  measures_[m.name] = std::move(m);
}

bool world::has_measure(const std::string& name) const {
  if (measures_.count(name) > 0) return true;
  if (name.rfind("max(", 0) == 0 && name.back() == ')') {
    std::string lhs, rhs;
    if (!split_top_level(name.substr(4, name.size() - 5), lhs, rhs)) return false;
    return has_measure(lhs) && has_measure(rhs);
  }
  return false;
}

fitness_measure world::measure(const std::string& name) const {
  const auto it = measures_.find(name);
  if (it != measures_.end()) return it->second;
  if (name.rfind("max(", 0) == 0 && name.back() == ')') {
    std::string lhs, rhs;
    if (split_top_level(name.substr(4, name.size() - 5), lhs, rhs)) {
      return max_measure(measure(lhs), measure(rhs));
    }
  }
  throw registry_error("unknown fitness measure: " + name);
}

void world::register_family(env_family f) {
  families_[f.id] = std::move(f);
}

const world::env_family& world::family(const std::string& id) const {
  const auto it = families_.find(id);
  if (it == families_.end()) throw registry_error("unknown environment: " + id);
  return it->second;
}

environment world::instantiate(const std::string& env_id) const {
  const env_family& f = family(env_id);
  return f.instantiate(f.base_params);
}

environment world::instantiate(const std::string& env_id, const json& params) const {
  return family(env_id).instantiate(params);
}

environment world::instantiate(const episode_context& ctx) const {
  return family(ctx.env_id).instantiate(ctx.params);
}

bool world::supports_context_mutation(const std::string& env_id) const {
  return family(env_id).mutable_context;
}

json world::mutate_context(const std::string& env_id, const json& params, rng& r) const {
  const env_family& f = family(env_id);
  if (!f.mutable_context) {
    throw unsupported_error("environment does not support context mutation: " + env_id);
  }
  return f.mutate_context(params, r);
}

}  // namespace scedeco
