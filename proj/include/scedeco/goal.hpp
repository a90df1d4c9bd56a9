#pragma once

#include <string>
#include <vector>

#include "scedeco/record.hpp"

namespace scedeco {

// A named check from the atom registry, identified structurally by
// (name, params). Same atom on the same trace always evaluates the same
// way; the evaluator itself is resolved through the world.
struct goal_atom {
  std::string name;
  json params = json::object();

  friend bool operator==(const goal_atom& a, const goal_atom& b) {
    return a.name == b.name && a.params == b.params;
  }
  friend bool operator<(const goal_atom& a, const goal_atom& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params.dump() < b.params.dump();
  }

  json to_json() const { return json{{"name", name}, {"params", params}}; }
  static goal_atom from_json(const json& j) {
    return goal_atom{j.at("name").get<std::string>(),
                     j.contains("params") ? j.at("params") : json::object()};
  }
};

// Conjunction of atoms. Empty set is the always-true goal. Atoms are kept
// sorted and deduplicated so equality and implication are structural.
class goal {
 public:
  goal() = default;
  explicit goal(std::vector<goal_atom> atoms);

  const std::vector<goal_atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  bool contains(const goal_atom& a) const;

  // Atom-set union; the hardened goal this ∧ other.
  goal conjoin(const goal& other) const;

  friend bool operator==(const goal& a, const goal& b) { return a.atoms_ == b.atoms_; }

  json to_json() const;
  static goal from_json(const json& j);

 private:
  std::vector<goal_atom> atoms_;
};

// Syntactic sufficient implication check: g1 implies g2 when g2's atoms
// are a subset of g1's. Sound for conjunctions, not complete.
bool goal_implies(const goal& g1, const goal& g2);

}  // namespace scedeco
