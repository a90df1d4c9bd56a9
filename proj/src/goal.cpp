#include "scedeco/goal.hpp"

#include <algorithm>

namespace scedeco {

goal::goal(std::vector<goal_atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool goal::contains(const goal_atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

goal goal::conjoin(const goal& other) const {
  std::vector<goal_atom> merged = atoms_;
  merged.insert(merged.end(), other.atoms_.begin(), other.atoms_.end());
  return goal(std::move(merged));
}

json goal::to_json() const {
  json atoms_j = json::array();
  for (const auto& a : atoms_) atoms_j.push_back(a.to_json());
  return json{{"atoms", atoms_j}};
}

goal goal::from_json(const json& j) {
  std::vector<goal_atom> atoms;
  for (const auto& a : j.at("atoms")) atoms.push_back(goal_atom::from_json(a));
  return goal(std::move(atoms));
}

bool goal_implies(const goal& g1, const goal& g2) {
  return std::includes(g1.atoms().begin(), g1.atoms().end(),
                       g2.atoms().begin(), g2.atoms().end());
}

}  // namespace scedeco
