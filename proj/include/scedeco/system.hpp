#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scedeco/record.hpp"

namespace scedeco {

// Parameter vector that fully determines a system's behavior.
using genome = std::vector<std::int64_t>;

// Per-entry alphabet sizes; entry i takes values in [0, cardinalities[i]).
struct genome_spec {
  std::vector<std::int64_t> cardinalities;

  std::size_t length() const { return cardinalities.size(); }
};

// A deterministic situation -> action relation. The act contract threads
// an internal state record; table policies ignore it. Behavior is a pure
// function of (genome, situation sequence) — the act closure must be
// built from the genome and nothing else.
struct system_under_test {
  std::string id;
  genome genes;
  field_map initial_state;
  std::function<field_map(const field_map& situation, field_map& state)> act;
};

inline json genome_to_json(const genome& g) {
  json j = json::array();
  for (const auto v : g) j.push_back(v);
  return j;
}

inline genome genome_from_json(const json& j) {
  genome g;
  for (const auto& v : j) g.push_back(v.get<std::int64_t>());
  return g;
}

// Sparse difference between two genomes of equal length, as logged and
// replayed: a list of {index, value} overrides.
json genome_delta(const genome& from, const genome& to);
genome apply_genome_delta(const genome& base, const json& delta);

}  // namespace scedeco
