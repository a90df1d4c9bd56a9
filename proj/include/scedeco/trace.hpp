#pragma once

#include <cstdint>
#include <vector>

#include "scedeco/record.hpp"

namespace scedeco {

// One situation/action pair of a closed-loop episode. The situation is
// what the environment presented, the action what the system replied.
struct step {
  field_map situation;
  field_map action;

  friend bool operator==(const step&, const step&) = default;
};

// The concrete witness of one joint evolution of a system inside an
// environment: the step sequence, a terminal summary recomputable from
// the steps, and the seed the episode ran under.
struct trace {
  std::vector<step> steps;
  field_map terminal;
  std::uint64_t seed = 0;

  friend bool operator==(const trace&, const trace&) = default;

  json to_json() const;
  static trace from_json(const json& j);

  // Canonical content digest; identical traces digest identically on
  // every platform.
  std::string digest() const { return digest_of_json(to_json()); }
};

}  // namespace scedeco
