#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scedeco/adaptation.hpp"
#include "scedeco/world.hpp"

namespace scedeco::gridworld {

// Cell coordinates, x in [0, width), y in [0, height).
struct cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const cell&, const cell&) = default;
  friend auto operator<=>(const cell&, const cell&) = default;
};

// Actions of the tabular policy genome, one entry per cell.
enum action : std::int64_t { up = 0, down = 1, left = 2, right = 3, stay = 4 };
inline constexpr std::int64_t action_count = 5;

// Which parts of the episode context the antagonist may vary. Mutated
// contexts always stay valid and solvable (target reachable from start).
struct mutation_settings {
  bool mutate_start = false;
  bool mutate_obstacles = false;
  std::int64_t max_obstacles = 0;
};

struct config {
  std::int64_t width = 3;
  std::int64_t height = 3;
  std::set<cell> obstacles;
  cell start{0, 0};
  cell target{2, 2};
  std::int64_t horizon = 16;
  mutation_settings mutation;

  void validate() const;
  json to_params() const;
  static config from_params(const json& params);

  std::int64_t cell_count() const { return width * height; }
  std::size_t cell_index(cell c) const {
    return static_cast<std::size_t>(c.y * width + c.x);
  }
  bool in_bounds(cell c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  bool blocked(cell c) const { return !in_bounds(c) || obstacles.count(c) > 0; }
};

cell apply_action(const config& cfg, cell from, std::int64_t a);

// Registers the goal atoms (reach-target, within-steps, all-agents-reached)
// and fitness measures (neg-steps, neg-remaining-manhattan,
// steps-then-distance) the gridworld environments report against.
void register_vocabulary(world& w);

// Registers an environment family under env_id with cfg as base context.
void register_family(world& w, const std::string& env_id, const config& cfg);

// Builds the single-agent environment directly (the family's instantiate
// goes through here).
environment make_environment(const std::string& env_id, const config& cfg);

// Policy systems. Genomes are one action per cell, row-major.
system_under_test make_policy_system(std::string id, genome g, const config& cfg);
genome_spec policy_genome_spec(const config& cfg);

genome stay_put_genome(const config& cfg);
// Obstacle-blind greedy: reduces |dx| first, then |dy|, computed as if the
// grid were empty.
genome greedy_genome(const config& cfg);
// Obstacle-aware shortest-path routing from every reachable cell; optimal
// witness for the neg-steps measure.
genome shortest_path_genome(const config& cfg);

// One embedded peer of a composed environment: an independent policy
// walking its own route while the system under test runs.
struct peer_agent {
  std::string label;
  system_under_test system;
  cell start;
  cell target;
};

// Environment in which the system under test (labeled self_label, with
// its own start/target from cfg) runs alongside the peers. Joint
// situations carry "<label>.x"/"<label>.y" for every participant; each
// policy sees only its own position as "x"/"y".
environment make_composed_environment(const std::string& base_id, const config& cfg,
                                      const std::string& self_label,
                                      const std::vector<peer_agent>& peers);

}  // namespace scedeco::gridworld
