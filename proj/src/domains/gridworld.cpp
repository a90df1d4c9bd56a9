#include "scedeco/domains/gridworld.hpp"

#include <algorithm>
#include <deque>

#include "scedeco/errors.hpp"

namespace scedeco::gridworld {

namespace {

std::int64_t manhattan(cell a, cell b) {
  return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}

json cell_to_json(cell c) { return json::array({c.x, c.y}); }

cell cell_from_json(const json& j) {
  return cell{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

// Shortest-path step counts from every cell to the target, -1 where the
// target is unreachable. Used for policy construction and for keeping
// mutated contexts solvable.
std::vector<std::int64_t> distances_to_target(const config& cfg) {
  std::vector<std::int64_t> dist(static_cast<std::size_t>(cfg.cell_count()), -1);
  std::deque<cell> frontier;
  dist[cfg.cell_index(cfg.target)] = 0;
  frontier.push_back(cfg.target);
  while (!frontier.empty()) {
    const cell c = frontier.front();
    frontier.pop_front();
    const std::int64_t d = dist[cfg.cell_index(c)];
    for (const cell n : {cell{c.x, c.y + 1}, cell{c.x, c.y - 1}, cell{c.x - 1, c.y},
                         cell{c.x + 1, c.y}}) {
      if (cfg.blocked(n)) continue;
      if (dist[cfg.cell_index(n)] != -1) continue;
      dist[cfg.cell_index(n)] = d + 1;
      frontier.push_back(n);
    }
  }
  return dist;
}

bool solvable(const config& cfg) {
  return distances_to_target(cfg)[cfg.cell_index(cfg.start)] >= 0;
}

void check_policy_genome(const genome& g, const config& cfg) {
  if (static_cast<std::int64_t>(g.size()) != cfg.cell_count()) {
    throw domain_mismatch_error("policy genome length " + std::to_string(g.size()) +
                                " does not match grid with " +
                                std::to_string(cfg.cell_count()) + " cells");
  }
  for (const auto v : g) {
    if (v < 0 || v >= action_count) {
      throw domain_mismatch_error("policy genome entry out of action range");
    }
  }
}

field_map own_view(cell c) { return field_map{{"x", c.x}, {"y", c.y}}; }

std::int64_t act_move(const system_under_test& s, cell c, field_map& state) {
  const field_map action = s.act(own_view(c), state);
  const std::int64_t move = field_of(action, "move");
  if (move < 0 || move >= action_count) {
    throw domain_mismatch_error("action out of range");
  }
  return move;
}

}  // namespace

void config::validate() const {
  if (width < 1 || height < 1) throw config_error("gridworld: non-positive size");
  if (horizon < 1) throw config_error("gridworld: non-positive horizon");
  if (start == target) throw config_error("gridworld: start equals target");
  if (!in_bounds(start) || !in_bounds(target)) {
    throw config_error("gridworld: start or target out of bounds");
  }
  if (obstacles.count(start) > 0 || obstacles.count(target) > 0) {
    throw config_error("gridworld: start or target is an obstacle");
  }
  for (const cell c : obstacles) {
    if (!in_bounds(c)) throw config_error("gridworld: obstacle out of bounds");
  }
  if (mutation.max_obstacles < 0) throw config_error("gridworld: negative obstacle cap");
}

json config::to_params() const {
  json obstacles_j = json::array();
  for (const cell c : obstacles) obstacles_j.push_back(cell_to_json(c));
  return json{{"height", height},
              {"horizon", horizon},
              {"mutation",
               json{{"max-obstacles", mutation.max_obstacles},
                    {"obstacles", mutation.mutate_obstacles},
                    {"start", mutation.mutate_start}}},
              {"obstacles", obstacles_j},
              {"start", cell_to_json(start)},
              {"target", cell_to_json(target)},
              {"width", width}};
}

config config::from_params(const json& params) {
  config cfg;
  cfg.width = params.at("width").get<std::int64_t>();
  cfg.height = params.at("height").get<std::int64_t>();
  cfg.horizon = params.at("horizon").get<std::int64_t>();
  cfg.start = cell_from_json(params.at("start"));
  cfg.target = cell_from_json(params.at("target"));
  for (const auto& c : params.at("obstacles")) cfg.obstacles.insert(cell_from_json(c));
  if (params.contains("mutation")) {
    const json& m = params.at("mutation");
    cfg.mutation.max_obstacles = m.at("max-obstacles").get<std::int64_t>();
    cfg.mutation.mutate_obstacles = m.at("obstacles").get<bool>();
    cfg.mutation.mutate_start = m.at("start").get<bool>();
  }
  cfg.validate();
  return cfg;
}

cell apply_action(const config& cfg, cell from, std::int64_t a) {
  cell to = from;
  switch (a) {
    case up: to.y += 1; break;
    case down: to.y -= 1; break;
    case left: to.x -= 1; break;
    case right: to.x += 1; break;
    default: break;
  }
  // Moves into walls or obstacles resolve to stay.
  return cfg.blocked(to) ? from : to;
}

void register_vocabulary(world& w) {
  w.register_atom("reach-target", [](const json&, const trace& t) {
    return field_of(t.terminal, "reached") == 1;
  });
  w.register_atom("within-steps", [](const json& params, const trace& t) {
    const auto k = params.at("k").get<std::int64_t>();
    return field_of(t.terminal, "reached") == 1 && field_of(t.terminal, "steps") <= k;
  });
  w.register_atom("all-agents-reached", [](const json&, const trace& t) {
    return field_of(t.terminal, "all-reached") == 1;
  });
  w.register_measure(fitness_measure{
      "neg-steps", fitness_value::kind_t::scalar, [](const trace& t) {
        return fitness_value::scalar(-field_of(t.terminal, "steps"));
      }});
  w.register_measure(fitness_measure{
      "neg-remaining-manhattan", fitness_value::kind_t::scalar, [](const trace& t) {
        return fitness_value::scalar(-field_of(t.terminal, "dist"));
      }});
  w.register_measure(fitness_measure{
      "steps-then-distance", fitness_value::kind_t::lexicographic, [](const trace& t) {
        return fitness_value::lexicographic(
            {rational(-field_of(t.terminal, "steps")),
             rational(-field_of(t.terminal, "dist"))});
      }});
}

environment make_environment(const std::string& env_id, const config& cfg) {
  cfg.validate();
  environment e;
  e.id = env_id;
  e.params = cfg.to_params();
  e.horizon = cfg.horizon;
  e.episode = [cfg](const system_under_test& s, std::uint64_t seed) {
    trace t;
    t.seed = seed;
    field_map state = s.initial_state;
    cell pos = cfg.start;
    while (static_cast<std::int64_t>(t.steps.size()) < cfg.horizon) {
      if (pos == cfg.target) break;
      const field_map situation = own_view(pos);
      const std::int64_t move = act_move(s, pos, state);
      t.steps.push_back(step{situation, field_map{{"move", move}}});
      pos = apply_action(cfg, pos, move);
    }
    t.terminal = field_map{{"dist", manhattan(pos, cfg.target)},
                           {"reached", pos == cfg.target ? 1 : 0},
                           {"steps", static_cast<std::int64_t>(t.steps.size())}};
    return t;
  };
  return e;
}

void register_family(world& w, const std::string& env_id, const config& cfg) {
  cfg.validate();
  world::env_family f;
  f.id = env_id;
  f.base_params = cfg.to_params();
  f.mutable_context = cfg.mutation.mutate_start || cfg.mutation.mutate_obstacles;
  f.instantiate = [env_id](const json& params) {
    return make_environment(env_id, config::from_params(params));
  };
  f.mutate_context = [](const json& params, rng& r) {
    config cfg = config::from_params(params);
    std::vector<int> kinds;
    if (cfg.mutation.mutate_start) kinds.push_back(0);
    if (cfg.mutation.mutate_obstacles) kinds.push_back(1);
    if (kinds.empty()) return params;
    const int kind = kinds[static_cast<std::size_t>(r.next_below(kinds.size()))];
    if (kind == 0) {
      std::vector<cell> candidates;
      for (std::int64_t y = 0; y < cfg.height; ++y) {
        for (std::int64_t x = 0; x < cfg.width; ++x) {
          const cell c{x, y};
          if (c == cfg.start || c == cfg.target || cfg.obstacles.count(c) > 0) continue;
          config probe = cfg;
          probe.start = c;
          if (solvable(probe)) candidates.push_back(c);
        }
      }
      if (candidates.empty()) return params;
      cfg.start = candidates[static_cast<std::size_t>(r.next_below(candidates.size()))];
    } else {
      std::vector<cell> free_cells;
      for (std::int64_t y = 0; y < cfg.height; ++y) {
        for (std::int64_t x = 0; x < cfg.width; ++x) {
          const cell c{x, y};
          if (c == cfg.start || c == cfg.target) continue;
          free_cells.push_back(c);
        }
      }
      if (free_cells.empty()) return params;
      const cell pick =
          free_cells[static_cast<std::size_t>(r.next_below(free_cells.size()))];
      config probe = cfg;
      if (probe.obstacles.count(pick) > 0) {
        probe.obstacles.erase(pick);
      } else if (static_cast<std::int64_t>(probe.obstacles.size()) <
                 cfg.mutation.max_obstacles) {
        probe.obstacles.insert(pick);
      } else {
        return params;
      }
      if (!solvable(probe)) return params;
      cfg = probe;
    }
    return cfg.to_params();
  };
  w.register_family(std::move(f));
}

system_under_test make_policy_system(std::string id, genome g, const config& cfg) {
  check_policy_genome(g, cfg);
  system_under_test s;
  s.id = std::move(id);
  s.genes = std::move(g);
  s.act = [table = s.genes, cfg](const field_map& situation, field_map&) {
    const cell c{field_of(situation, "x"), field_of(situation, "y")};
    if (!cfg.in_bounds(c)) {
      throw domain_mismatch_error("situation outside the policy's grid");
    }
    return field_map{{"move", table[cfg.cell_index(c)]}};
  };
  return s;
}

genome_spec policy_genome_spec(const config& cfg) {
  genome_spec spec;
  spec.cardinalities.assign(static_cast<std::size_t>(cfg.cell_count()), action_count);
  return spec;
}

genome stay_put_genome(const config& cfg) {
  return genome(static_cast<std::size_t>(cfg.cell_count()), stay);
}

genome greedy_genome(const config& cfg) {
  genome g(static_cast<std::size_t>(cfg.cell_count()), stay);
  for (std::int64_t y = 0; y < cfg.height; ++y) {
    for (std::int64_t x = 0; x < cfg.width; ++x) {
      const cell c{x, y};
      std::int64_t a = stay;
      if (c.x < cfg.target.x) a = right;
      else if (c.x > cfg.target.x) a = left;
      else if (c.y < cfg.target.y) a = up;
      else if (c.y > cfg.target.y) a = down;
      g[cfg.cell_index(c)] = a;
    }
  }
  return g;
}

genome shortest_path_genome(const config& cfg) {
  const std::vector<std::int64_t> dist = distances_to_target(cfg);
  genome g(static_cast<std::size_t>(cfg.cell_count()), stay);
  for (std::int64_t y = 0; y < cfg.height; ++y) {
    for (std::int64_t x = 0; x < cfg.width; ++x) {
      const cell c{x, y};
      const std::int64_t d = dist[cfg.cell_index(c)];
      if (d <= 0) continue;  // target, obstacles, unreachable cells: stay
      for (const std::int64_t a : {up, down, left, right}) {
        const cell n = apply_action(cfg, c, a);
        if (n != c && dist[cfg.cell_index(n)] == d - 1) {
          g[cfg.cell_index(c)] = a;
          break;
        }
      }
    }
  }
  return g;
}

environment make_composed_environment(const std::string& base_id, const config& cfg,
                                      const std::string& self_label,
                                      const std::vector<peer_agent>& peers) {
  cfg.validate();
  std::vector<std::string> peer_ids;
  peer_ids.reserve(peers.size());
  for (const auto& p : peers) peer_ids.push_back(p.system.id);

  environment e;
  e.id = composed_env_id(base_id, peer_ids);
  e.params = cfg.to_params();
  e.horizon = cfg.horizon;
  e.episode = [cfg, self_label, peers](const system_under_test& s, std::uint64_t seed) {
    trace t;
    t.seed = seed;
    field_map self_state = s.initial_state;
    std::vector<field_map> peer_states;
    std::vector<cell> peer_pos;
    std::vector<bool> peer_reached;
    for (const auto& p : peers) {
      peer_states.push_back(p.system.initial_state);
      peer_pos.push_back(p.start);
      peer_reached.push_back(p.start == p.target);
    }
    cell self_pos = cfg.start;

    const auto joint_situation = [&] {
      field_map m;
      m[self_label + ".x"] = self_pos.x;
      m[self_label + ".y"] = self_pos.y;
      for (std::size_t i = 0; i < peers.size(); ++i) {
        m[peers[i].label + ".x"] = peer_pos[i].x;
        m[peers[i].label + ".y"] = peer_pos[i].y;
      }
      return m;
    };

    while (static_cast<std::int64_t>(t.steps.size()) < cfg.horizon) {
      if (self_pos == cfg.target) break;
      const field_map situation = joint_situation();
      field_map actions;
      const std::int64_t self_move = act_move(s, self_pos, self_state);
      actions[self_label + ".move"] = self_move;
      std::vector<std::int64_t> peer_moves(peers.size());
      for (std::size_t i = 0; i < peers.size(); ++i) {
        peer_moves[i] = act_move(peers[i].system, peer_pos[i], peer_states[i]);
        actions[peers[i].label + ".move"] = peer_moves[i];
      }
      t.steps.push_back(step{situation, actions});
      // Simultaneous moves; agents pass through each other freely.
      self_pos = apply_action(cfg, self_pos, self_move);
      for (std::size_t i = 0; i < peers.size(); ++i) {
        peer_pos[i] = apply_action(cfg, peer_pos[i], peer_moves[i]);
        if (peer_pos[i] == peers[i].target) peer_reached[i] = true;
      }
    }

    const bool self_reached = self_pos == cfg.target;
    bool all = self_reached;
    for (const bool r : peer_reached) all = all && r;
    t.terminal = field_map{{"all-reached", all ? 1 : 0},
                           {"dist", manhattan(self_pos, cfg.target)},
                           {"reached", self_reached ? 1 : 0},
                           {"steps", static_cast<std::int64_t>(t.steps.size())}};
    t.terminal[self_label + ".x"] = self_pos.x;
    t.terminal[self_label + ".y"] = self_pos.y;
    for (std::size_t i = 0; i < peers.size(); ++i) {
      t.terminal[peers[i].label + ".x"] = peer_pos[i].x;
      t.terminal[peers[i].label + ".y"] = peer_pos[i].y;
    }
    return t;
  };
  return e;
}

}  // namespace scedeco::gridworld
