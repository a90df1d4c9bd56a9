#include "scedeco/domains/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <vector>

#include "scedeco/errors.hpp"

namespace scedeco::oracle {

namespace {

struct grid {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::int64_t horizon = 0;
  std::pair<std::int64_t, std::int64_t> start;
  std::pair<std::int64_t, std::int64_t> target;
  std::vector<bool> obstacle;  // row-major

  std::size_t index(std::int64_t x, std::int64_t y) const {
    return static_cast<std::size_t>(y * width + x);
  }
  bool free_cell(std::int64_t x, std::int64_t y) const {
    return x >= 0 && x < width && y >= 0 && y < height && !obstacle[index(x, y)];
  }
};

grid parse_grid(const json& params) {
  grid g;
  g.width = params.at("width").get<std::int64_t>();
  g.height = params.at("height").get<std::int64_t>();
  g.horizon = params.at("horizon").get<std::int64_t>();
  g.start = {params.at("start").at(0).get<std::int64_t>(),
             params.at("start").at(1).get<std::int64_t>()};
  g.target = {params.at("target").at(0).get<std::int64_t>(),
              params.at("target").at(1).get<std::int64_t>()};
  g.obstacle.assign(static_cast<std::size_t>(g.width * g.height), false);
  for (const auto& c : params.at("obstacles")) {
    g.obstacle[g.index(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>())] = true;
  }
  if (g.width > 8 || g.height > 8) {
    throw oracle_scale_error("gridworld oracle limited to 8x8");
  }
  return g;
}

struct walk_outcome {
  bool reached = false;
  std::int64_t steps = 0;
  std::int64_t final_dist = 0;
};

// Resolves a memoryless policy walk by first-revisit cycle detection: a
// revisited cell before the target means the walk never terminates, and
// the position at the horizon follows from cycle arithmetic.
walk_outcome resolve_walk(const grid& g, const genome& policy) {
  if (static_cast<std::int64_t>(policy.size()) != g.width * g.height) {
    throw domain_mismatch_error("oracle: policy length mismatch");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> visited;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> first_seen;
  auto pos = g.start;
  const auto step_from = [&](std::pair<std::int64_t, std::int64_t> p) {
    auto q = p;
    switch (policy[g.index(p.first, p.second)]) {
      case 0: q.second += 1; break;
      case 1: q.second -= 1; break;
      case 2: q.first -= 1; break;
      case 3: q.first += 1; break;
      case 4: break;
      default: throw domain_mismatch_error("oracle: bad action");
    }
    return g.free_cell(q.first, q.second) ? q : p;
  };

  walk_outcome out;
  while (true) {
    if (pos == g.target) {
      // The horizon guard below keeps this branch within budget.
      out.reached = true;
      out.steps = static_cast<std::int64_t>(visited.size());
      out.final_dist = 0;
      return out;
    }
    const auto seen = first_seen.find(pos);
    if (seen != first_seen.end()) {
      // Cycle entered before the target; position at the horizon by
      // modular arithmetic over the cycle.
      const std::int64_t cycle_start = seen->second;
      const std::int64_t cycle_len = static_cast<std::int64_t>(visited.size()) - cycle_start;
      pos = visited[static_cast<std::size_t>(
          cycle_start + (g.horizon - cycle_start) % cycle_len)];
      break;
    }
    first_seen[pos] = static_cast<std::int64_t>(visited.size());
    visited.push_back(pos);
    pos = step_from(pos);
    if (static_cast<std::int64_t>(visited.size()) > g.horizon) {
      // Walk ran out of budget before repeating or arriving.
      pos = visited[static_cast<std::size_t>(g.horizon)];
      break;
    }
  }
  out.reached = false;
  out.steps = g.horizon;
  out.final_dist = std::abs(pos.first - g.target.first) +
                   std::abs(pos.second - g.target.second);
  return out;
}

// Step counts from the start cell to everywhere, ignoring the policy.
std::vector<std::int64_t> bfs_from_start(const grid& g) {
  std::vector<std::int64_t> dist(g.obstacle.size(), -1);
  std::queue<std::pair<std::int64_t, std::int64_t>> q;
  dist[g.index(g.start.first, g.start.second)] = 0;
  q.push(g.start);
  while (!q.empty()) {
    const auto [x, y] = q.front();
    q.pop();
    const std::int64_t d = dist[g.index(x, y)];
    const std::pair<std::int64_t, std::int64_t> nbrs[4] = {
        {x, y + 1}, {x, y - 1}, {x - 1, y}, {x + 1, y}};
    for (const auto& [nx, ny] : nbrs) {
      if (!g.free_cell(nx, ny) || dist[g.index(nx, ny)] != -1) continue;
      dist[g.index(nx, ny)] = d + 1;
      q.push({nx, ny});
    }
  }
  return dist;
}

bool goal_holds(const goal& obj, bool reached, std::int64_t steps) {
  for (const auto& atom : obj.atoms()) {
    if (atom.name == "reach-target") {
      if (!reached) return false;
    } else if (atom.name == "within-steps") {
      if (!reached || steps > atom.params.at("k").get<std::int64_t>()) return false;
    } else {
      throw oracle_scale_error("oracle does not know goal atom: " + atom.name);
    }
  }
  return true;
}

struct table_outcome {
  bool matched_required = false;
  std::int64_t matched_total = 0;
  std::int64_t total = 0;
};

table_outcome resolve_table(const json& params, const genome& g) {
  const auto arity = params.at("arity").get<std::int64_t>();
  if (arity > 4) throw oracle_scale_error("boolfit oracle limited to arity 4");
  const std::int64_t rows = std::int64_t{1} << arity;
  if (static_cast<std::int64_t>(g.size()) != rows) {
    throw domain_mismatch_error("oracle: table length mismatch");
  }
  table_outcome out;
  out.total = rows;
  out.matched_required = true;
  const json& target = params.at("target");
  for (std::int64_t r = 0; r < rows; ++r) {
    if (g[static_cast<std::size_t>(r)] == target.at(static_cast<std::size_t>(r)).get<std::int64_t>()) {
      ++out.matched_total;
    }
  }
  for (const auto& r : params.at("required")) {
    const auto row = r.get<std::int64_t>();
    if (g[static_cast<std::size_t>(row)] !=
        target.at(static_cast<std::size_t>(row)).get<std::int64_t>()) {
      out.matched_required = false;
    }
  }
  return out;
}

fitness_value grid_measure_value(const std::string& name, const walk_outcome& w);

fitness_value measure_value_by_name(const std::string& name, const walk_outcome& w) {
  if (name.rfind("max(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(4, name.size() - 5);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        const fitness_value a = measure_value_by_name(inner.substr(0, i), w);
        const fitness_value b = measure_value_by_name(inner.substr(i + 1), w);
        return compare(a, b) == ordering::less ? b : a;
      }
    }
  }
  return grid_measure_value(name, w);
}

fitness_value grid_measure_value(const std::string& name, const walk_outcome& w) {
  if (name == "neg-steps") return fitness_value::scalar(-w.steps);
  if (name == "neg-remaining-manhattan") return fitness_value::scalar(-w.final_dist);
  if (name == "steps-then-distance") {
    return fitness_value::lexicographic({rational(-w.steps), rational(-w.final_dist)});
  }
  throw oracle_scale_error("oracle does not know measure: " + name);
}

bool is_grid_clause(const clause& c) { return c.env.params.contains("width"); }
bool is_table_clause(const clause& c) { return c.env.params.contains("arity"); }

}  // namespace

bool oracle_adapts_to(const system_under_test& s, const adaptation_domain& d) {
  for (const auto& c : d.clauses) {
    if (is_grid_clause(c)) {
      const grid g = parse_grid(c.env.params);
      const walk_outcome w = resolve_walk(g, s.genes);
      if (!goal_holds(c.objective, w.reached, w.steps)) return false;
    } else if (is_table_clause(c)) {
      const table_outcome t = resolve_table(c.env.params, s.genes);
      for (const auto& atom : c.objective.atoms()) {
        if (atom.name != "exact-match-on-required") {
          throw oracle_scale_error("oracle does not know goal atom: " + atom.name);
        }
        if (!t.matched_required) return false;
      }
    } else {
      throw oracle_scale_error("oracle does not know this environment family");
    }
  }
  return true;
}

fitness_value oracle_best_fitness(const clause& c) {
  if (is_grid_clause(c)) {
    const grid g = parse_grid(c.env.params);
    const std::vector<std::int64_t> dist = bfs_from_start(g);
    const std::int64_t to_target = dist[g.index(g.target.first, g.target.second)];
    const bool attainable = to_target >= 0 && to_target <= g.horizon;
    // Cells a policy can end an episode on: reachable within the horizon.
    std::int64_t best_dist = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t y = 0; y < g.height; ++y) {
      for (std::int64_t x = 0; x < g.width; ++x) {
        if (dist[g.index(x, y)] < 0 || dist[g.index(x, y)] > g.horizon) continue;
        best_dist = std::min(best_dist, std::abs(x - g.target.first) +
                                            std::abs(y - g.target.second));
      }
    }
    walk_outcome best;
    best.reached = attainable;
    best.steps = attainable ? to_target : g.horizon;
    best.final_dist = attainable ? 0 : best_dist;
    return measure_value_by_name(c.measure.name, best);
  }
  if (is_table_clause(c)) {
    if (c.measure.name != "fraction-matched") {
      throw oracle_scale_error("oracle does not know measure: " + c.measure.name);
    }
    return fitness_value::scalar(1);
  }
  throw oracle_scale_error("oracle does not know this environment family");
}

void for_each_genome(const genome_spec& spec,
                     const std::function<bool(const genome&)>& visit) {
  genome g(spec.length(), 0);
  while (true) {
    if (!visit(g)) return;
    std::size_t i = 0;
    for (; i < g.size(); ++i) {
      if (++g[i] < spec.cardinalities[i]) break;
      g[i] = 0;
    }
    if (i == g.size()) return;
  }
}

}  // namespace scedeco::oracle
