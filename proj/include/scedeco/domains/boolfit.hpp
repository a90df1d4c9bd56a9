#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scedeco/adaptation.hpp"
#include "scedeco/world.hpp"

namespace scedeco::boolfit {

// Truth-table matching task: the genome is an output bit per input row;
// the goal asks for exact agreement on the required rows, fitness is the
// exact fraction of all rows matched.
struct config {
  std::int64_t arity = 2;
  std::vector<std::int64_t> required_inputs;  // row indices in [0, 2^arity)
  std::vector<std::int64_t> target_outputs;   // length 2^arity, bits

  void validate() const;
  json to_params() const;
  static config from_params(const json& params);

  std::int64_t row_count() const { return std::int64_t{1} << arity; }
};

// Registers the exact-match-on-required atom and fraction-matched measure.
void register_vocabulary(world& w);

void register_family(world& w, const std::string& env_id, const config& cfg);
environment make_environment(const std::string& env_id, const config& cfg);

system_under_test make_table_system(std::string id, genome g, const config& cfg);
genome_spec table_genome_spec(const config& cfg);

}  // namespace scedeco::boolfit
