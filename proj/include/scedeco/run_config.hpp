#pragma once

#include <memory>

#include "scedeco/evolution.hpp"

namespace scedeco {

// A parsed, validated run configuration document: the world it speaks of,
// the cooldown schedule (phase spaces materialized by cumulative
// hardening of the base domain), both search configs, and the builders
// for the configured domain family.
struct run_setup {
  std::unique_ptr<world> w;
  cooldown_schedule schedule;
  optimizer_config optimizer;
  antagonist_config antagonist;
  std::uint64_t root_seed = 0;
  adaptation_domain base_domain;
  genome initial_genome;
  genome_spec spec;
  system_factory make_system;
  // Canonical snapshot: presets resolved, keys ordered. This is what gets
  // embedded in logs and run records; loading it again reproduces the
  // same setup.
  json snapshot;
};

// Parses and validates a run configuration document (or a snapshot
// embedded in a log). Throws config_error on any invariant violation.
run_setup load_run_config(const json& config);

coevolution_setup to_coevolution_setup(const run_setup& rs);

// Builds the initial system and runs the arms race from a loaded setup.
coevolution_run run_configured(const run_setup& rs, event_sink& sink);

}  // namespace scedeco
