#include "scedeco/replay.hpp"

#include "scedeco/errors.hpp"
#include "scedeco/run_config.hpp"
#include "scedeco/scenario.hpp"

namespace scedeco {

coevolution_run replay(const lineage_log& log) {
  if (!log.header.contains("format-version")) {
    throw version_error("log header has no format version");
  }
  const auto version = log.header.at("format-version").get<std::int64_t>();
  if (version != lineage_format_version) {
    throw version_error("log format version " + std::to_string(version) +
                        " is not supported (expected " +
                        std::to_string(lineage_format_version) + ")");
  }
  const log_check check = verify_log(log);
  if (!check.ok) {
    throw integrity_error("log fails structural verification: " + check.violation);
  }

  const lineage_event& start = log.events.front();
  const json& config = start.payload.at("config");
  if (digest_of_json(config) != log.header.at("config-digest").get<std::string>()) {
    throw corruption_error("config snapshot does not match the header digest");
  }
  const auto root_seed = start.payload.at("root-seed").get<std::uint64_t>();
  if (root_seed != log.header.at("root-seed").get<std::uint64_t>()) {
    throw corruption_error("root seed differs between header and run-start");
  }

  run_setup rs;
  try {
    rs = load_run_config(config);
  } catch (const config_error& e) {
    throw corruption_error(std::string("embedded config does not load: ") + e.what());
  }
  if (rs.root_seed != root_seed) {
    throw corruption_error("embedded config seed differs from run-start");
  }

  verifying_sink sink(log);
  coevolution_run run;
  try {
    run = run_configured(rs, sink);
  } catch (const corruption_error&) {
    throw;
  } catch (const internal_consistency_error& e) {
    // The recomputation failed its own validators where the recorded run
    // did not (or vice versa); either way the log does not describe this
    // computation.
    throw corruption_error(std::string("replay failed validation: ") + e.what());
  }
  sink.finish();
  return run;
}

}  // namespace scedeco
