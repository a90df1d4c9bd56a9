// Command-line front end: run, validate, export, and replay coevolution
// experiments. Exit codes are a stable contract:
//   0 success, 2 configuration error, 3 consistency/corruption failure,
//   4 I/O failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "scedeco/errors.hpp"
#include "scedeco/lineage.hpp"
#include "scedeco/replay.hpp"
#include "scedeco/run_config.hpp"
#include "scedeco/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_consistency = 3;
constexpr int exit_io = 4;

namespace fs = std::filesystem;
using scedeco::json;

json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scedeco::io_error("cannot read file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw scedeco::config_error("not valid JSON: " + path.string() + ": " + e.what());
  }
  return j;
}

void write_text_file_atomic(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw scedeco::io_error("cannot write file: " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw scedeco::io_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw scedeco::io_error("atomic rename failed: " + ec.message());
}

int run_coevolve(const std::string& config_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed_override) {
  json config = read_json_file(config_path);
  if (seed_override) config["root-seed"] = *seed_override;
  const scedeco::run_setup rs = scedeco::load_run_config(config);

  const fs::path out(out_path);
  const fs::path partial(out_path + ".partial");
  std::ofstream stream(partial, std::ios::binary | std::ios::trunc);
  if (!stream) throw scedeco::io_error("cannot write log: " + partial.string());

  scedeco::recording_sink sink(rs.snapshot, rs.root_seed, &stream);
  scedeco::coevolution_run run;
  try {
    run = scedeco::run_configured(rs, sink);
  } catch (...) {
    stream.close();  // aborted-run log stays behind as .partial
    throw;
  }
  stream.close();
  if (!stream) throw scedeco::io_error("write failed: " + partial.string());
  std::error_code ec;
  fs::rename(partial, out, ec);
  if (ec) throw scedeco::io_error("atomic rename failed: " + ec.message());

  const json& report = run.final_report;
  std::cout << "run: " << report.at("final-system").get<std::string>() << " after "
            << report.at("generations") << " generations, "
            << report.at("accepted-steps") << " accepted steps\n";
  for (const auto& marker : run.phases) {
    std::cout << "phase " << marker.phase_index << " (" << marker.name
              << "): domain " << marker.domain_id << ", budget " << marker.budget
              << ", suite size "
              << run.suites[marker.suite_versions.back()].live_count() << "\n";
  }
  const scedeco::adaptation_domain& final_domain =
      rs.schedule.phases.back().space.domains[0];
  const scedeco::adaptation_report final_report = scedeco::adapts_to(
      *rs.w, run.systems.back(), final_domain, scedeco::seed_policy{rs.root_seed});
  std::cout << "final domain " << final_domain.id
            << " verdict: " << (final_report.verdict ? "adapts" : "does-not-adapt")
            << "\n";
  for (const auto& c : final_report.clauses) {
    std::cout << "  clause " << c.index << ": goal "
              << (c.goal_satisfied ? "holds" : "fails") << ", fitness "
              << c.fitness.to_json().dump() << "\n";
  }
  if (!report.at("flagged-phases").empty()) {
    std::cout << "flagged phases (optimizer stalled): "
              << report.at("flagged-phases").dump() << "\n";
  }
  std::cout << "log: " << out_path << "\n";
  return exit_ok;
}

int run_check(const std::string& log_path) {
  const scedeco::lineage_log log = scedeco::read_log_file(log_path);
  const scedeco::log_check structure = scedeco::verify_log(log);
  std::cout << "verify-log: " << (structure.ok ? "ok" : "FAIL") << "\n";
  if (!structure.ok) {
    std::cerr << "first violation: " << structure.violation << "\n";
    return exit_consistency;
  }
  if (structure.truncated) {
    std::cout << "warning: log is truncated (no run-end); aborted runs are legal\n";
  }

  const scedeco::coevolution_run run = scedeco::replay(log);
  std::cout << "replay: ok\n";

  const scedeco::run_setup rs =
      scedeco::load_run_config(log.events.front().payload.at("config"));
  const scedeco::seed_policy seeds{rs.root_seed};
  bool all_ok = true;
  for (const auto& marker : run.phases) {
    std::vector<scedeco::system_under_test> chain;
    std::vector<scedeco::scenario_suite> suites;
    for (const std::size_t idx : marker.system_versions) chain.push_back(run.systems[idx]);
    for (const std::size_t idx : marker.suite_versions) suites.push_back(run.suites[idx]);
    scedeco::adaptation_space singleton;
    singleton.id = "check-phase-" + std::to_string(marker.phase_index);
    singleton.domains.push_back(
        rs.schedule.phases[marker.phase_index].space.domains[0]);

    const scedeco::sequence_check adapt =
        scedeco::is_adaptation_sequence(*rs.w, chain, singleton, seeds);
    std::cout << "adaptation-sequence (phase " << marker.phase_index
              << "): " << (adapt.ok ? "ok" : "FAIL") << "\n";
    if (!adapt.ok) std::cerr << "first violation: " << adapt.violation << "\n";

    const scedeco::sequence_check scen = scedeco::is_scenario_sequence(
        *rs.w, suites, chain, rs.schedule.phases[marker.phase_index].space.domains[0]);
    std::cout << "scenario-sequence (phase " << marker.phase_index
              << "): " << (scen.ok ? "ok" : "FAIL") << "\n";
    if (!scen.ok) std::cerr << "first violation: " << scen.violation << "\n";
    all_ok = all_ok && adapt.ok && scen.ok;
  }

  std::vector<scedeco::adaptation_space> spaces;
  for (const auto& p : rs.schedule.phases) spaces.push_back(p.space);
  const scedeco::sequence_check space_check = scedeco::verify_space_sequence(spaces);
  std::cout << "space-sequence: " << (space_check.ok ? "ok" : "FAIL") << "\n";
  if (!space_check.ok) std::cerr << "first violation: " << space_check.violation << "\n";
  all_ok = all_ok && space_check.ok;

  std::int64_t previous_budget = -1;
  bool budgets_ok = true;
  for (const auto& e : log.events) {
    if (e.kind != "phase-start") continue;
    const auto budget = e.payload.at("budget").get<std::int64_t>();
    if (previous_budget >= 0 && budget > previous_budget) budgets_ok = false;
    previous_budget = budget;
  }
  std::cout << "budgets-non-increasing: " << (budgets_ok ? "ok" : "FAIL") << "\n";
  all_ok = all_ok && budgets_ok;

  return all_ok ? exit_ok : exit_consistency;
}

int run_export_suite(const std::string& log_path, const std::string& out_path,
                     std::optional<std::int64_t> at) {
  const scedeco::lineage_log log = scedeco::read_log_file(log_path);
  const scedeco::coevolution_run run = scedeco::replay(log);
  std::int64_t index = at.value_or(static_cast<std::int64_t>(run.suites.size()) - 1);
  if (index < 0 || index >= static_cast<std::int64_t>(run.suites.size())) {
    throw scedeco::config_error("suite version index out of range: " +
                                std::to_string(index) + " (run has " +
                                std::to_string(run.suites.size()) + " versions)");
  }
  const json doc = run.suites[static_cast<std::size_t>(index)].to_json();
  write_text_file_atomic(out_path, doc.dump(2) + "\n");
  std::cout << "exported suite version " << index << " ("
            << run.suites[static_cast<std::size_t>(index)].live_count()
            << " scenarios) to " << out_path << "\n";
  return exit_ok;
}

int run_replay(const std::string& log_path) {
  const scedeco::lineage_log log = scedeco::read_log_file(log_path);
  const scedeco::coevolution_run run = scedeco::replay(log);
  std::cout << "replay ok: " << run.systems.size() << " system versions, "
            << run.suites.size() << " suite versions\n";
  return exit_ok;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"scenario-coevolution engine"};
  app.require_subcommand(1);

  std::string config_path, out_path, log_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::int64_t> at_index;

  CLI::App* coevolve = app.add_subcommand("coevolve", "run a configured arms race");
  coevolve->add_option("--config", config_path, "run configuration document")->required();
  coevolve->add_option("--out", out_path, "lineage log output path")->required();
  coevolve->add_option("--seed", seed_override, "override the configured root seed");

  CLI::App* check = app.add_subcommand("check", "validate a lineage log end to end");
  check->add_option("log", log_path, "lineage log path")->required();

  CLI::App* export_suite =
      app.add_subcommand("export-suite", "export a suite version from a log");
  export_suite->add_option("log", log_path, "lineage log path")->required();
  export_suite->add_option("--out", out_path, "suite document output path")->required();
  export_suite->add_option("--at", at_index, "suite version index (default: final)");

  CLI::App* replay_cmd = app.add_subcommand("replay", "re-execute a log and compare");
  replay_cmd->add_option("log", log_path, "lineage log path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }

  if (coevolve->parsed()) return run_coevolve(config_path, out_path, seed_override);
  if (check->parsed()) return run_check(log_path);
  if (export_suite->parsed()) return run_export_suite(log_path, out_path, at_index);
  if (replay_cmd->parsed()) return run_replay(log_path);
  return exit_config;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const scedeco::config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_config;
  } catch (const scedeco::version_error& e) {
    std::cerr << "version error: " << e.what() << "\n";
    return exit_config;
  } catch (const scedeco::io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const scedeco::corruption_error& e) {
    std::cerr << "corruption: " << e.what() << "\n";
    return exit_consistency;
  } catch (const scedeco::integrity_error& e) {
    std::cerr << "integrity violation: " << e.what() << "\n";
    return exit_consistency;
  } catch (const scedeco::internal_consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return exit_consistency;
  } catch (const scedeco::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_consistency;
  }
}
