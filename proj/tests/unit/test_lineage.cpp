#include <doctest.h>

#include "scedeco/errors.hpp"
#include "scedeco/lineage.hpp"
#include "scedeco/replay.hpp"
#include "scedeco/run_config.hpp"

#include "../support/test_world.hpp"

using namespace scedeco;

namespace {

lineage_event ev(std::uint64_t seq, const std::string& kind, json payload) {
  lineage_event e;
  e.seq = seq;
  e.kind = kind;
  e.payload = std::move(payload);
  return e;
}

json run_start_payload() {
  return json{{"config", json{{"mode", "test"}}}, {"initial-system", "sys-0"},
              {"root-seed", 1}};
}

json scenario_payload(const std::string& id, bool g, std::int64_t f) {
  return json{{"generation", 0},
              {"phase", 0},
              {"scenario",
               json{{"clause", json{{"domain", "d"}, {"index", 0}}},
                    {"f", fitness_value::scalar(f).to_json()},
                    {"g", g},
                    {"id", id},
                    {"origin", "observed"},
                    {"x", json{{"env", "e"}, {"params", json::object()}, {"seed", 0}}},
                    {"y", json{{"digest", "0000000000000000"}}}}},
              {"suite", "suite-p0"}};
}

lineage_log base_log() {
  lineage_log log;
  log.header = lineage_log::make_header(json{{"mode", "test"}}, 1);
  log = append_event(std::move(log), ev(0, "run-start", run_start_payload()));
  log = append_event(std::move(log),
                     ev(1, "phase-start",
                        json{{"budget", 2}, {"domain", "d"}, {"generations", 1},
                             {"name", "p"}, {"phase", 0}, {"suite", "suite-p0"}}));
  log = append_event(std::move(log), ev(2, "scenario-added", scenario_payload("sc-0", false, -9)));
  return log;
}

}  // namespace

TEST_CASE("append_event: first event must be run-start at seq 0") {
  lineage_log log;
  log.header = lineage_log::make_header(json{{"mode", "test"}}, 1);
  CHECK_NOTHROW(append_event(log, ev(0, "run-start", run_start_payload())));
  CHECK_THROWS_AS(append_event(log, ev(1, "run-start", run_start_payload())),
                  integrity_error);
  CHECK_THROWS_AS(append_event(log, ev(0, "phase-start", json::object())),
                  integrity_error);
}

TEST_CASE("append_event: seq gaps are integrity errors") {
  lineage_log log = base_log();
  CHECK_THROWS_AS(append_event(log, ev(5, "run-end", json::object())), integrity_error);
}

TEST_CASE("append_event: updates must reference a known scenario") {
  lineage_log log = base_log();
  const json update{{"f", fitness_value::scalar(-4).to_json()},
                    {"g", true},
                    {"generation", 1},
                    {"phase", 0},
                    {"scenario", "sc-9"},
                    {"suite", "suite-p0"},
                    {"y-digest", "0000000000000000"}};
  CHECK_THROWS_AS(append_event(log, ev(3, "scenario-updated", update)), integrity_error);
  json good = update;
  good["scenario"] = "sc-0";
  CHECK_NOTHROW(append_event(log, ev(3, "scenario-updated", good)));
}

TEST_CASE("append_event: softening updates are rejected") {
  lineage_log log = base_log();
  const json harden{{"f", fitness_value::scalar(-4).to_json()},
                    {"g", true},
                    {"generation", 1},
                    {"phase", 0},
                    {"scenario", "sc-0"},
                    {"suite", "suite-p0"},
                    {"y-digest", "0000000000000000"}};
  log = append_event(std::move(log), ev(3, "scenario-updated", harden));
  json soften = harden;
  soften["g"] = false;
  soften["f"] = fitness_value::scalar(-4).to_json();
  CHECK_THROWS_AS(append_event(log, ev(4, "scenario-updated", soften)), integrity_error);
}

TEST_CASE("append_event: unknown kinds and post-run-end events are rejected") {
  lineage_log log = base_log();
  CHECK_THROWS_AS(append_event(log, ev(3, "mystery", json::object())), integrity_error);
  log = append_event(std::move(log), ev(3, "run-end", json::object()));
  CHECK_THROWS_AS(append_event(log, ev(4, "validation", json::object())),
                  integrity_error);
}

TEST_CASE("verify_log: a fresh valid log passes, truncation only warns") {
  lineage_log log = base_log();
  log_check check = verify_log(log);
  CHECK(check.ok);
  CHECK(check.truncated);

  log = append_event(std::move(log), ev(3, "run-end", json::object()));
  check = verify_log(log);
  CHECK(check.ok);
  CHECK_FALSE(check.truncated);
}

TEST_CASE("verify_log: catches gaps, dangling references, and softening") {
  lineage_log log = base_log();
  SUBCASE("seq gap") {
    log.events[2].seq = 7;
    const log_check check = verify_log(log);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("seq") != std::string::npos);
  }
  SUBCASE("dangling scenario reference") {
    log.events.push_back(ev(3, "scenario-updated",
                            json{{"f", fitness_value::scalar(0).to_json()},
                                 {"g", true},
                                 {"generation", 1},
                                 {"phase", 0},
                                 {"scenario", "sc-404"},
                                 {"suite", "suite-p0"},
                                 {"y-digest", "0"}}));
    CHECK_FALSE(verify_log(log).ok);
  }
  SUBCASE("softening update") {
    log.events.push_back(ev(3, "scenario-updated",
                            json{{"f", fitness_value::scalar(-20).to_json()},
                                 {"g", false},
                                 {"generation", 1},
                                 {"phase", 0},
                                 {"scenario", "sc-0"},
                                 {"suite", "suite-p0"},
                                 {"y-digest", "0"}}));
    CHECK_FALSE(verify_log(log).ok);
  }
}

TEST_CASE("verify_log: unsupported format version fails") {
  lineage_log log = base_log();
  log.header["format-version"] = 99;
  CHECK_FALSE(verify_log(log).ok);
}

TEST_CASE("log serialization: byte-stable round trip") {
  const lineage_log log = base_log();
  const std::string text = serialize_log(log);
  const lineage_log back = parse_log(text);
  CHECK(serialize_log(back) == text);
  CHECK(back.header == log.header);
  CHECK(back.events.size() == log.events.size());
}

TEST_CASE("log parsing: wall-clock fields are tolerated and ignored") {
  lineage_log log = base_log();
  std::string text = serialize_log(log);
  // A third party stamped an event; equality semantics must not change.
  json stamped = log.events[1].to_json();
  stamped["payload"]["ts"] = "2031-01-01T00:00:00Z";
  std::string tampered;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    tampered += (line_no == 2) ? stamped.dump() : line;
    tampered += '\n';
    ++line_no;
  }
  const lineage_log back = parse_log(tampered);
  CHECK(back.events[1].payload == log.events[1].payload);
}

namespace {

json replay_config(std::uint64_t seed) {
  return json{
      {"domain",
       json{{"id", "d2"},
            {"family", "gridworld"},
            {"env-id", "grid2"},
            {"params", testsupport::grid2().to_params()},
            {"clauses",
             json::array(
                 {json{{"goal", json{{"atoms", json::array()}}},
                       {"measure", "neg-remaining-manhattan"}},
                  json{{"goal",
                        json{{"atoms", json::array({json{{"name", "reach-target"},
                                                         {"params", json::object()}}})}}},
                       {"measure", "neg-steps"}}})}}},
      {"initial-genome", json{{"preset", "stay-put"}}},
      {"optimizer",
       json{{"strategy", "hill-climb"},
            {"mutation-budget", 2},
            {"proposals-per-generation", 12},
            {"rng-seed", 0}}},
      {"antagonist",
       json{{"search-strategy", "mutation-search"},
            {"hardness-objective", "minimize-system-fitness"},
            {"candidates-per-round", 2},
            {"rng-seed", 0}}},
      {"schedule",
       json{{"off-site-border", 0},
            {"phases", json::array({json{{"name", "only"}, {"budget", 2},
                                         {"generations", 4}}})}}},
      {"root-seed", seed}};
}

lineage_log recorded_run(std::uint64_t seed) {
  const run_setup rs = load_run_config(replay_config(seed));
  recording_sink sink(rs.snapshot, rs.root_seed, nullptr);
  run_configured(rs, sink);
  return sink.log();
}

}  // namespace

TEST_CASE("replay: a zero-generation run reconstructs to one system version") {
  json cfg = replay_config(3);
  cfg["schedule"]["phases"][0]["generations"] = 0;
  const run_setup rs = load_run_config(cfg);
  recording_sink sink(rs.snapshot, rs.root_seed, nullptr);
  const coevolution_run original = run_configured(rs, sink);
  const coevolution_run back = replay(sink.log());
  CHECK(back.systems.size() == 1);
  CHECK(back.to_json() == original.to_json());
}

TEST_CASE("replay: reconstruction is exact for a recorded run") {
  const run_setup rs = load_run_config(replay_config(8));
  recording_sink sink(rs.snapshot, rs.root_seed, nullptr);
  const coevolution_run original = run_configured(rs, sink);
  CHECK(replay(sink.log()).to_json() == original.to_json());
}

TEST_CASE("replay: any flipped verdict or fitness bit is a corruption error") {
  lineage_log log = recorded_run(8);

  SUBCASE("flip a candidate acceptability flag") {
    for (auto& e : log.events) {
      if (e.kind == "candidate-evaluated") {
        e.payload["acceptable"] = !e.payload["acceptable"].get<bool>();
        break;
      }
    }
    CHECK_THROWS_AS(replay(log), corruption_error);
  }
  SUBCASE("flip a scenario goal bit") {
    for (auto& e : log.events) {
      if (e.kind == "scenario-added") {
        e.payload["scenario"]["g"] = !e.payload["scenario"]["g"].get<bool>();
        break;
      }
    }
    CHECK_THROWS_AS(replay(log), corruption_error);
  }
  SUBCASE("nudge a fitness payload") {
    bool touched = false;
    for (auto& e : log.events) {
      if (e.kind == "scenario-added" && !touched) {
        auto num = e.payload["scenario"]["f"]["values"][0]["num"].get<std::int64_t>();
        e.payload["scenario"]["f"]["values"][0]["num"] = num - 1;
        touched = true;
      }
    }
    REQUIRE(touched);
    CHECK_THROWS_AS(replay(log), corruption_error);
  }
  SUBCASE("truncate the tail") {
    log.events.pop_back();
    log.events.pop_back();
    CHECK_THROWS_AS(replay(log), corruption_error);
  }
  SUBCASE("tamper with the embedded config") {
    log.events[0].payload["config"]["root-seed"] = 999;
    CHECK_THROWS_AS(replay(log), corruption_error);
  }
}

TEST_CASE("replay: foreign format versions are version errors") {
  lineage_log log = recorded_run(8);
  log.header["format-version"] = 2;
  CHECK_THROWS_AS(replay(log), version_error);
}

TEST_CASE("log files: write, read back, byte-identical") {
  const lineage_log log = recorded_run(4);
  const auto path = std::filesystem::temp_directory_path() / "scedeco-test-log.jsonl";
  write_log_file(path, log);
  const lineage_log back = read_log_file(path);
  CHECK(serialize_log(back) == serialize_log(log));
  std::filesystem::remove(path);
}

TEST_CASE("log files: missing file is an io error") {
  CHECK_THROWS_AS(read_log_file("/nonexistent/nowhere.jsonl"), io_error);
}
