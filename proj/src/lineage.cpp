#include "scedeco/lineage.hpp"

#include <sstream>

#include "scedeco/errors.hpp"
#include "scedeco/fitness.hpp"

namespace scedeco {

namespace {

const char* const event_kinds[] = {
    "run-start",        "phase-start",      "candidate-evaluated",
    "candidate-accepted", "scenario-added", "scenario-updated",
    "cooldown-advanced", "validation",      "run-end",
};

json strip_wall_clock(json j) {
  j.erase("ts");
  return j;
}

// Shared reference/ordering validation used by both the appender and the
// standalone verifier. Throws integrity_error on violation.
struct integrity_state {
  bool saw_run_start = false;
  bool saw_run_end = false;
  std::set<std::string> systems;
  std::set<std::string> suites;
  std::set<std::string> scenarios;
  // Latest (g, f) per scenario for the softening check.
  std::map<std::string, std::pair<bool, fitness_value>> hardness;

  void admit(const lineage_event& e) {
    if (!known_event_kind(e.kind)) {
      throw integrity_error("unknown event kind: " + e.kind);
    }
    if (saw_run_end) throw integrity_error("event after run-end");
    if (!saw_run_start) {
      if (e.kind != "run-start") throw integrity_error("first event must be run-start");
      saw_run_start = true;
      systems.insert(e.payload.at("initial-system").get<std::string>());
      return;
    }
    if (e.kind == "run-start") throw integrity_error("duplicate run-start");
    if (e.kind == "run-end") {
      saw_run_end = true;
      return;
    }
    if (e.kind == "phase-start") {
      suites.insert(e.payload.at("suite").get<std::string>());
    } else if (e.kind == "scenario-added") {
      require_suite(e.payload.at("suite").get<std::string>());
      const json& sc = e.payload.at("scenario");
      const std::string id = sc.at("id").get<std::string>();
      scenarios.insert(id);
      hardness.insert_or_assign(id, std::make_pair(sc.at("g").get<bool>(), fitness_value::from_json(sc.at("f"))));
    } else if (e.kind == "scenario-updated") {
      require_suite(e.payload.at("suite").get<std::string>());
      const std::string id = e.payload.at("scenario").get<std::string>();
      if (scenarios.count(id) == 0) {
        throw integrity_error("scenario-updated references unknown scenario " + id);
      }
      const bool new_g = e.payload.at("g").get<bool>();
      const fitness_value new_f = fitness_value::from_json(e.payload.at("f"));
      const auto& [old_g, old_f] = hardness.at(id);
      if ((old_g && !new_g) || !fitness_leq(old_f, new_f)) {
        throw integrity_error("softening update of scenario " + id);
      }
      hardness.insert_or_assign(id, std::make_pair(new_g, new_f));
    } else if (e.kind == "candidate-accepted") {
      const std::string parent = e.payload.at("parent").get<std::string>();
      if (systems.count(parent) == 0) {
        throw integrity_error("candidate-accepted references unknown parent " + parent);
      }
      systems.insert(e.payload.at("child").get<std::string>());
    }
  }

  void require_suite(const std::string& id) const {
    if (suites.count(id) == 0) {
      throw integrity_error("event references unknown suite " + id);
    }
  }
};

}  // namespace

bool known_event_kind(const std::string& kind) {
  for (const char* k : event_kinds) {
    if (kind == k) return true;
  }
  return false;
}

json lineage_event::to_json() const {
  return json{{"kind", kind}, {"payload", payload}, {"seq", seq}};
}

lineage_event lineage_event::from_json(const json& j) {
  lineage_event e;
  e.seq = j.at("seq").get<std::uint64_t>();
  e.kind = j.at("kind").get<std::string>();
  e.payload = strip_wall_clock(j.at("payload"));
  return e;
}

json lineage_log::make_header(const json& config, std::uint64_t root_seed) {
  return json{{"config-digest", digest_of_json(config)},
              {"format-version", lineage_format_version},
              {"root-seed", root_seed}};
}

lineage_log append_event(lineage_log log, lineage_event event) {
  if (event.seq != log.events.size()) {
    throw integrity_error("event seq " + std::to_string(event.seq) +
                          " does not continue the log (expected " +
                          std::to_string(log.events.size()) + ")");
  }
  integrity_state state;
  state.systems = log.known_systems;
  state.suites = log.known_suites;
  state.scenarios = log.known_scenarios;
  state.saw_run_start = !log.events.empty();
  state.saw_run_end = !log.events.empty() && log.events.back().kind == "run-end";
  // Hardness history is not carried incrementally; softening across the
  // whole log is verify_log's job. Here we only check what one event can
  // violate locally.
  if (event.kind == "scenario-updated") {
    const std::string id = event.payload.at("scenario").get<std::string>();
    bool found = false;
    for (auto it = log.events.rbegin(); it != log.events.rend(); ++it) {
      if (it->kind == "scenario-added" &&
          it->payload.at("scenario").at("id").get<std::string>() == id) {
        state.hardness.insert_or_assign(
            id, std::make_pair(it->payload.at("scenario").at("g").get<bool>(),
                               fitness_value::from_json(
                                   it->payload.at("scenario").at("f"))));
        found = true;
        break;
      }
      if (it->kind == "scenario-updated" &&
          it->payload.at("scenario").get<std::string>() == id) {
        state.hardness.insert_or_assign(
            id, std::make_pair(it->payload.at("g").get<bool>(),
                               fitness_value::from_json(it->payload.at("f"))));
        found = true;
        break;
      }
    }
    if (!found) {
      throw integrity_error("scenario-updated references unknown scenario " + id);
    }
  }
  state.admit(event);
  log.known_systems = std::move(state.systems);
  log.known_suites = std::move(state.suites);
  log.known_scenarios = std::move(state.scenarios);
  log.events.push_back(std::move(event));
  return log;
}

log_check verify_log(const lineage_log& log) {
  log_check check;
  if (!log.header.contains("format-version") ||
      log.header.at("format-version").get<std::int64_t>() != lineage_format_version) {
    return log_check{false, false, "unsupported or missing format version", 0};
  }
  if (!log.header.contains("config-digest") || !log.header.contains("root-seed")) {
    return log_check{false, false, "header missing config-digest or root-seed", 0};
  }
  integrity_state state;
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const lineage_event& e = log.events[i];
    if (e.seq != i) {
      return log_check{false, false,
                       "seq gap at event " + std::to_string(i) + " (seq " +
                           std::to_string(e.seq) + ")",
                       e.seq};
    }
    try {
      state.admit(e);
    } catch (const error& err) {
      return log_check{false, false, err.what(), e.seq};
    }
  }
  if (log.events.empty()) {
    return log_check{false, false, "log has no events", std::nullopt};
  }
  check.truncated = !state.saw_run_end;
  return check;
}

std::string serialize_log(const lineage_log& log) {
  std::string out = log.header.dump();
  out += '\n';
  for (const auto& e : log.events) {
    out += e.to_json().dump();
    out += '\n';
  }
  return out;
}

lineage_log parse_log(const std::string& text) {
  lineage_log log;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw integrity_error("log line " + std::to_string(line_no) +
                            " is not valid JSON: " + e.what());
    }
    if (first) {
      log.header = j;
      first = false;
    } else {
      log.events.push_back(lineage_event::from_json(j));
    }
  }
  if (first) throw integrity_error("log is empty");
  return log;
}

lineage_log read_log_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read log file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_log(buffer.str());
}

void write_log_file(const std::filesystem::path& path, const lineage_log& log) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write log file: " + tmp.string());
    out << serialize_log(log);
    out.flush();
    if (!out) throw io_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("atomic rename failed: " + ec.message());
}

recording_sink::recording_sink(const json& config, std::uint64_t root_seed,
                               std::ostream* tee)
    : tee_(tee) {
  log_.header = lineage_log::make_header(config, root_seed);
  if (tee_ != nullptr) {
    *tee_ << log_.header.dump() << '\n';
    tee_->flush();
  }
}

void recording_sink::emit(const std::string& kind, const json& payload) {
  lineage_event e;
  e.seq = log_.events.size();
  e.kind = kind;
  e.payload = payload;
  log_ = append_event(std::move(log_), e);
  if (tee_ != nullptr) {
    // Write-ahead: the line is on its way to disk before the engine moves on.
    *tee_ << e.to_json().dump() << '\n';
    tee_->flush();
  }
}

verifying_sink::verifying_sink(const lineage_log& expected) : expected_(expected) {}

void verifying_sink::emit(const std::string& kind, const json& payload) {
  if (next_ >= expected_.events.size()) {
    throw corruption_error("replay produced more events than the log records (at " +
                           kind + ")");
  }
  const lineage_event& logged = expected_.events[next_];
  if (logged.kind != kind || logged.payload != payload) {
    throw corruption_error(
        "replay diverged at seq " + std::to_string(logged.seq) + ": recorded " +
        logged.kind + ", recomputed " + kind);
  }
  ++next_;
}

void verifying_sink::finish() const {
  if (next_ != expected_.events.size()) {
    throw corruption_error("log records more events than replay produced (" +
                           std::to_string(expected_.events.size() - next_) +
                           " unconsumed)");
  }
}

}  // namespace scedeco
