#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scedeco/record.hpp"

namespace scedeco {

inline constexpr std::int64_t lineage_format_version = 1;

// One entry of the development record. Payload fields are kind-specific;
// an optional "ts" wall-clock field is tolerated on parse and excluded
// from all equality and determinism checks (the engine never writes one).
struct lineage_event {
  std::uint64_t seq = 0;
  std::string kind;
  json payload;

  json to_json() const;
  static lineage_event from_json(const json& j);
};

bool known_event_kind(const std::string& kind);

// Append-only event record of an entire run. Appending revalidates the
// sequence discipline and referential integrity, so a log held in memory
// is structurally sound by construction.
struct lineage_log {
  json header;  // config-digest, format-version, root-seed
  std::vector<lineage_event> events;

  static json make_header(const json& config, std::uint64_t root_seed);

  // Ids introduced so far, maintained by append_event for reference checks.
  std::set<std::string> known_systems;
  std::set<std::string> known_suites;
  std::set<std::string> known_scenarios;
};

// Write-ahead append: validates seq contiguity, event ordering, and that
// every referenced id was introduced by an earlier event.
lineage_log append_event(lineage_log log, lineage_event event);

struct log_check {
  bool ok = true;
  bool truncated = false;  // no run-end; aborted-run logs are legal
  std::string violation;
  std::optional<std::uint64_t> seq;
};

// Structural verification: header shape, seq contiguity, kind ordering,
// referential integrity, and that scenario updates never soften.
log_check verify_log(const lineage_log& log);

// JSON Lines serialization, header as line 0, canonical key order.
std::string serialize_log(const lineage_log& log);
lineage_log parse_log(const std::string& text);
lineage_log read_log_file(const std::filesystem::path& path);
void write_log_file(const std::filesystem::path& path, const lineage_log& log);

// Where run events go while the engine executes. The recording sink keeps
// the log in memory (optionally teeing each line to a stream, flushed
// before the engine proceeds); the verifying sink checks each emitted
// event against an existing log and is the tamper detector behind replay.
class event_sink {
 public:
  virtual ~event_sink() = default;
  virtual void emit(const std::string& kind, const json& payload) = 0;
};

class recording_sink : public event_sink {
 public:
  recording_sink(const json& config, std::uint64_t root_seed, std::ostream* tee);

  void emit(const std::string& kind, const json& payload) override;
  const lineage_log& log() const { return log_; }

 private:
  lineage_log log_;
  std::ostream* tee_ = nullptr;
};

class verifying_sink : public event_sink {
 public:
  explicit verifying_sink(const lineage_log& expected);

  void emit(const std::string& kind, const json& payload) override;
  // All logged events consumed; a short log is as corrupt as a wrong one.
  void finish() const;

 private:
  const lineage_log& expected_;
  std::size_t next_ = 0;
};

}  // namespace scedeco
