#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "scedeco/errors.hpp"
#include "scedeco/rng.hpp"

namespace scedeco {

// All serialized state goes through nlohmann::json with its default
// std::map object storage: keys come out sorted, so dump() is canonical
// and exports/logs are byte-stable across platforms.
using json = nlohmann::json;

// Flat named-integer record used for situations, actions, and terminal
// summaries. std::map keeps iteration (and serialization) canonical.
using field_map = std::map<std::string, std::int64_t>;

inline json to_json(const field_map& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

inline field_map field_map_from_json(const json& j) {
  field_map m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    m[it.key()] = it.value().get<std::int64_t>();
  }
  return m;
}

inline std::int64_t field_of(const field_map& m, const std::string& key) {
  const auto it = m.find(key);
  if (it == m.end()) throw registry_error("missing field: " + key);
  return it->second;
}

inline std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

inline std::string digest_of_json(const json& j) {
  return digest_hex(fnv1a(j.dump()));
}

}  // namespace scedeco
