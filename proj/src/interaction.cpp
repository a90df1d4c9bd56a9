#include "scedeco/interaction.hpp"

#include "scedeco/errors.hpp"

namespace scedeco {

field_map state_projection::apply(const field_map& joint) const {
  field_map out;
  const std::string key_prefix = prefix + ".";
  for (const auto& [k, v] : joint) {
    if (k.rfind(key_prefix, 0) == 0) out[k.substr(key_prefix.size())] = v;
  }
  if (out.empty()) {
    throw projection_error("projection '" + prefix + "' selects no fields");
  }
  return out;
}

bool interacts(const trace& t, const interaction_relation& r) {
  for (const auto& s : t.steps) {
    if (!r.holds(r.first.apply(s.situation), r.second.apply(s.situation))) {
      return false;
    }
  }
  return true;
}

interaction_relation never_share_cell(std::string first_prefix,
                                      std::string second_prefix) {
  interaction_relation r;
  r.name = "never-share-cell";
  r.first = state_projection{std::move(first_prefix)};
  r.second = state_projection{std::move(second_prefix)};
  r.holds = [](const field_map& a, const field_map& b) {
    return !(field_of(a, "x") == field_of(b, "x") &&
             field_of(a, "y") == field_of(b, "y"));
  };
  return r;
}

interaction_relation always_related(std::string first_prefix,
                                    std::string second_prefix) {
  interaction_relation r;
  r.name = "always-related";
  r.first = state_projection{std::move(first_prefix)};
  r.second = state_projection{std::move(second_prefix)};
  r.holds = [](const field_map&, const field_map&) { return true; };
  return r;
}

}  // namespace scedeco
