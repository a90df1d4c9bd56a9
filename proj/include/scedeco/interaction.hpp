#pragma once

#include <functional>
#include <string>

#include "scedeco/record.hpp"
#include "scedeco/trace.hpp"

namespace scedeco {

// Selects one component's slice of a joint state: every "<prefix>.field"
// entry, re-keyed to "field".
struct state_projection {
  std::string prefix;

  field_map apply(const field_map& joint) const;
};

// A pure relation over two projected component states, checked pointwise
// along a composite trace.
struct interaction_relation {
  std::string name;
  state_projection first;
  state_projection second;
  std::function<bool(const field_map&, const field_map&)> holds;
};

// True iff the relation holds between the projected states at every step
// of the trace. Vacuously true on an empty trace.
bool interacts(const trace& t, const interaction_relation& r);

// Components never occupy the same (x, y) cell.
interaction_relation never_share_cell(std::string first_prefix, std::string second_prefix);

// Trivial relation, holds everywhere.
interaction_relation always_related(std::string first_prefix, std::string second_prefix);

}  // namespace scedeco
