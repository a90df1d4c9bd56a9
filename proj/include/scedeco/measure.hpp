#pragma once

#include <functional>
#include <string>

#include "scedeco/fitness.hpp"
#include "scedeco/trace.hpp"

namespace scedeco {

// Deterministic trace -> fitness mapping, larger-is-better. Identity is
// the name: two measures with the same name are the same measure.
struct fitness_measure {
  std::string name;
  fitness_value::kind_t kind = fitness_value::kind_t::scalar;
  std::function<fitness_value(const trace&)> eval;
};

// Pointwise max of two measures, defined only on totally ordered kinds.
fitness_measure max_measure(const fitness_measure& a, const fitness_measure& b);

}  // namespace scedeco
