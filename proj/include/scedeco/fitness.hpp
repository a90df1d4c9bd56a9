#pragma once

#include <string>
#include <vector>

#include "scedeco/errors.hpp"
#include "scedeco/rational.hpp"
#include "scedeco/record.hpp"

namespace scedeco {

// Result of comparing two fitness values under the fitness preorder.
// Larger is better everywhere in the engine.
enum class ordering { less, equal, greater, incomparable };

std::string to_string(ordering o);

// Exact fitness value. Scalars are totally ordered; lexicographic tuples
// are declared partially ordered (tuples of different lengths do not
// compare), which is what blocks pointwise-max composition on them.
class fitness_value {
 public:
  enum class kind_t { scalar, lexicographic };

  static fitness_value scalar(rational v) { return fitness_value(kind_t::scalar, {v}); }
  static fitness_value lexicographic(std::vector<rational> vs) {
    return fitness_value(kind_t::lexicographic, std::move(vs));
  }

  kind_t kind() const { return kind_; }
  const std::vector<rational>& values() const { return values_; }

  // Scalar payload accessor; only meaningful for scalar kind.
  const rational& as_scalar() const;

  bool totally_ordered_kind() const { return kind_ == kind_t::scalar; }

  friend bool operator==(const fitness_value& a, const fitness_value& b) {
    return a.kind_ == b.kind_ && a.values_ == b.values_;
  }

  json to_json() const;
  static fitness_value from_json(const json& j);

 private:
  fitness_value(kind_t kind, std::vector<rational> values)
      : kind_(kind), values_(std::move(values)) {}

  kind_t kind_ = kind_t::scalar;
  std::vector<rational> values_;
};

// The fitness preorder. Scalars never return incomparable; lexicographic
// tuples of different lengths do. Mixing kinds is a caller bug.
ordering compare(const fitness_value& a, const fitness_value& b);

// True iff a ⪯ b, i.e. compare(a, b) is less or equal.
bool fitness_leq(const fitness_value& a, const fitness_value& b);

}  // namespace scedeco
