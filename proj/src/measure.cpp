#include "scedeco/measure.hpp"

#include "scedeco/errors.hpp"

namespace scedeco {

fitness_measure max_measure(const fitness_measure& a, const fitness_measure& b) {
  if (a.kind != fitness_value::kind_t::scalar ||
      b.kind != fitness_value::kind_t::scalar) {
    throw max_undefined_error("max requires a totally ordered fitness kind");
  }
  fitness_measure m;
  m.name = "max(" + a.name + "," + b.name + ")";
  m.kind = fitness_value::kind_t::scalar;
  m.eval = [ea = a.eval, eb = b.eval](const trace& t) {
    const fitness_value va = ea(t);
    const fitness_value vb = eb(t);
    return compare(va, vb) == ordering::less ? vb : va;
  };
  return m;
}

}  // namespace scedeco
