#include "scedeco/fitness.hpp"

namespace scedeco {

std::string to_string(ordering o) {
  switch (o) {
    case ordering::less: return "less";
    case ordering::equal: return "equal";
    case ordering::greater: return "greater";
    case ordering::incomparable: return "incomparable";
  }
  return "?";
}

const rational& fitness_value::as_scalar() const {
  if (kind_ != kind_t::scalar) throw comparison_error("fitness value is not scalar");
  return values_.front();
}

json fitness_value::to_json() const {
  json vals = json::array();
  for (const auto& v : values_) {
    vals.push_back(json{{"den", v.den()}, {"num", v.num()}});
  }
  return json{{"kind", kind_ == kind_t::scalar ? "scalar" : "lexicographic"},
              {"values", vals}};
}

fitness_value fitness_value::from_json(const json& j) {
  std::vector<rational> vals;
  for (const auto& v : j.at("values")) {
    vals.emplace_back(v.at("num").get<std::int64_t>(), v.at("den").get<std::int64_t>());
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "scalar") {
    if (vals.size() != 1) throw config_error("scalar fitness with payload size != 1");
    return scalar(vals.front());
  }
  if (kind == "lexicographic") return lexicographic(std::move(vals));
  throw config_error("unknown fitness kind: " + kind);
}

ordering compare(const fitness_value& a, const fitness_value& b) {
  if (a.kind() != b.kind()) {
    throw comparison_error("fitness kind mismatch");
  }
  if (a.kind() == fitness_value::kind_t::scalar) {
    const rational& x = a.values().front();
    const rational& y = b.values().front();
    if (x == y) return ordering::equal;
    return x < y ? ordering::less : ordering::greater;
  }
  // Lexicographic tuples compare positionally; length disagreement is the
  // declared-partial part of this kind.
  if (a.values().size() != b.values().size()) return ordering::incomparable;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    if (a.values()[i] == b.values()[i]) continue;
    return a.values()[i] < b.values()[i] ? ordering::less : ordering::greater;
  }
  return ordering::equal;
}

bool fitness_leq(const fitness_value& a, const fitness_value& b) {
  const ordering o = compare(a, b);
  return o == ordering::less || o == ordering::equal;
}

}  // namespace scedeco
