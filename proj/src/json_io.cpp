#include "hpoly/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hpoly/errors.hpp"

namespace hpoly {

namespace {

std::string node_name(int s) { return "s" + std::to_string(s); }

const char* violation_kind_name(SmoothnessViolation::Kind k) {
  switch (k) {
    case SmoothnessViolation::Kind::nonunique_noncommuting_node:
      return "nonunique_noncommuting_node";
    case SmoothnessViolation::Kind::component_not_a_chain:
      return "component_not_a_chain";
    case SmoothnessViolation::Kind::attachment_not_terminal:
      return "attachment_not_terminal";
    case SmoothnessViolation::Kind::component_multiply_attached:
      return "component_multiply_attached";
    case SmoothnessViolation::Kind::component_unattached:
      return "component_unattached";
  }
  return "unknown";
}

int int_from_key(const std::string& key, const char* what) {
  if (key.empty()) throw invalid_input_error(std::string(what) + ": empty key");
  for (char c : key)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw invalid_input_error(std::string(what) + ": bad key '" + key + "'");
  return std::stoi(key);
}

}  // namespace

json bigint_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
      throw invalid_input_error("bad integer literal '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw invalid_input_error("bad integer literal '" + s + "'");
    return BigInt(s);
  }
  throw invalid_input_error("expected an integer or a decimal string");
}

json poly_to_json(const IntPoly& p) {
  json coeffs = json::object();
  for (const auto& [e, v] : p.coeffs())
    coeffs[std::to_string(e)] = bigint_to_json(v);
  return json{{"var", "t"}, {"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw invalid_input_error("polynomial JSON needs a 'coeffs' object");
  IntPoly::CoeffMap m;
  for (const auto& [key, value] : j["coeffs"].items())
    m[int_from_key(key, "polynomial exponent")] = bigint_from_json(value);
  return IntPoly(std::move(m));
}

json poly2_to_json(const IntPoly2& p) {
  json coeffs = json::object();
  for (const auto& [e, v] : p.coeffs()) {
    const std::string key =
        std::to_string(e.first) + "," + std::to_string(e.second);
    coeffs[key] = bigint_to_json(v);
  }
  return json{{"vars", json::array({"t1", "t2"})},
              {"coeffs", std::move(coeffs)}};
}

IntPoly2 poly2_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw invalid_input_error("polynomial JSON needs a 'coeffs' object");
  IntPoly2 p;
  for (const auto& [key, value] : j["coeffs"].items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw invalid_input_error("bad exponent pair '" + key + "'");
    const int e1 = int_from_key(key.substr(0, comma), "first exponent");
    const int e2 = int_from_key(key.substr(comma + 1), "second exponent");
    p += IntPoly2::monomial(bigint_from_json(value), e1, e2);
  }
  return p;
}

json node_set_to_json(const NodeSet& J) {
  json a = json::array();
  for (int s : J) a.push_back(node_name(s));
  return a;
}

json element_to_json(const WeylElt& w) {
  json images = json::array();
  for (int s = 1; s <= w.rank(); ++s) {
    json col = json::array();
    for (int c : w.image_of_simple(s)) col.push_back(c);
    images.push_back(std::move(col));
  }
  return json{{"word", w.word_str()},
              {"length", w.length()},
              {"images", std::move(images)}};
}

json quotient_to_json(const ParabolicQuotient& q) {
  json elements = json::array();
  for (const WeylElt& w : q.elements) elements.push_back(element_to_json(w));
  json histogram = json::array();
  for (std::size_t c : q.length_histogram)
    histogram.push_back(static_cast<std::uint64_t>(c));
  return json{{"type", q.elements.front().root_system().type().str()},
              {"J", node_set_to_json(q.J)},
              {"size", static_cast<std::uint64_t>(q.size())},
              {"length_histogram", std::move(histogram)},
              {"elements", std::move(elements)}};
}

json descent_to_json(const DescentSystem& ds, const AugmentedPoset& poset) {
  json classes = json::object();
  for (const auto& [s, members] : ds.classes) {
    json words = json::array();
    for (const WeylElt& r : members) words.push_back(r.word_str());
    classes[node_name(s)] = std::move(words);
  }
  json delta = json::object();
  for (const auto& [s, d] : ds.delta) delta[node_name(s)] = d;
  json elements = json::array();
  for (std::size_t i = 0; i < ds.quotient.elements.size(); ++i) {
    const WeylElt& w = ds.quotient.elements[i];
    json nu = json::object();
    for (const auto& [s, count] : poset.nu_s[i]) nu[node_name(s)] = count;
    json ascents = json::array();
    for (const auto& [s, idx] : poset.ascents[i])
      ascents.push_back(
          ds.classes.at(s)[static_cast<std::size_t>(idx)].word_str());
    elements.push_back(json{{"word", w.word_str()},
                            {"length", w.length()},
                            {"nu", std::move(nu)},
                            {"nu_plain", poset.nu_plain[i]},
                            {"nu_weighted", poset.nu_weighted[i]},
                            {"ascents", std::move(ascents)}});
  }
  json out{{"type", ds.rs.type().str()},
           {"J", node_set_to_json(ds.J)},
           {"reflection_count",
            static_cast<std::uint64_t>(ds.reflection_count())},
           {"classes", std::move(classes)},
           {"delta", std::move(delta)},
           {"elements", std::move(elements)}};
  if (ds.classes.size() == 2)
    out["two_variable_euler"] = poly2_to_json(two_variable_euler(ds));
  return out;
}

json verdict_to_json(const SmoothnessVerdict& v) {
  json violations = json::array();
  for (const SmoothnessViolation& viol : v.violations) {
    json entry{{"kind", violation_kind_name(viol.kind)}};
    entry["s"] = viol.s > 0 ? json(node_name(viol.s)) : json(nullptr);
    entry["component"] = node_set_to_json(viol.component);
    entry["message"] = viol.message;
    violations.push_back(std::move(entry));
  }
  return json{{"smooth", v.smooth}, {"violations", std::move(violations)}};
}

json report_to_json(const HPolyReport& r) {
  return json{{"h", poly_to_json(r.h)},
              {"poincare", poly_to_json(r.poincare)},
              {"factor_cells", poly_to_json(r.factor_cells)},
              {"factor_base", poly_to_json(r.factor_base)},
              {"euler_characteristic", bigint_to_json(r.euler_characteristic)},
              {"dimension", r.dimension},
              {"has_negative_coefficient", r.has_negative_coefficient}};
}

namespace {

json profile_to_json(const OrbitProfile& p) {
  json matrix = json::array();
  for (int i = 0; i < p.rep.n; ++i) {
    json row = json::array();
    for (int j = 0; j < p.rep.n; ++j) row.push_back(p.rep.at(i, j));
    matrix.push_back(std::move(row));
  }
  json sizes = json::object();
  for (const auto& [q, size] : p.orbit_size)
    sizes[std::to_string(q)] = size;
  json out{{"matrix", std::move(matrix)},
           {"rank", p.rank},
           {"orbit_sizes", std::move(sizes)}};
  if (p.a >= 0 && p.b >= 0) {
    out["a"] = p.a;
    out["b"] = p.b;
  }
  return out;
}

}  // namespace

json orbit_profiles_to_json(int n, const std::vector<OrbitProfile>& profiles) {
  json reps = json::array();
  for (const OrbitProfile& p : profiles) reps.push_back(profile_to_json(p));
  return json{{"n", n},
              {"representative_count",
               static_cast<std::uint64_t>(profiles.size())},
              {"representatives", std::move(reps)}};
}

json orbit_report_to_json(const MonoidOrbitReport& r) {
  json out = orbit_profiles_to_json(r.n, r.profiles);
  out["h"] = poly_to_json(r.h);
  return out;
}

}  // namespace hpoly
