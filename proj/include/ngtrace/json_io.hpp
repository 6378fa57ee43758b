#pragma once

// JSON shapes for every instance type:
//   semigroup      {"generators":[7,8,9,10]}
//   relative ideal {"base":{"generators":[...]},"generators":[...]}
//   instance       {"generators":[...],"order":[...],"m":[...],"ell":[...]}
//   deformation    the instance keys plus "I":[...], "J":[...]
//   matrix         row-major list of polynomial strings

#include <json.hpp>

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ngtrace/determinantal.hpp"
#include "ngtrace/higher_dim.hpp"
#include "ngtrace/poly_parse.hpp"
#include "ngtrace/relative_ideal.hpp"

namespace ngtrace {

using json = nlohmann::json;

namespace detail {

inline std::vector<Int> int_list(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_array()) throw InvalidInput(std::string("\"") + key + "\" must be an array");
  std::vector<Int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InvalidInput(std::string("\"") + key + "\" must hold integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

inline std::set<std::size_t> label_set(const json& j, const char* key) {
  std::set<std::size_t> out;
  if (!j.contains(key)) return out;
  for (Int v : int_list(j, key)) {
    if (v < 1) throw InvalidInput(std::string("\"") + key + "\" labels are 1-based");
    out.insert(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace detail

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline json to_json(const NumericalSemigroup& h) { return {{"generators", h.generators()}}; }

inline json to_json(const RelativeIdeal& e) {
  return {{"base", to_json(e.base())}, {"generators", e.generators()}};
}

inline json to_json(const DeterminantalInstance& inst) {
  return {{"generators", inst.semigroup().generators()},
          {"order", inst.order()},
          {"m", inst.m()},
          {"ell", inst.ell()}};
}

inline json to_json(const HigherDimInstance& hd) {
  json j = to_json(hd.base());
  j["I"] = std::vector<std::size_t>(hd.I().begin(), hd.I().end());
  j["J"] = std::vector<std::size_t>(hd.J().begin(), hd.J().end());
  return j;
}

inline json to_json(const PolyMatrix& mat) {
  json rows = json::array();
  for (const auto& row : mat) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.to_string());
    rows.push_back(r);
  }
  return rows;
}

inline NumericalSemigroup semigroup_from_json(const json& j) {
  return NumericalSemigroup(detail::int_list(j, "generators"));
}

inline RelativeIdeal relative_ideal_from_json(const json& j) {
  if (!j.contains("base")) throw InvalidInput("missing key \"base\"");
  auto base = std::make_shared<const NumericalSemigroup>(semigroup_from_json(j.at("base")));
  return RelativeIdeal::from_generators(base, detail::int_list(j, "generators"));
}

/// Validates the presentation; "generators" may be omitted, in which case
/// the semigroup is generated by "order".
inline DeterminantalInstance instance_from_json(const json& j,
                                                const DeterminantalOptions& options = {}) {
  auto order = detail::int_list(j, "order");
  auto gens = j.contains("generators") ? detail::int_list(j, "generators") : order;
  auto h = std::make_shared<const NumericalSemigroup>(std::move(gens));
  return build(h, order, detail::int_list(j, "m"), detail::int_list(j, "ell"), options);
}

inline HigherDimInstance higher_from_json(const json& j, const DeterminantalOptions& options = {}) {
  return HigherDimInstance(instance_from_json(j, options), detail::label_set(j, "I"),
                           detail::label_set(j, "J"));
}

inline PolyMatrix matrix_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_array()) throw InvalidInput("a matrix is a list of rows");
  PolyMatrix out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput("a matrix row is a list of polynomial strings");
    std::vector<Polynomial> r;
    for (const auto& s : row) {
      if (!s.is_string()) throw InvalidInput("matrix entries are polynomial strings");
      r.push_back(parse_polynomial(ring, s.get<std::string>()));
    }
    if (!out.empty() && r.size() != out.front().size()) throw InvalidInput("ragged matrix");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ngtrace
