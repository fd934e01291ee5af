#include "kstab/cli/input.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kstab/errors.hpp"

namespace kstab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidInput("field '" + field + "': " + what);
}

Rational rational_field(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(field, "expected a \"p/q\" string");
}

VecQ integer_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of integers");
  VecQ v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(field, "entries must be integers");
    v.emplace_back(x.get<long>());
  }
  return v;
}

VecQ rational_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array");
  VecQ v;
  for (const auto& x : j) v.push_back(rational_field(x, field));
  return v;
}

}  // namespace

InputSpec parse_input(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("input document must be an object");
  InputSpec spec;
  if (!doc.contains("name") || !doc["name"].is_string() || doc["name"].get<std::string>().empty())
    fail("name", "required nonempty string");
  spec.name = doc["name"].get<std::string>();

  const bool has_rays = doc.contains("rays");
  const bool has_poly = doc.contains("moment_polytope");
  if (has_rays == has_poly) throw InvalidInput("exactly one of 'rays' or 'moment_polytope' is required");

  if (has_rays) {
    FanInput fan;
    const auto& rays = doc["rays"];
    if (!rays.is_array() || rays.empty()) fail("rays", "expected a nonempty array of integer vectors");
    for (const auto& r : rays) fan.rays.push_back(integer_vector(r, "rays"));
    if (doc.contains("coeffs")) {
      const auto& cs = doc["coeffs"];
      if (!cs.is_array()) fail("coeffs", "expected an array of \"p/q\" strings");
      for (const auto& c : cs) fan.coeffs.push_back(rational_field(c, "coeffs"));
      if (fan.coeffs.size() != fan.rays.size()) fail("coeffs", "length differs from 'rays'");
      for (const auto& c : fan.coeffs) {
        if (c >= 1) fail("coeffs", "coefficient must be < 1");
        if (sgn(c) < 0) fail("coeffs", "coefficient must be >= 0");
      }
    } else {
      fan.coeffs.assign(fan.rays.size(), Rational(0));
    }
    spec.data = std::move(fan);
    return spec;
  }

  const auto& mp = doc["moment_polytope"];
  if (!mp.is_object()) fail("moment_polytope", "expected an object");
  PolytopeInput poly;
  if (mp.contains("vertices") == mp.contains("constraints"))
    fail("moment_polytope", "exactly one of 'vertices' or 'constraints' is required");
  if (mp.contains("vertices")) {
    const auto& vs = mp["vertices"];
    if (!vs.is_array() || vs.empty()) fail("moment_polytope.vertices", "expected a nonempty array");
    for (const auto& v : vs) poly.vertices.push_back(rational_vector(v, "moment_polytope.vertices"));
  } else {
    const auto& cs = mp["constraints"];
    if (!cs.is_array() || cs.empty()) fail("moment_polytope.constraints", "expected a nonempty array");
    for (const auto& c : cs) {
      if (!c.is_object() || !c.contains("normal") || !c.contains("offset"))
        fail("moment_polytope.constraints", "each entry needs 'normal' and 'offset'");
      poly.constraints.push_back({integer_vector(c["normal"], "moment_polytope.constraints.normal"),
                                  rational_field(c["offset"], "moment_polytope.constraints.offset")});
    }
  }
  spec.data = std::move(poly);
  return spec;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::vector<InputSpec> load_inputs(const std::filesystem::path& path) {
  auto doc = read_json_file(path);
  std::vector<InputSpec> out;
  if (doc.is_array()) {
    for (const auto& d : doc) out.push_back(parse_input(d));
  } else {
    out.push_back(parse_input(doc));
  }
  return out;
}

StabilityContext make_context(const InputSpec& spec) {
  if (const auto* fan = std::get_if<FanInput>(&spec.data)) return StabilityContext::from_fan(fan->rays, fan->coeffs);
  const auto& poly = std::get<PolytopeInput>(spec.data);
  if (!poly.vertices.empty()) {
    const std::size_t d = poly.vertices.front().size();
    for (const auto& v : poly.vertices)
      if (v.size() != d) fail("moment_polytope.vertices", "inconsistent dimensions");
    return StabilityContext::from_polytope(VPolytope{d, affine_dimension(poly.vertices), poly.vertices});
  }
  const std::size_t d = poly.constraints.front().normal.size();
  for (const auto& c : poly.constraints)
    if (c.normal.size() != d) fail("moment_polytope.constraints", "inconsistent dimensions");
  return StabilityContext::from_polytope(vertices_from_facets(HPolytope{d, poly.constraints}));
}

nlohmann::ordered_json to_json(const InputSpec& spec) {
  nlohmann::ordered_json j;
  j["name"] = spec.name;
  if (const auto* fan = std::get_if<FanInput>(&spec.data)) {
    auto rays = nlohmann::ordered_json::array();
    for (const auto& r : fan->rays) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& x : r) row.push_back(x.get_num().get_si());
      rays.push_back(row);
    }
    j["rays"] = rays;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& c : fan->coeffs) cs.push_back(to_string(c));
    j["coeffs"] = cs;
    return j;
  }
  const auto& poly = std::get<PolytopeInput>(spec.data);
  nlohmann::ordered_json mp;
  if (!poly.vertices.empty()) {
    auto vs = nlohmann::ordered_json::array();
    for (const auto& v : poly.vertices) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      vs.push_back(row);
    }
    mp["vertices"] = vs;
  } else {
    auto cs = nlohmann::ordered_json::array();
    for (const auto& c : poly.constraints) {
      auto normal = nlohmann::ordered_json::array();
      for (const auto& x : c.normal) normal.push_back(x.get_num().get_si());
      cs.push_back({{"normal", normal}, {"offset", to_string(c.offset)}});
    }
    mp["constraints"] = cs;
  }
  j["moment_polytope"] = mp;
  return j;
}

WeightedPoint parse_weighted_point(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("weighted point document must be an object");
  if (!doc.contains("weights")) fail("weights", "required");
  if (!doc.contains("support")) fail("support", "required");
  WeightedPoint w;
  const auto& ws = doc["weights"];
  if (!ws.is_array() || ws.empty()) fail("weights", "expected a nonempty array of integer vectors");
  for (const auto& u : ws) w.weights.push_back(integer_vector(u, "weights"));
  const auto& sup = doc["support"];
  if (!sup.is_array()) fail("support", "expected an array of indices");
  for (const auto& i : sup) {
    if (!i.is_number_integer() || i.get<long>() < 0) fail("support", "indices must be nonnegative integers");
    w.support.push_back(i.get<std::size_t>());
  }
  std::sort(w.support.begin(), w.support.end());
  if (doc.contains("coords")) {
    std::vector<Rational> cs;
    for (const auto& c : doc["coords"]) cs.push_back(rational_field(c, "coords"));
    w.coords = std::move(cs);
  }
  try {
    w.validate();
  } catch (const InvalidInput& e) {
    fail("support", e.what());
  }
  return w;
}

WeightedPoint load_weighted_point(const std::filesystem::path& path) {
  return parse_weighted_point(read_json_file(path));
}

VecQ parse_direction(const std::string& text) {
  VecQ v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidInput("field 'v': empty component in '" + text + "'");
    try {
      v.push_back(parse_rational(item.substr(b, e - b + 1)));
    } catch (const InvalidInput& ex) {
      fail("v", ex.what());
    }
  }
  if (v.empty()) fail("v", "empty direction");
  return v;
}

}  // namespace kstab::cli
