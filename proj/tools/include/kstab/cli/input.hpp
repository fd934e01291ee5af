#pragma once

// Input documents:
//   {"name": str, "rays": [[int,...],...], "coeffs": ["p/q",...]?}
//   {"name": str, "moment_polytope": {"vertices": [["p/q",...],...]}}
//   {"name": str, "moment_polytope": {"constraints": [{"normal": [int,...], "offset": "p/q"},...]}}
//   WeightedPoint: {"weights": [[int,...],...], "support": [int,...], "coords": ["p/q",...]?}

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kstab/exactgeom.hpp"
#include "kstab/limits.hpp"
#include "kstab/stability.hpp"

namespace kstab::cli {

struct FanInput {
  std::vector<VecQ> rays;
  std::vector<Rational> coeffs;
};

struct PolytopeInput {
  std::vector<VecQ> vertices;
  std::vector<HalfSpace> constraints;  // used when vertices is empty
};

struct InputSpec {
  std::string name;
  std::variant<FanInput, PolytopeInput> data;
};

InputSpec parse_input(const nlohmann::json& doc);

/// A file holds one input document or an array of them.
std::vector<InputSpec> load_inputs(const std::filesystem::path& path);

StabilityContext make_context(const InputSpec& spec);

nlohmann::ordered_json to_json(const InputSpec& spec);

WeightedPoint parse_weighted_point(const nlohmann::json& doc);
WeightedPoint load_weighted_point(const std::filesystem::path& path);

/// "a,b,c" with integer or p/q entries.
VecQ parse_direction(const std::string& text);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace kstab::cli
