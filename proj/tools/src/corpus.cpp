#include "kstab/cli/corpus.hpp"

#include <string>

#include "kstab/errors.hpp"

namespace kstab::cli {

namespace {

// Rays of complete fans; the moment polytope is {u : <u, rho> >= c - 1}.
constexpr const char* kCorpus = R"json([
  {"name": "P2",            "rays": [[1,0],[0,1],[-1,-1]]},
  {"name": "P1xP1",         "rays": [[1,0],[-1,0],[0,1],[0,-1]]},
  {"name": "P(1,1,2)",      "rays": [[1,0],[0,1],[-1,-2]]},
  {"name": "P(1,1,3)",      "rays": [[1,0],[0,1],[-1,-3]]},
  {"name": "P(1,1,4)",      "rays": [[1,0],[0,1],[-1,-4]]},
  {"name": "P(1,1,5)",      "rays": [[1,0],[0,1],[-1,-5]]},
  {"name": "P(1,1,6)",      "rays": [[1,0],[0,1],[-1,-6]]},
  {"name": "P(1,2,3)",      "rays": [[1,0],[0,1],[-2,-3]]},
  {"name": "F1",            "rays": [[1,0],[0,1],[-1,-1],[0,-1]]},
  {"name": "dP7",           "rays": [[1,0],[1,1],[0,1],[-1,-1],[0,-1]]},
  {"name": "dP6",           "rays": [[1,0],[1,1],[0,1],[-1,0],[-1,-1],[0,-1]]},
  {"name": "(P2,1/2L)",     "rays": [[1,0],[0,1],[-1,-1]], "coeffs": ["1/2","0/1","0/1"]},
  {"name": "P3",            "rays": [[1,0,0],[0,1,0],[0,0,1],[-1,-1,-1]]},
  {"name": "P1xP1xP1",      "rays": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]},
  {"name": "P(1,1,1,2)",    "rays": [[1,0,0],[0,1,0],[0,0,1],[-1,-1,-2]]},
  {"name": "Bl_pt P3",      "rays": [[1,0,0],[0,1,0],[0,0,1],[-1,-1,-1],[1,1,1]]}
])json";

std::vector<InputSpec> load() {
  std::vector<InputSpec> out;
  for (const auto& doc : nlohmann::json::parse(kCorpus)) out.push_back(parse_input(doc));
  return out;
}

}  // namespace

const std::vector<InputSpec>& corpus() {
  static const std::vector<InputSpec> entries = load();
  return entries;
}

const InputSpec& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw InvalidInput("no corpus entry named '" + std::string(name) + "'");
}

}  // namespace kstab::cli
