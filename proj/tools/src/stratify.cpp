#include "kstab/cli/stratify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>

#include "kstab/errors.hpp"
#include "kstab/optimizer.hpp"

namespace kstab::cli {

namespace {

struct Outcome {
  std::optional<StabilityValue> value;
  std::string input_error;
  std::string certificate_error;
};

Outcome evaluate(const InputSpec& spec) {
  Outcome o;
  try {
    auto ctx = make_context(spec);
    o.value = optimal_destabilizer(ctx).M_mu;
  } catch (const CertificateFailure& e) {
    o.certificate_error = e.what();
  } catch (const InvalidInput& e) {
    o.input_error = e.what();
  }
  return o;
}

}  // namespace

StratumTable stratify(const std::vector<InputSpec>& inputs, unsigned threads) {
  if (inputs.empty()) throw InvalidInput("stratify needs at least one input");
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(inputs.size()));

  std::vector<Outcome> outcomes(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) outcomes[i] = evaluate(inputs[i]);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  // Single deterministic pass, ordered by input name.
  std::vector<std::size_t> order(inputs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inputs[a].name < inputs[b].name; });

  std::string bad, broken;
  for (auto i : order) {
    if (!outcomes[i].input_error.empty()) bad += "\n  " + inputs[i].name + ": " + outcomes[i].input_error;
    if (!outcomes[i].certificate_error.empty())
      broken += "\n  " + inputs[i].name + ": " + outcomes[i].certificate_error;
  }
  if (!bad.empty()) throw InvalidInput("invalid stratify inputs:" + bad);
  if (!broken.empty()) throw CertificateFailure("certificate failures:" + broken);

  StratumTable table;
  for (auto i : order) {
    const auto& v = *outcomes[i].value;
    auto it = std::find_if(table.strata.begin(), table.strata.end(), [&](const Stratum& s) { return s.value == v; });
    if (it == table.strata.end()) {
      table.strata.push_back({v, {inputs[i].name}});
    } else {
      it->members.push_back(inputs[i].name);
    }
  }
  std::sort(table.strata.begin(), table.strata.end(),
            [](const Stratum& a, const Stratum& b) { return a.value > b.value; });
  return table;
}

Json stratum_document(const StratumTable& table, int digits) {
  Json j;
  std::size_t total = 0;
  auto strata = Json::array();
  for (const auto& s : table.strata) {
    Json e;
    e["value"] = Json::array({to_string(s.value.mu1), render(s.value.mu2)});
    e["M1"] = to_string(s.value.mu1);
    e["M1_decimal"] = to_decimal(s.value.mu1, digits);
    e["M2"] = signed_sqrt_json(s.value.mu2, digits);
    e["semistable"] = sgn(s.value.mu1) == 0 && s.value.mu2.sign == 0;
    e["members"] = s.members;
    total += s.members.size();
    strata.push_back(e);
  }
  j["inputs"] = total;
  j["order"] = "strictly descending, lexicographic on (M1, M2)";
  j["strata"] = strata;
  return j;
}

}  // namespace kstab::cli
