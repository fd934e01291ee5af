#pragma once

// JSON output documents. Exact values are "p/q" strings; every "*_decimal"
// field is a display annotation and is never read back.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kstab/cli/input.hpp"
#include "kstab/limits.hpp"
#include "kstab/moments.hpp"
#include "kstab/optimizer.hpp"
#include "kstab/stability.hpp"

namespace kstab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultDigits = 12;

std::string render(const SignedSqrt& s);
std::string sqrt_decimal(const SignedSqrt& s, int digits);
Json signed_sqrt_json(const SignedSqrt& s, int digits);
SignedSqrt parse_signed_sqrt(const nlohmann::json& j);

Json report_document(const InputSpec& spec, const StabilityContext& ctx, const std::vector<VecQ>& directions,
                     int digits);

Json destab_document(const std::string& name, const StabilityContext& ctx, const DestabReport& rep, int digits);

/// The exact part of a destabilize document, as read back from JSON.
struct DestabSummary {
  std::string name;
  Verdict verdict = Verdict::Semistable;
  Rational delta;
  StabilityValue M_mu;
  std::optional<VecQ> v_star;
  std::optional<VecQ> v_star_primitive;
};
DestabSummary parse_destab_document(const nlohmann::json& doc);

struct OracleOutput {
  Json document;
  std::string columns;  // whitespace-separated dump, one row per dilate
};
OracleOutput oracle_document(const InputSpec& spec, const StabilityContext& ctx, const VecQ& v, long m_max,
                             int digits);

Json limits_document(const WeightedPoint& w, const VecQ& v);

}  // namespace kstab::cli
