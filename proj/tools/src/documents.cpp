#include "kstab/cli/documents.hpp"

#include <gmpxx.h>

#include <sstream>

#include "kstab/errors.hpp"

namespace kstab::cli {

namespace {

Json vec_strings(const std::vector<VecQ>& vs) {
  auto a = Json::array();
  for (const auto& v : vs) a.push_back(to_string(v));
  return a;
}

Json decimals(const VecQ& v, int digits) {
  auto a = Json::array();
  for (const auto& x : v) a.push_back(to_decimal(x, digits));
  return a;
}

Json matrix_rows(const MatQ& m) {
  auto a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_string(m.row(i)));
  return a;
}

Rational required_rational(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) throw InvalidInput(std::string("field '") + key + "': missing");
  return parse_rational(doc[key].get<std::string>());
}

VecQ parse_vec(const std::string& s) { return parse_direction(s); }

}  // namespace

std::string render(const SignedSqrt& s) {
  if (s.sign == 0) return "0/1";
  return std::string(s.sign < 0 ? "-" : "") + "sqrt(" + to_string(s.square) + ")";
}

std::string sqrt_decimal(const SignedSqrt& s, int digits) {
  if (s.sign == 0) return "0";
  mpf_class f(s.square, 64 + static_cast<mp_bitcnt_t>(digits) * 4);
  f = sqrt(f);
  if (s.sign < 0) f = -f;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return buf.data();
}

Json signed_sqrt_json(const SignedSqrt& s, int digits) {
  Json j;
  j["sign"] = s.sign;
  j["square"] = to_string(s.square);
  j["exact"] = render(s);
  j["decimal"] = sqrt_decimal(s, digits);
  return j;
}

SignedSqrt parse_signed_sqrt(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sign") || !j.contains("square")) throw InvalidInput("field 'M2': malformed");
  return SignedSqrt::make(j["sign"].get<int>(), parse_rational(j["square"].get<std::string>()));
}

Json report_document(const InputSpec& spec, const StabilityContext& ctx, const std::vector<VecQ>& directions,
                     int digits) {
  Json j;
  j["name"] = spec.name;
  j["dimension"] = ctx.dim();
  j["source"] = std::holds_alternative<FanInput>(spec.data) ? "fan" : "moment_polytope";
  j["vertices"] = vec_strings(ctx.polytope().vertices);
  auto facets = Json::array();
  for (const auto& h : ctx.facets().constraints)
    facets.push_back({{"normal", to_string(h.normal)}, {"offset", to_string(h.offset)}});
  j["facets"] = facets;
  j["dilation_index"] = dilation_index(ctx.polytope());
  j["volume"] = to_string(ctx.moments().volume);
  j["volume_decimal"] = to_decimal(ctx.moments().volume, digits);
  j["barycenter"] = to_string(ctx.barycenter());
  j["barycenter_decimal"] = decimals(ctx.barycenter(), digits);
  j["covariance"] = matrix_rows(ctx.covariance());
  j["verdict"] = to_string(verdict(ctx));
  j["verdict_scope"] = "torus-equivariant";

  if (!directions.empty()) {
    auto dirs = Json::array();
    for (const auto& v : directions) {
      Json e;
      e["v"] = to_string(v);
      Rational fut = futaki(ctx, v);
      e["futaki"] = to_string(fut);
      e["min_norm"] = to_string(min_norm(ctx, v));
      e["l2_norm_sq"] = to_string(l2_norm_sq(ctx, v));
      auto m = mu(ctx, v);
      e["mu1"] = to_string(m.mu1);
      e["mu1_decimal"] = to_decimal(m.mu1, digits);
      e["mu2"] = signed_sqrt_json(m.mu2, digits);
      auto as = log_discrepancy_S(ctx, v);
      e["A"] = to_string(as.A);
      e["S"] = to_string(as.S);
      e["A_over_S"] = to_string(as.A / as.S);
      auto tr = mu_prime_trunc(ctx, v);
      e["mu_prime_trunc"] = {{"c0", to_string(tr.c0)}, {"c1", signed_sqrt_json(tr.c1, digits)}};
      dirs.push_back(e);
    }
    j["directions"] = dirs;
  }
  return j;
}

Json destab_document(const std::string& name, const StabilityContext& ctx, const DestabReport& rep, int digits) {
  Json j;
  j["name"] = name;
  j["dimension"] = ctx.dim();
  j["verdict"] = to_string(rep.verdict);
  j["verdict_scope"] = "torus-equivariant";
  j["delta"] = to_string(rep.delta);
  j["delta_decimal"] = to_decimal(rep.delta, digits);
  j["M_mu"] = Json::array({to_string(rep.M_mu.mu1), render(rep.M_mu.mu2)});
  j["M1"] = to_string(rep.M_mu.mu1);
  j["M1_decimal"] = to_decimal(rep.M_mu.mu1, digits);
  j["M2"] = signed_sqrt_json(rep.M_mu.mu2, digits);
  if (rep.verdict == Verdict::Unstable) {
    j["v_star"] = to_string(*rep.v_star_rational);
    j["v_star_decimal"] = decimals(*rep.v_star_rational, digits);
    j["v_star_primitive"] = to_string(*rep.v_star_primitive);
    j["witness_rays"] = vec_strings(rep.stage1->witness_rays);
    Json s;
    s["constraints"] = vec_strings(rep.sigma1->cone.normals);
    s["convention"] = "<a, v> <= 0";
    s["rays"] = vec_strings(rep.sigma1->generators.rays);
    s["lineality"] = vec_strings(rep.sigma1->generators.lineality);
    j["sigma1"] = s;
    Json c;
    c["kkt_points"] = rep.stage2->kkt_points;
    c["active_set"] = rep.stage2->active_set;
    auto mult = Json::array();
    for (const auto& x : rep.stage2->multipliers) mult.push_back(to_string(x));
    c["multipliers"] = mult;
    c["slice_multiplier"] = to_string(rep.stage2->slice_multiplier);
    j["certificate"] = c;
  }
  return j;
}

DestabSummary parse_destab_document(const nlohmann::json& doc) {
  DestabSummary s;
  if (!doc.contains("name") || !doc.contains("verdict")) throw InvalidInput("not a destabilize document");
  s.name = doc["name"].get<std::string>();
  s.verdict = doc["verdict"].get<std::string>() == "semistable" ? Verdict::Semistable : Verdict::Unstable;
  s.delta = required_rational(doc, "delta");
  s.M_mu.mu1 = required_rational(doc, "M1");
  s.M_mu.mu2 = parse_signed_sqrt(doc["M2"]);
  if (doc.contains("v_star")) s.v_star = parse_vec(doc["v_star"].get<std::string>());
  if (doc.contains("v_star_primitive")) s.v_star_primitive = parse_vec(doc["v_star_primitive"].get<std::string>());
  return s;
}

OracleOutput oracle_document(const InputSpec& spec, const StabilityContext& ctx, const VecQ& v, long m_max,
                             int digits) {
  if (v.size() != ctx.dim()) throw InvalidInput("field 'v': expected " + std::to_string(ctx.dim()) + " entries");
  auto series = lattice_series(ctx.polytope(), v, m_max);
  auto ex = extrapolate(series);
  Rational target_f = dot(ctx.barycenter(), v);
  Rational target_q = bilinear(raw_second_moment(ctx.moments()), v, v);
  Rational smin = support_min(ctx.polytope(), v);

  OracleOutput out;
  Json& j = out.document;
  j["name"] = spec.name;
  j["v"] = to_string(v);
  j["r"] = series.r;
  j["m_max"] = m_max;
  std::ostringstream cols;
  cols << "# m N_m F_m Q_m lambda_min_m_over_m\n";
  auto rows = Json::array();
  for (const auto& row : series.rows) {
    Rational m(row.m);
    Rational f = Rational(row.weight_sum) / (m * Rational(row.count));
    Rational q = Rational(row.square_sum) / (m * m * Rational(row.count));
    Rational lam = row.lambda_min / m;
    Json r;
    r["m"] = row.m;
    r["N"] = row.count.get_str();
    r["w"] = row.weight_sum.get_str();
    r["q"] = row.square_sum.get_str();
    r["F_m"] = to_string(f);
    r["F_m_decimal"] = to_decimal(f, digits);
    r["Q_m"] = to_string(q);
    r["Q_m_decimal"] = to_decimal(q, digits);
    r["lambda_min_over_m"] = to_string(lam);
    rows.push_back(r);
    cols << row.m << ' ' << row.count.get_str() << ' ' << to_decimal(f, digits) << ' ' << to_decimal(q, digits)
         << ' ' << to_decimal(lam, digits) << '\n';
  }
  j["rows"] = rows;
  Json e;
  e["F0"] = to_string(ex.F0_est);
  e["F0_decimal"] = to_decimal(ex.F0_est, digits);
  e["Q0"] = to_string(ex.Q0_est);
  e["Q0_decimal"] = to_decimal(ex.Q0_est, digits);
  auto res = Json::array();
  for (const auto& x : ex.residuals) res.push_back(to_decimal(x, digits));
  e["F0_residuals_decimal"] = res;
  auto qres = Json::array();
  for (const auto& x : ex.q_residuals) qres.push_back(to_decimal(x, digits));
  e["Q0_residuals_decimal"] = qres;
  j["extrapolated"] = e;
  Json t;
  t["F0"] = to_string(target_f);
  t["F0_decimal"] = to_decimal(target_f, digits);
  t["Q0"] = to_string(target_q);
  t["Q0_decimal"] = to_decimal(target_q, digits);
  t["support_min"] = to_string(smin);
  j["targets"] = t;
  out.columns = cols.str();
  return out;
}

Json limits_document(const WeightedPoint& w, const VecQ& v) {
  if (v.size() != w.weights.front().size())
    throw InvalidInput("field 'v': expected " + std::to_string(w.weights.front().size()) + " entries");
  auto lim = limit_point(w, v);
  auto q = weight_polytope(w);
  Face f{lim.support};
  auto cone = normal_cone_of_face(q, f);
  bool fixed = is_fixed(w, v);

  Json j;
  j["v"] = to_string(v);
  j["support"] = w.support;
  j["limit_support"] = lim.support;
  std::vector<VecQ> fw;
  for (auto i : f.members) fw.push_back(w.weights[i]);
  j["face"] = {{"members", f.members}, {"weights", vec_strings(fw)}, {"dimension", affine_dimension(fw)}};
  j["sigma_F"] = {{"constraints", vec_strings(cone.normals)}, {"convention", "<a, v> <= 0"}};
  j["fixed"] = fixed;
  j["flag"] = fixed ? "fixed" : "degenerates";
  if (lim.coords) {
    auto c = Json::array();
    for (const auto& x : *lim.coords) c.push_back(to_string(x));
    j["limit_coords"] = c;
  }
  return j;
}

}  // namespace kstab::cli
