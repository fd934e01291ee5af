#include "kstab/optimizer.hpp"

#include <algorithm>
#include <set>

#include "detail/combinations.hpp"
#include "kstab/errors.hpp"

namespace kstab {

namespace {

struct LexLess {
  bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};

}  // namespace

Stage1Result minimize_mu1(const StabilityContext& ctx) {
  if (verdict(ctx) == Verdict::Semistable) throw InvalidInput("semistable");

  struct Candidate {
    VecQ ray;
    Rational value;
  };
  std::vector<Candidate> candidates;
  Stage1Result out;
  for (const auto& fc : ctx.normal_fan().cones) {
    auto gens = extreme_rays(fc.cone);
    std::vector<VecQ> dirs = gens.rays;
    for (const auto& l : gens.lineality) {
      dirs.push_back(l);
      dirs.push_back(-l);
    }
    std::optional<Rational> best;
    for (auto& r : dirs) {
      Rational val = futaki(ctx, r) / min_norm(ctx, r);
      if (!best || val < *best) best = val;
      candidates.push_back({std::move(r), val});
    }
    if (best) out.per_cone_minima.push_back({fc.vertex_index, *best});
  }
  if (candidates.empty()) throw CertificateFailure("normal fan has no rays");

  out.M1 = std::min_element(candidates.begin(), candidates.end(),
                            [](const Candidate& a, const Candidate& b) { return a.value < b.value; })
               ->value;
  std::set<VecQ, LexLess> witnesses;
  for (const auto& c : candidates)
    if (c.value == out.M1) witnesses.insert(c.ray);
  out.witness_rays.assign(witnesses.begin(), witnesses.end());
  return out;
}

Rational sigma1_gap(const StabilityContext& ctx, const Rational& M1, const VecQ& v) {
  if (is_zero(v)) return 0;
  return futaki(ctx, v) - M1 * min_norm(ctx, v);
}

SigmaOne build_sigma1(const StabilityContext& ctx, const Rational& M1) {
  if (sgn(M1) >= 0) throw InvalidInput("M1 must be negative");
  const VecQ& b = ctx.barycenter();
  SigmaOne s{M1, ConeH{ctx.dim(), {}}, {}};
  std::set<VecQ, LexLess> seen;
  // (1 + M1)<b, v> - M1 <u_j, v> >= 0, stored as <M1 u_j - (1 + M1) b, v> <= 0.
  for (const auto& u : ctx.polytope().vertices) {
    VecQ a = M1 * u - (1 + M1) * b;
    if (is_zero(a)) continue;
    a = primitive_integral(a);
    if (seen.insert(a).second) s.cone.normals.push_back(std::move(a));
  }
  s.generators = extreme_rays(s.cone);
  if (s.generators.rays.empty() && s.generators.lineality.empty()) throw CertificateFailure("inconsistent M1");
  return s;
}

Stage2Result minimize_mu2_on_cone(const StabilityContext& ctx, const SigmaOne& sigma1) {
  const std::size_t d = ctx.dim();
  const VecQ& b = ctx.barycenter();
  const MatQ& cov = ctx.covariance();
  const auto& rows = sigma1.cone.normals;

  std::vector<Stage2Result> found;
  const std::size_t max_active = std::min(rows.size(), d - 1);
  for (std::size_t k = 0; k <= max_active; ++k) {
    detail::for_each_combination(rows.size(), k, [&](std::span<const std::size_t> active) {
      // Unknowns (v, lambda, nu). Stationarity of vᵀΣv - lambda(<b,v> - 1) + Σ nu_i <a_i, v>.
      const std::size_t n = d + 1 + k;
      MatQ kkt(n, n);
      VecQ rhs = zeros(n);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) kkt(i, j) = 2 * cov(i, j);
        kkt(i, d) = -b[i];
        for (std::size_t a = 0; a < k; ++a) kkt(i, d + 1 + a) = rows[active[a]][i];
      }
      for (std::size_t j = 0; j < d; ++j) kkt(d, j) = b[j];
      rhs[d] = 1;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < d; ++j) kkt(d + 1 + a, j) = rows[active[a]][j];

      auto sol = solve(std::move(kkt), std::move(rhs));
      if (!sol) return true;
      VecQ v(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
      VecQ nu(sol->begin() + static_cast<std::ptrdiff_t>(d + 1), sol->end());
      if (std::any_of(nu.begin(), nu.end(), [](const Rational& x) { return sgn(x) < 0; })) return true;
      if (!sigma1.cone.contains(v)) return true;
      Stage2Result r;
      r.v_star = std::move(v);
      r.active_set.assign(active.begin(), active.end());
      r.multipliers = std::move(nu);
      r.slice_multiplier = (*sol)[d];
      found.push_back(std::move(r));
      return true;
    });
  }
  if (found.empty()) throw CertificateFailure("infeasible slice");

  // Strict convexity makes the KKT point unique; distinct active sets may
  // describe the same point when constraints are degenerate there.
  std::set<VecQ, LexLess> points;
  for (const auto& r : found) points.insert(r.v_star);
  if (points.size() != 1) throw CertificateFailure("stage-2 KKT points are not unique");

  Stage2Result best = std::move(found.front());
  best.kkt_points = points.size();
  best.M2 = mu(ctx, best.v_star).mu2;
  return best;
}

DestabReport optimal_destabilizer(const StabilityContext& ctx) {
  DestabReport rep;
  rep.verdict = verdict(ctx);
  if (rep.verdict == Verdict::Semistable) {
    rep.M_mu = {Rational(0), SignedSqrt{}};
    rep.delta = 1;
    return rep;
  }
  auto s1 = minimize_mu1(ctx);
  if (!(s1.M1 > -1 && s1.M1 < 0)) throw CertificateFailure("M1 outside (-1, 0): " + to_string(s1.M1));
  auto sigma = build_sigma1(ctx, s1.M1);
  for (const auto& w : s1.witness_rays)
    if (!sigma.cone.contains(w)) throw CertificateFailure("witness ray outside sigma1");
  auto s2 = minimize_mu2_on_cone(ctx, sigma);

  StabilityValue at_star = mu(ctx, s2.v_star);
  if (at_star.mu1 != s1.M1) throw CertificateFailure("v_star does not attain M1");
  if (dot(ctx.barycenter(), s2.v_star) != 1) throw CertificateFailure("v_star off the slice");

  rep.M_mu = {s1.M1, s2.M2};
  rep.delta = s1.M1 + 1;
  rep.v_star_rational = s2.v_star;
  rep.v_star_primitive = primitive_integral(s2.v_star);
  rep.stage1 = std::move(s1);
  rep.sigma1 = std::move(sigma);
  rep.stage2 = std::move(s2);
  return rep;
}

}  // namespace kstab
