#include "kstab/stability.hpp"

#include <utility>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

void require_direction(const StabilityContext& ctx, const VecQ& v) {
  if (v.size() != ctx.dim()) throw InvalidInput("direction has wrong dimension");
  if (is_zero(v)) throw InvalidInput("zero direction");
}

std::strong_ordering cmp3(const Rational& a, const Rational& b) { return compare(a, b); }

}  // namespace

SignedSqrt SignedSqrt::make(int sign, Rational square) {
  if (sign == 0 || sgn(square) == 0) return {0, Rational(0)};
  return {sign > 0 ? 1 : -1, std::move(square)};
}

std::strong_ordering operator<=>(const SignedSqrt& a, const SignedSqrt& b) {
  if (a.sign != b.sign) return a.sign <=> b.sign;
  if (a.sign == 0) return std::strong_ordering::equal;
  // Same nonzero sign: magnitudes compare like their squares.
  return a.sign > 0 ? cmp3(a.square, b.square) : cmp3(b.square, a.square);
}

std::strong_ordering operator<=>(const StabilityValue& a, const StabilityValue& b) {
  if (auto c = cmp3(a.mu1, b.mu1); c != 0) return c;
  return a.mu2 <=> b.mu2;
}

std::strong_ordering operator<=>(const TruncatedInvariant& a, const TruncatedInvariant& b) {
  if (auto c = cmp3(a.c0, b.c0); c != 0) return c;
  return a.c1 <=> b.c1;
}

const char* to_string(Verdict v) { return v == Verdict::Semistable ? "semistable" : "unstable"; }

StabilityContext::StabilityContext(VPolytope p)
    : polytope_(std::move(p)),
      facets_(facets_from_vertices(polytope_)),
      moments_(compute_moments(polytope_)),
      fan_(kstab::normal_fan(polytope_)) {}

StabilityContext StabilityContext::from_fan(std::vector<VecQ> rays, std::vector<Rational> coeffs) {
  auto [h, v] = dual_polytope(rays, coeffs);
  StabilityContext ctx(std::move(v));
  ctx.rays_ = std::move(rays);
  ctx.coeffs_ = std::move(coeffs);
  return ctx;
}

StabilityContext StabilityContext::from_polytope(const VPolytope& p) {
  if (p.vertices.empty()) throw InvalidInput("empty polytope");
  auto hull = convex_hull(p.vertices);
  if (!hull.full_dimensional()) throw InvalidInput("moment polytope is not full-dimensional");
  return StabilityContext(std::move(hull));
}

Rational futaki(const StabilityContext& ctx, const VecQ& v) {
  require_direction(ctx, v);
  return -dot(ctx.barycenter(), v);
}

Rational min_norm(const StabilityContext& ctx, const VecQ& v) {
  require_direction(ctx, v);
  return dot(ctx.barycenter(), v) - support_min(ctx.polytope(), v);
}

Rational l2_norm_sq(const StabilityContext& ctx, const VecQ& v) {
  require_direction(ctx, v);
  return bilinear(ctx.covariance(), v, v);
}

StabilityValue mu(const StabilityContext& ctx, const VecQ& v) {
  Rational fut = futaki(ctx, v);
  Rational mn = min_norm(ctx, v);
  Rational q = l2_norm_sq(ctx, v);
  return {fut / mn, SignedSqrt::make(sgn(fut), fut * fut / q)};
}

LogDiscrepancy log_discrepancy_S(const StabilityContext& ctx, const VecQ& v) {
  require_direction(ctx, v);
  return {-support_min(ctx.polytope(), v), min_norm(ctx, v)};
}

Verdict verdict(const StabilityContext& ctx) {
  return is_zero(ctx.barycenter()) ? Verdict::Semistable : Verdict::Unstable;
}

TruncatedInvariant mu_prime_trunc(const StabilityContext& ctx, const VecQ& v) {
  Rational fut = futaki(ctx, v);
  Rational mn = min_norm(ctx, v);
  Rational q = l2_norm_sq(ctx, v);
  // c1 = -Fut * ||v||_2 / ||v||_m^2
  Rational mn2 = mn * mn;
  return {fut / mn, SignedSqrt::make(-sgn(fut), fut * fut * q / (mn2 * mn2))};
}

}  // namespace kstab
