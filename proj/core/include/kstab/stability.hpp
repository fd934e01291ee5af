#pragma once

// K-stability invariants of a torus cocharacter v in N, expressed through
// the moment polytope P:
//
//   Fut(v)    = -<b_P, v>
//   ||v||_m   = <b_P, v> - min_{u in P} <u, v>
//   ||v||_2^2 = vᵀ Σ v
//   mu(v)     = (Fut/||v||_m, Fut/||v||_2), ordered lexicographically.
//
// ||v||_2 is irrational in general, so every quantity involving it is kept
// as a SignedSqrt and compared exactly.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "kstab/exactgeom.hpp"
#include "kstab/moments.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// sign * sqrt(square), with sign in {-1, 0, 1} and square >= 0.
struct SignedSqrt {
  int sign = 0;
  Rational square = 0;

  static SignedSqrt make(int sign, Rational square);

  friend std::strong_ordering operator<=>(const SignedSqrt& a, const SignedSqrt& b);
  friend bool operator==(const SignedSqrt& a, const SignedSqrt& b) {
    return a.sign == b.sign && (a.sign == 0 || a.square == b.square);
  }
};

struct StabilityValue {
  Rational mu1;
  SignedSqrt mu2;

  friend std::strong_ordering operator<=>(const StabilityValue& a, const StabilityValue& b);
  friend bool operator==(const StabilityValue& a, const StabilityValue& b) {
    return a.mu1 == b.mu1 && a.mu2 == b.mu2;
  }
};

/// mu'_{<=2} = c0 + eps * c1 with eps a positive infinitesimal.
struct TruncatedInvariant {
  Rational c0;
  SignedSqrt c1;

  friend std::strong_ordering operator<=>(const TruncatedInvariant& a, const TruncatedInvariant& b);
  friend bool operator==(const TruncatedInvariant& a, const TruncatedInvariant& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
};

enum class Verdict { Semistable, Unstable };

const char* to_string(Verdict v);

class StabilityContext {
 public:
  /// Toric log Fano pair from fan rays and boundary coefficients.
  static StabilityContext from_fan(std::vector<VecQ> rays, std::vector<Rational> coeffs);
  /// Any full-dimensional rational polytope taken as a moment polytope.
  static StabilityContext from_polytope(const VPolytope& p);

  std::size_t dim() const { return polytope_.ambient; }
  const VPolytope& polytope() const { return polytope_; }
  const HPolytope& facets() const { return facets_; }
  const MomentData& moments() const { return moments_; }
  const VecQ& barycenter() const { return moments_.barycenter; }
  const MatQ& covariance() const { return moments_.covariance; }
  const Fan& normal_fan() const { return fan_; }
  const std::optional<std::vector<VecQ>>& rays() const { return rays_; }
  const std::optional<std::vector<Rational>>& coeffs() const { return coeffs_; }

 private:
  explicit StabilityContext(VPolytope p);

  VPolytope polytope_;
  HPolytope facets_;
  MomentData moments_;
  Fan fan_;
  std::optional<std::vector<VecQ>> rays_;
  std::optional<std::vector<Rational>> coeffs_;
};

Rational futaki(const StabilityContext& ctx, const VecQ& v);
Rational min_norm(const StabilityContext& ctx, const VecQ& v);
Rational l2_norm_sq(const StabilityContext& ctx, const VecQ& v);
StabilityValue mu(const StabilityContext& ctx, const VecQ& v);

struct LogDiscrepancy {
  Rational A;  // -min_{u in P} <u, v>
  Rational S;  // ||v||_m
};
LogDiscrepancy log_discrepancy_S(const StabilityContext& ctx, const VecQ& v);

/// Torus-equivariant verdict: semistable iff the barycenter is zero.
Verdict verdict(const StabilityContext& ctx);

TruncatedInvariant mu_prime_trunc(const StabilityContext& ctx, const VecQ& v);

}  // namespace kstab
