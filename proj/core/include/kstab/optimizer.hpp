#pragma once

// Lexicographic minimization of mu over the cocharacters of the torus.
//
// Stage 1 minimizes mu1 = Fut/||.||_m. On the normal cone of a vertex u the
// minimum norm is linear, <b - u, v>, so mu1 is linear-fractional with a
// positive denominator and its projectivized minimum sits on an extreme ray.
//
// The minimizers of stage 1 form the cone
//   sigma1 = {v : Fut(v) - M1 ||v||_m = 0}
//          = {v : (1 + M1)<b, v> - M1 <u_j, v> >= 0 for every vertex u_j},
// and stage 2 minimizes the strictly convex vᵀΣv over sigma1 ∩ {<b, v> = 1}
// by exact active-set enumeration of the KKT conditions.

#include <cstddef>
#include <optional>
#include <vector>

#include "kstab/exactgeom.hpp"
#include "kstab/stability.hpp"

namespace kstab {

struct ConeMinimum {
  std::size_t vertex_index = 0;
  Rational value;
};

struct Stage1Result {
  Rational M1;
  std::vector<VecQ> witness_rays;  // primitive, lexicographically sorted
  std::vector<ConeMinimum> per_cone_minima;
};

struct SigmaOne {
  Rational M1;
  ConeH cone;
  ConeGenerators generators;
};

struct Stage2Result {
  VecQ v_star;  // on the slice <b, v> = 1
  SignedSqrt M2;
  std::vector<std::size_t> active_set;  // indices into sigma1.cone.normals
  VecQ multipliers;                     // one per active constraint, all >= 0
  Rational slice_multiplier;            // for <b, v> = 1
  std::size_t kkt_points = 0;           // distinct feasible KKT points found (1 when certified)
};

struct DestabReport {
  Verdict verdict = Verdict::Semistable;
  StabilityValue M_mu;
  Rational delta;
  std::optional<VecQ> v_star_rational;
  std::optional<VecQ> v_star_primitive;
  std::optional<Stage1Result> stage1;
  std::optional<SigmaOne> sigma1;
  std::optional<Stage2Result> stage2;
};

Stage1Result minimize_mu1(const StabilityContext& ctx);

/// Fut(v) - M1 ||v||_m; nonnegative everywhere, zero exactly on sigma1.
Rational sigma1_gap(const StabilityContext& ctx, const Rational& M1, const VecQ& v);

SigmaOne build_sigma1(const StabilityContext& ctx, const Rational& M1);

Stage2Result minimize_mu2_on_cone(const StabilityContext& ctx, const SigmaOne& sigma1);

DestabReport optimal_destabilizer(const StabilityContext& ctx);

}  // namespace kstab
