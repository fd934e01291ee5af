#pragma once

// Continuous moments of a moment polytope and the lattice-point sums they
// are the large-dilate limits of.

#include <cstddef>
#include <span>
#include <vector>

#include "kstab/exactgeom.hpp"
#include "kstab/linalg.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct MomentData {
  Rational volume;
  VecQ barycenter;
  MatQ covariance;  // centered second moments, (1/vol) ∫ (u-b)(u-b)ᵀ du
};

Rational volume(const VPolytope& p);
VecQ barycenter(const VPolytope& p);
MatQ covariance(const VPolytope& p);

/// All three moments from a single triangulation.
MomentData compute_moments(const VPolytope& p);
MomentData compute_moments(std::span<const Simplex> simplices);

/// Raw (uncentered) second moment matrix (1/vol) ∫ u uᵀ du.
MatQ raw_second_moment(const MomentData& m);

/// min over the polytope of <u, v>. Throws InvalidInput for v = 0.
Rational support_min(const VPolytope& p, const VecQ& v);

struct LatticeRow {
  long m = 0;
  Integer count;        // N_m = #(mP ∩ Z^d)
  Integer weight_sum;   // w_m = Σ <u, v>
  Integer square_sum;   // q_m = Σ <u, v>^2
  Rational lambda_min;  // min <u, v> over the lattice points
};

struct LatticeSeries {
  long r = 1;  // lcm of vertex denominators; rows are at m = r, 2r, ...
  VecQ direction;
  std::vector<LatticeRow> rows;
};

/// Exact lattice sums over mP for m = r, 2r, ..., <= m_max. The direction
/// must be integral and nonzero; m_max >= 3r.
LatticeSeries lattice_series(const VPolytope& p, const VecQ& v, long m_max);

/// lcm of all vertex-coordinate denominators.
long dilation_index(const VPolytope& p);

struct ExtrapolationResult {
  Rational F0_est;  // limit of w_m / (m N_m)
  Rational Q0_est;  // limit of q_m / (m^2 N_m)
  std::vector<Rational> residuals;    // successive differences of F0 Richardson estimates
  std::vector<Rational> q_residuals;  // same for Q0
};

/// Two-point Richardson elimination of the 1/m term on consecutive rows;
/// the estimate is taken from the last two rows.
ExtrapolationResult extrapolate(const LatticeSeries& s);

}  // namespace kstab
