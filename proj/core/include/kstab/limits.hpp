#pragma once

// Limits of one-parameter subgroups acting on a point [w] of a projectivized
// torus representation. Only the support of w matters: if e_i has weight u_i
// then lim_{t->0} v(t)·[w] keeps exactly the coordinates whose weight
// minimizes <u_i, v> over the support.

#include <cstddef>
#include <optional>
#include <vector>

#include "kstab/exactgeom.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct WeightedPoint {
  std::vector<VecQ> weights;                    // u_1..u_l, lattice points of M
  std::vector<std::size_t> support;             // sorted indices i with w_i != 0
  std::optional<std::vector<Rational>> coords;  // w_1..w_l, optional

  /// Throws InvalidInput if the support is empty, out of range or unsorted.
  void validate() const;
  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// A face of the weight polytope, identified by every support index whose
/// weight lies on it.
struct Face {
  std::vector<std::size_t> members;
  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

struct WeightPolytope {
  std::vector<VecQ> weights;
  std::vector<std::size_t> support;
  VPolytope hull;           // conv{u_i : i in support}
  std::vector<Face> faces;  // every face, including the hull itself; sorted
};

WeightPolytope weight_polytope(const WeightedPoint& w);

WeightedPoint limit_point(const WeightedPoint& w, const VecQ& v);

bool is_fixed(const WeightedPoint& w, const VecQ& v);

/// True when `members` is exactly the index set of a face of the weight polytope.
bool is_face(const WeightedPoint& w, const std::vector<std::size_t>& members);

/// sigma_F = {v : <u, v> <= <u', v> for u in F, u' in Q}. Throws if F is not a face.
ConeH normal_cone_of_face(const WeightPolytope& q, const Face& f);

/// w^F: coordinates outside F set to zero. Throws if F is not a face.
WeightedPoint face_limit(const WeightedPoint& w, const Face& f);

}  // namespace kstab
