#pragma once

// Exact polyhedral geometry in low dimension (d <= 8): polytopes in both
// representations, polyhedral cones, normal fans, triangulations.
//
// Conventions:
//   * polytopes live in M_R; a half-space is <u, normal> >= offset.
//   * cones live in N_R; a cone constraint is <normal, v> <= 0.
//   * normals are primitive integral vectors whenever they are produced here.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kstab/linalg.hpp"
#include "kstab/rational.hpp"

namespace kstab {

inline constexpr std::size_t kMaxDimension = 8;

struct HalfSpace {
  VecQ normal;
  Rational offset;

  bool contains(const VecQ& u) const { return dot(u, normal) >= offset; }
  bool tight(const VecQ& u) const { return dot(u, normal) == offset; }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

struct HPolytope {
  std::size_t ambient = 0;
  std::vector<HalfSpace> constraints;

  bool contains(const VecQ& u) const;
};

struct VPolytope {
  std::size_t ambient = 0;
  std::size_t dim = 0;  // affine dimension of the hull
  std::vector<VecQ> vertices;

  bool full_dimensional() const { return dim == ambient; }
};

struct ConeH {
  std::size_t ambient = 0;
  std::vector<VecQ> normals;

  bool contains(const VecQ& v) const;
};

/// Generators of a polyhedral cone: cone(rays) + span(lineality).
struct ConeGenerators {
  std::vector<VecQ> rays;
  std::vector<VecQ> lineality;
};

/// A maximal cone of a normal fan together with the vertex it belongs to.
struct FanCone {
  std::size_t vertex_index = 0;
  VecQ vertex;
  ConeH cone;
};

struct Fan {
  std::size_t ambient = 0;
  std::vector<FanCone> cones;

  /// Indices of every maximal cone containing v (several on shared walls).
  std::vector<std::size_t> cones_containing(const VecQ& v) const;
};

using Simplex = std::vector<VecQ>;

/// P = {u : <u, ray_i> >= coeff_i - 1} for complete fan data with boundary
/// coefficients in [0, 1). The H-representation returned is irredundant.
std::pair<HPolytope, VPolytope> dual_polytope(std::span<const VecQ> rays, std::span<const Rational> coeffs);

VPolytope vertices_from_facets(const HPolytope& h);
HPolytope facets_from_vertices(const VPolytope& v);

/// Convex hull of an arbitrary finite point set (any affine dimension).
VPolytope convex_hull(std::span<const VecQ> points);

std::size_t affine_dimension(std::span<const VecQ> points);

/// One maximal cone per vertex: {v : <u, v> <= <u', v> for all vertices u'}.
Fan normal_fan(const VPolytope& p);

/// Extreme rays (primitive integral) and a lineality basis.
ConeGenerators extreme_rays(const ConeH& c);

/// v in the relative interior of c: v in c and strict on every constraint
/// that is not an implicit equality of c.
bool in_relative_interior(const ConeH& c, const ConeGenerators& gens, const VecQ& v);

/// Pulling triangulation: apexes are taken in the order given by
/// `vertex_priority` (indices into p.vertices). The default uses the
/// lexicographic vertex order.
std::vector<Simplex> triangulate(const VPolytope& p);
std::vector<Simplex> triangulate(const VPolytope& p, std::span<const std::size_t> vertex_priority);

/// Unsigned d-volume of a d-simplex given by d+1 points in R^d.
Rational simplex_volume(const Simplex& s);

}  // namespace kstab
