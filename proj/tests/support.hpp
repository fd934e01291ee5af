#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing in
// here calls into the code path it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kstab/cli/corpus.hpp"
#include "kstab/exactgeom.hpp"
#include "kstab/linalg.hpp"
#include "kstab/rational.hpp"
#include "kstab/stability.hpp"

namespace kstab::testing {

using Rng = std::mt19937_64;

inline VecQ V(std::initializer_list<long> xs) {
  VecQ v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational Q(long p, long q = 1) {
  Rational r = Rational(p) / Rational(q);
  r.canonicalize();
  return r;
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline VecQ random_direction(Rng& rng, std::size_t d, long bound) {
  VecQ v;
  do {
    v.clear();
    for (std::size_t i = 0; i < d; ++i) v.emplace_back(uniform(rng, -bound, bound));
  } while (is_zero(v));
  return v;
}

inline VecQ random_primitive(Rng& rng, std::size_t d, long bound) {
  return primitive_integral(random_direction(rng, d, bound));
}

inline Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  return Q(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

/// Rational in (0, 1).
inline Rational random_unit_interval(Rng& rng, long den_bound = 97) {
  long den = uniform(rng, 2, den_bound);
  return Q(uniform(rng, 1, den - 1), den);
}

/// Product of random elementary integer matrices and a signed permutation.
MatQ random_unimodular(Rng& rng, std::size_t d);

/// U applied to every vertex (U acts on M; directions transform by U^{-T}).
VPolytope transform(const MatQ& u, const VPolytope& p);

/// k * P.
VPolytope dilate(const VPolytope& p, long k);

/// Every primitive integral vector with |v|_inf <= bound.
std::vector<VecQ> primitive_grid(std::size_t d, long bound);

/// Random full-dimensional polytope as the hull of rational points.
VPolytope random_polytope(Rng& rng, std::size_t d);

inline StabilityContext fan_context(std::vector<VecQ> rays) {
  std::vector<Rational> c(rays.size(), Rational(0));
  return StabilityContext::from_fan(std::move(rays), std::move(c));
}

inline StabilityContext p11m(long m) { return fan_context({V({1, 0}), V({0, 1}), V({-1, -m})}); }

struct NamedContext {
  std::string name;
  StabilityContext ctx;
};

const std::vector<NamedContext>& corpus_contexts();

// --- Oracles -----------------------------------------------------------

/// Exact polygon moments by Green's theorem over a counterclockwise boundary.
struct PolygonMoments {
  Rational area;
  VecQ centroid;
  MatQ covariance;
};
PolygonMoments polygon_moments(std::vector<VecQ> vertices);

/// Counterclockwise order of a convex polygon's vertices (double angles are
/// only used to sort; the vertices themselves stay exact).
std::vector<VecQ> ccw(std::vector<VecQ> vertices);

/// Is `target` in cone(gens) + span(lineality)? Exact basic-solution
/// enumeration of {x >= 0 : G x = target}.
bool in_conic_hull(const std::vector<VecQ>& gens, const std::vector<VecQ>& lineality, const VecQ& target);

/// Brute-force lattice sums over mP by testing every box point.
struct NaiveLatticeRow {
  Integer count, w, q;
  Rational lambda_min;
};
NaiveLatticeRow naive_lattice_row(const VPolytope& p, const VecQ& v, long m);

}  // namespace kstab::testing
