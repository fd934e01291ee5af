#include "kstab/limits.hpp"

#include <algorithm>
#include <set>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

std::vector<std::size_t> argmin_support(const WeightedPoint& w, const VecQ& v) {
  std::vector<std::size_t> best;
  std::optional<Rational> low;
  for (auto i : w.support) {
    Rational x = dot(w.weights[i], v);
    if (!low || x < *low) {
      low = x;
      best.clear();
    }
    if (x == *low) best.push_back(i);
  }
  return best;
}

ConeH face_cone(const std::vector<VecQ>& weights, const std::vector<std::size_t>& support,
                const std::vector<std::size_t>& members) {
  ConeH c{weights.front().size(), {}};
  std::set<VecQ, bool (*)(const VecQ&, const VecQ&)> seen(lex_less);
  for (auto i : members)
    for (auto j : support) {
      VecQ a = weights[i] - weights[j];
      if (is_zero(a)) continue;
      a = primitive_integral(a);
      if (seen.insert(a).second) c.normals.push_back(std::move(a));
    }
  std::sort(c.normals.begin(), c.normals.end(), lex_less);
  return c;
}

VecQ relative_interior_point(const ConeGenerators& g, std::size_t d) {
  VecQ v = zeros(d);
  for (const auto& r : g.rays) v += r;
  return v;
}

WeightedPoint restrict_to(const WeightedPoint& w, std::vector<std::size_t> support) {
  WeightedPoint out{w.weights, std::move(support), std::nullopt};
  if (w.coords) {
    std::vector<Rational> c(w.coords->size(), Rational(0));
    for (auto i : out.support) c[i] = (*w.coords)[i];
    out.coords = std::move(c);
  }
  return out;
}

void require_direction(const WeightedPoint& w, const VecQ& v) {
  if (v.size() != w.weights.front().size()) throw InvalidInput("direction has wrong dimension");
  if (is_zero(v)) throw InvalidInput("zero direction");
}

}  // namespace

void WeightedPoint::validate() const {
  if (weights.empty()) throw InvalidInput("no weights");
  const std::size_t d = weights.front().size();
  if (d == 0 || d > kMaxDimension) throw InvalidInput("weight dimension out of range");
  for (const auto& u : weights) {
    if (u.size() != d) throw InvalidInput("weights have inconsistent dimensions");
    for (const auto& x : u)
      if (x.get_den() != 1) throw InvalidInput("weights must be lattice points");
  }
  if (support.empty()) throw InvalidInput("support is empty");
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] >= weights.size()) throw InvalidInput("support index out of range");
    if (k && support[k] <= support[k - 1]) throw InvalidInput("support must be strictly increasing");
  }
  if (coords && coords->size() != weights.size()) throw InvalidInput("coordinates and weights differ in length");
}

WeightPolytope weight_polytope(const WeightedPoint& w) {
  w.validate();
  const std::size_t d = w.weights.front().size();
  std::vector<VecQ> pts;
  for (auto i : w.support) pts.push_back(w.weights[i]);
  WeightPolytope q{w.weights, w.support, convex_hull(pts), {}};

  // Every face F contains a vertex u, and sigma_F is a face of sigma_u, so
  // summing each subset of sigma_u's extreme rays reaches every face.
  std::set<Face> faces;
  for (const auto& u : q.hull.vertices) {
    std::vector<std::size_t> at_u;
    for (auto i : w.support)
      if (w.weights[i] == u) at_u.push_back(i);
    auto gens = extreme_rays(face_cone(w.weights, w.support, at_u));
    const std::size_t n = gens.rays.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      VecQ v = zeros(d);
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (std::size_t{1} << k)) v += gens.rays[k];
      faces.insert(Face{argmin_support(w, v)});
    }
  }
  q.faces.assign(faces.begin(), faces.end());
  return q;
}

WeightedPoint limit_point(const WeightedPoint& w, const VecQ& v) {
  w.validate();
  require_direction(w, v);
  return restrict_to(w, argmin_support(w, v));
}

bool is_fixed(const WeightedPoint& w, const VecQ& v) {
  w.validate();
  require_direction(w, v);
  return argmin_support(w, v).size() == w.support.size();
}

bool is_face(const WeightedPoint& w, const std::vector<std::size_t>& members) {
  w.validate();
  if (members.empty()) return false;
  if (!std::is_sorted(members.begin(), members.end())) return false;
  if (!std::includes(w.support.begin(), w.support.end(), members.begin(), members.end())) return false;
  auto cone = face_cone(w.weights, w.support, members);
  auto gens = extreme_rays(cone);
  return argmin_support(w, relative_interior_point(gens, cone.ambient)) == members;
}

ConeH normal_cone_of_face(const WeightPolytope& q, const Face& f) {
  if (!std::binary_search(q.faces.begin(), q.faces.end(), f)) throw InvalidInput("not a face");
  return face_cone(q.weights, q.support, f.members);
}

WeightedPoint face_limit(const WeightedPoint& w, const Face& f) {
  if (!is_face(w, f.members)) throw InvalidInput("not a face");
  return restrict_to(w, f.members);
}

}  // namespace kstab
