#include "kstab/exactgeom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "detail/combinations.hpp"
#include "kstab/errors.hpp"

namespace kstab {

namespace {

struct LexLess {
  bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};

using VecSet = std::set<VecQ, LexLess>;

void check_dimension(std::size_t d) {
  if (d == 0 || d > kMaxDimension)
    throw InvalidInput("ambient dimension " + std::to_string(d) + " outside 1.." + std::to_string(kMaxDimension));
}

// Scales a half-space so that its normal is primitive integral.
HalfSpace normalized(const VecQ& normal, const Rational& offset) {
  VecQ prim = primitive_integral(normal);
  std::size_t i = 0;
  while (sgn(normal[i]) == 0) ++i;
  Rational scale = prim[i] / normal[i];
  return {std::move(prim), offset * scale};
}

std::vector<VecQ> unique_nonzero_primitive(const std::vector<VecQ>& vs) {
  VecSet seen;
  std::vector<VecQ> out;
  for (const auto& v : vs) {
    if (is_zero(v)) continue;
    auto p = primitive_integral(v);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<VecQ> dedupe_points(std::span<const VecQ> pts) {
  VecSet s(pts.begin(), pts.end());
  return {s.begin(), s.end()};
}

// Vertex enumeration for a pointed polyhedron by d-subsets of constraints.
std::vector<VecQ> enumerate_vertices(const std::vector<HalfSpace>& hs, std::size_t d) {
  VecSet found;
  detail::for_each_combination(hs.size(), d, [&](std::span<const std::size_t> idx) {
    MatQ a(d, d);
    VecQ b(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a(r, c) = hs[idx[r]].normal[c];
      b[r] = hs[idx[r]].offset;
    }
    auto x = solve(a, b);
    if (x && std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return h.contains(*x); }))
      found.insert(std::move(*x));
    return true;
  });
  return {found.begin(), found.end()};
}

// Facets of a full-dimensional point configuration.
std::vector<HalfSpace> hull_facets(const std::vector<VecQ>& pts, std::size_t d) {
  std::vector<HalfSpace> facets;
  std::set<std::pair<VecQ, Rational>, bool (*)(const std::pair<VecQ, Rational>&, const std::pair<VecQ, Rational>&)> seen(
      [](const std::pair<VecQ, Rational>& a, const std::pair<VecQ, Rational>& b) {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return a.second < b.second;
      });
  detail::for_each_combination(pts.size(), d, [&](std::span<const std::size_t> idx) {
    std::vector<VecQ> diffs;
    for (std::size_t j = 1; j < idx.size(); ++j) diffs.push_back(pts[idx[j]] - pts[idx[0]]);
    auto ns = nullspace(diffs, d);
    if (ns.size() != 1) return true;
    const VecQ& a = ns[0];
    Rational off = dot(pts[idx[0]], a);
    bool pos = false, neg = false;
    for (const auto& p : pts) {
      int s = sgn(dot(p, a) - off);
      pos |= s > 0;
      neg |= s < 0;
      if (pos && neg) return true;
    }
    HalfSpace h = neg ? normalized(-a, -off) : normalized(a, off);
    if (seen.insert({h.normal, h.offset}).second) facets.push_back(std::move(h));
    return true;
  });
  std::sort(facets.begin(), facets.end(), [](const HalfSpace& x, const HalfSpace& y) {
    if (x.normal != y.normal) return lex_less(x.normal, y.normal);
    return x.offset < y.offset;
  });
  return facets;
}

// Points of a full-dimensional configuration that are vertices of its hull.
std::vector<VecQ> hull_vertices(const std::vector<VecQ>& pts, const std::vector<HalfSpace>& facets, std::size_t d) {
  std::vector<VecQ> out;
  for (const auto& p : pts) {
    std::vector<VecQ> tight;
    for (const auto& f : facets)
      if (f.tight(p)) tight.push_back(f.normal);
    if (tight.size() >= d && rank(tight, d) == d) out.push_back(p);
  }
  return out;
}

// Affine frame of a point set: origin plus an echelon basis of the direction
// space, with the pivot columns used to read off coordinates.
struct AffineFrame {
  VecQ origin;
  std::vector<VecQ> basis;
  std::vector<std::size_t> pivots;

  VecQ coordinates(const VecQ& x) const {
    VecQ y = x - origin;
    VecQ c(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) c[j] = y[pivots[j]];
    return c;
  }
  VecQ lift(const VecQ& c) const {
    VecQ x = origin;
    for (std::size_t j = 0; j < basis.size(); ++j) x += c[j] * basis[j];
    return x;
  }
};

AffineFrame affine_frame(std::span<const VecQ> pts) {
  const std::size_t d = pts.front().size();
  AffineFrame f;
  f.origin = pts.front();
  if (pts.size() == 1) return f;
  MatQ m(pts.size() - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
  f.pivots = rref(m);
  for (std::size_t r = 0; r < f.pivots.size(); ++r) f.basis.push_back(m.row(r));
  return f;
}

}  // namespace

bool HPolytope::contains(const VecQ& u) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const HalfSpace& h) { return h.contains(u); });
}

bool ConeH::contains(const VecQ& v) const {
  return std::all_of(normals.begin(), normals.end(), [&](const VecQ& a) { return sgn(dot(a, v)) <= 0; });
}

std::vector<std::size_t> Fan::cones_containing(const VecQ& v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].cone.contains(v)) out.push_back(i);
  return out;
}

std::size_t affine_dimension(std::span<const VecQ> points) {
  if (points.empty()) return 0;
  std::vector<VecQ> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return diffs.empty() ? 0 : rank(diffs, points[0].size());
}

ConeGenerators extreme_rays(const ConeH& c) {
  const std::size_t d = c.ambient;
  auto rows = unique_nonzero_primitive(c.normals);
  ConeGenerators out;
  for (auto& l : nullspace(rows, d)) out.lineality.push_back(primitive_integral(l));
  const std::size_t rk = d - out.lineality.size();
  if (rk == 0) return out;

  VecSet rays;
  detail::for_each_combination(rows.size(), rk - 1, [&](std::span<const std::size_t> idx) {
    std::vector<VecQ> sys;
    for (auto i : idx) sys.push_back(rows[i]);
    for (const auto& l : out.lineality) sys.push_back(l);
    auto ns = nullspace(sys, d);
    if (ns.size() != 1) return true;
    for (const VecQ& cand : {ns[0], VecQ(-ns[0])}) {
      if (std::all_of(rows.begin(), rows.end(), [&](const VecQ& a) { return sgn(dot(a, cand)) <= 0; }))
        rays.insert(primitive_integral(cand));
    }
    return true;
  });
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

bool in_relative_interior(const ConeH& c, const ConeGenerators& gens, const VecQ& v) {
  for (const auto& a : c.normals) {
    int s = sgn(dot(a, v));
    if (s > 0) return false;
    bool implicit_equality =
        std::all_of(gens.rays.begin(), gens.rays.end(), [&](const VecQ& r) { return sgn(dot(a, r)) == 0; });
    if (!implicit_equality && s == 0) return false;
  }
  return true;
}

VPolytope vertices_from_facets(const HPolytope& h) {
  const std::size_t d = h.ambient;
  check_dimension(d);
  std::vector<VecQ> normals;
  for (const auto& c : h.constraints) normals.push_back(c.normal);

  // Restrict to the orthogonal complement of the recession lineality so the
  // system is pointed; then "no vertex" means "empty".
  auto lineality = nullspace(normals, d);
  std::vector<HalfSpace> sys = h.constraints;
  for (const auto& l : lineality) {
    sys.push_back({l, Rational(0)});
    sys.push_back({-l, Rational(0)});
  }
  auto verts = enumerate_vertices(sys, d);
  if (verts.empty()) throw InvalidInput("infeasible");

  ConeH recession{d, {}};
  for (const auto& n : normals) recession.normals.push_back(-n);
  auto rec = extreme_rays(recession);
  if (!rec.rays.empty() || !rec.lineality.empty()) throw InvalidInput("unbounded");

  VPolytope v{d, affine_dimension(verts), std::move(verts)};
  return v;
}

HPolytope facets_from_vertices(const VPolytope& v) {
  const std::size_t d = v.ambient;
  check_dimension(d);
  if (v.vertices.empty() || affine_dimension(v.vertices) != d) throw InvalidInput("not full-dimensional");
  return {d, hull_facets(dedupe_points(v.vertices), d)};
}

VPolytope convex_hull(std::span<const VecQ> points) {
  if (points.empty()) throw InvalidInput("empty point set");
  const std::size_t d = points.front().size();
  check_dimension(d);
  auto pts = dedupe_points(points);
  const std::size_t k = affine_dimension(pts);
  if (k == 0) return {d, 0, pts};
  if (k == d) {
    auto facets = hull_facets(pts, d);
    return {d, d, hull_vertices(pts, facets, d)};
  }
  auto frame = affine_frame(pts);
  std::vector<VecQ> local;
  for (const auto& p : pts) local.push_back(frame.coordinates(p));
  auto facets = hull_facets(local, k);
  std::vector<VecQ> verts;
  for (const auto& c : hull_vertices(local, facets, k)) verts.push_back(frame.lift(c));
  std::sort(verts.begin(), verts.end(), LexLess{});
  return {d, k, std::move(verts)};
}

std::pair<HPolytope, VPolytope> dual_polytope(std::span<const VecQ> rays, std::span<const Rational> coeffs) {
  if (rays.empty()) throw InvalidInput("no rays");
  if (rays.size() != coeffs.size()) throw InvalidInput("rays and coeffs differ in length");
  const std::size_t d = rays.front().size();
  check_dimension(d);
  for (const auto& r : rays) {
    if (r.size() != d) throw InvalidInput("rays have inconsistent dimensions");
    if (is_zero(r)) throw InvalidInput("zero ray");
    for (const auto& x : r)
      if (x.get_den() != 1) throw InvalidInput("ray " + to_string(r) + " is not integral");
    if (primitive_integral(r) != r) throw InvalidInput("ray " + to_string(r) + " is not primitive");
  }
  for (const auto& c : coeffs) {
    if (c >= 1) throw InvalidInput("coefficient must be < 1");
    if (sgn(c) < 0) throw InvalidInput("coefficient must be >= 0");
  }
  if (rank(std::vector<VecQ>(rays.begin(), rays.end()), d) < d) throw InvalidInput("degenerate fan");

  ConeH recession{d, {}};
  for (const auto& r : rays) recession.normals.push_back(-r);
  auto rec = extreme_rays(recession);
  if (!rec.rays.empty() || !rec.lineality.empty()) throw InvalidInput("not a Fano configuration");

  HPolytope all{d, {}};
  for (std::size_t i = 0; i < rays.size(); ++i) all.constraints.push_back({rays[i], coeffs[i] - 1});
  VPolytope v = vertices_from_facets(all);

  // Keep only facet-defining ray constraints, in input order.
  HPolytope h{d, {}};
  for (const auto& c : all.constraints) {
    std::vector<VecQ> tight;
    for (const auto& u : v.vertices)
      if (c.tight(u)) tight.push_back(u);
    if (!tight.empty() && affine_dimension(tight) + 1 == d) h.constraints.push_back(c);
  }
  return {std::move(h), std::move(v)};
}

Fan normal_fan(const VPolytope& p) {
  if (!p.full_dimensional()) throw InvalidInput("not full-dimensional");
  Fan fan{p.ambient, {}};
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    ConeH c{p.ambient, {}};
    for (std::size_t j = 0; j < p.vertices.size(); ++j)
      if (j != i) c.normals.push_back(primitive_integral(p.vertices[i] - p.vertices[j]));
    fan.cones.push_back({i, p.vertices[i], std::move(c)});
  }
  return fan;
}

Rational simplex_volume(const Simplex& s) {
  const std::size_t d = s.size() - 1;
  MatQ m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = s[i + 1][j] - s[0][j];
  Rational det = abs(determinant(std::move(m)));
  Integer fact = 1;
  for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<unsigned long>(k);
  return det / Rational(fact);
}

std::vector<Simplex> triangulate(const VPolytope& p) {
  std::vector<std::size_t> order(p.vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(p.vertices[a], p.vertices[b]); });
  return triangulate(p, order);
}

std::vector<Simplex> triangulate(const VPolytope& p, std::span<const std::size_t> vertex_priority) {
  const std::size_t d = p.ambient;
  auto h = facets_from_vertices(p);
  const auto& verts = p.vertices;

  std::vector<std::size_t> rank_of(verts.size());
  for (std::size_t r = 0; r < vertex_priority.size(); ++r) rank_of[vertex_priority[r]] = r;

  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& f : h.constraints) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (f.tight(verts[i])) s.push_back(i);
    facet_sets.push_back(std::move(s));
  }

  auto dim_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<VecQ> pts;
    for (auto i : idx) pts.push_back(verts[i]);
    return affine_dimension(pts);
  };

  std::vector<std::vector<std::size_t>> out;
  auto recurse = [&](auto&& self, const std::vector<std::size_t>& face, std::size_t k,
                     std::vector<std::size_t>& prefix) -> void {
    if (face.size() == k + 1) {
      auto s = prefix;
      s.insert(s.end(), face.begin(), face.end());
      out.push_back(std::move(s));
      return;
    }
    std::size_t apex = *std::min_element(face.begin(), face.end(),
                                         [&](std::size_t a, std::size_t b) { return rank_of[a] < rank_of[b]; });
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& fs : facet_sets) {
      std::vector<std::size_t> g;
      std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(), std::back_inserter(g));
      if (g.size() == face.size() || std::binary_search(g.begin(), g.end(), apex)) continue;
      if (g.size() >= k && dim_of(g) + 1 == k) subfaces.insert(std::move(g));
    }
    prefix.push_back(apex);
    for (const auto& g : subfaces) self(self, g, k - 1, prefix);
    prefix.pop_back();
  };

  std::vector<std::size_t> all(verts.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> prefix;
  recurse(recurse, all, d, prefix);

  std::vector<Simplex> simplices;
  for (const auto& s : out) {
    Simplex sx;
    for (auto i : s) sx.push_back(verts[i]);
    simplices.push_back(std::move(sx));
  }
  return simplices;
}

}  // namespace kstab
