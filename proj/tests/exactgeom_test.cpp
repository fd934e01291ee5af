#include <gtest/gtest.h>

#include <algorithm>

#include "kstab/errors.hpp"
#include "kstab/exactgeom.hpp"
#include "kstab/moments.hpp"
#include "support.hpp"

namespace kstab {
namespace {

using testing::Q;
using testing::V;

std::vector<VecQ> sorted(std::vector<VecQ> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

VPolytope square() { return convex_hull(std::vector<VecQ>{V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})}); }

TEST(DualPolytope, ProjectivePlane) {
  std::vector<VecQ> rays{V({1, 0}), V({0, 1}), V({-1, -1})};
  std::vector<Rational> c(3, Rational(0));
  auto [h, p] = dual_polytope(rays, c);
  EXPECT_EQ(p.vertices, sorted({V({-1, -1}), V({2, -1}), V({-1, 2})}));
  EXPECT_EQ(h.constraints.size(), 3u);
}

TEST(DualPolytope, WeightedP112) {
  std::vector<VecQ> rays{V({1, 0}), V({0, 1}), V({-1, -2})};
  std::vector<Rational> c(3, Rational(0));
  EXPECT_EQ(dual_polytope(rays, c).second.vertices, sorted({V({-1, -1}), V({-1, 1}), V({3, -1})}));
}

TEST(DualPolytope, BoundaryCoefficientsShiftFacets) {
  std::vector<VecQ> rays{V({1, 0}), V({0, 1}), V({-1, -1})};
  std::vector<Rational> c{Q(1, 2), Rational(0), Rational(0)};
  auto p = dual_polytope(rays, c).second;
  EXPECT_EQ(p.vertices, sorted({V({2, -1}), {Q(-1, 2), Q(-1)}, {Q(-1, 2), Q(3, 2)}}));
}

TEST(DualPolytope, Errors) {
  std::vector<Rational> c2(2, Rational(0)), c3(3, Rational(0));
  auto msg = [](auto&& f) {
    try {
      f();
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  std::vector<VecQ> line{V({1, 0}), V({-1, 0})};
  EXPECT_NE(msg([&] { dual_polytope(line, c2); }).find("degenerate fan"), std::string::npos);
  std::vector<VecQ> half{V({1, 0}), V({0, 1}), V({-1, 0})};
  EXPECT_NE(msg([&] { dual_polytope(half, c3); }).find("not a Fano configuration"), std::string::npos);
  std::vector<VecQ> p2{V({1, 0}), V({0, 1}), V({-1, -1})};
  std::vector<Rational> bad{Rational(1), Rational(0), Rational(0)};
  EXPECT_NE(msg([&] { dual_polytope(p2, bad); }).find("coefficient must be < 1"), std::string::npos);
  std::vector<VecQ> imprim{V({2, 0}), V({0, 1}), V({-1, -1})};
  EXPECT_NE(msg([&] { dual_polytope(imprim, c3); }).find("not primitive"), std::string::npos);
}

TEST(VerticesFromFacets, Examples) {
  HPolytope tri{2, {{V({1, 0}), 0}, {V({0, 1}), 0}, {V({-1, -1}), -1}}};
  EXPECT_EQ(vertices_from_facets(tri).vertices, sorted({V({0, 0}), V({1, 0}), V({0, 1})}));
  HPolytope p112{2, {{V({1, 0}), -1}, {V({0, 1}), -1}, {V({-1, -2}), -1}}};
  EXPECT_EQ(vertices_from_facets(p112).vertices, sorted({V({-1, -1}), V({-1, 1}), V({3, -1})}));
  HPolytope empty{1, {{V({1}), 0}, {V({-1}), 1}}};
  EXPECT_THROW(vertices_from_facets(empty), InvalidInput);
}

TEST(FacetsFromVertices, Examples) {
  EXPECT_EQ(facets_from_vertices(square()).constraints.size(), 4u);
  auto h = facets_from_vertices(convex_hull(std::vector<VecQ>{V({-1, -1}), V({2, -1}), V({-1, 2})}));
  std::vector<HalfSpace> want{{V({-1, -1}), -1}, {V({0, 1}), -1}, {V({1, 0}), -1}};
  auto got = h.constraints;
  std::sort(got.begin(), got.end(), [](const HalfSpace& a, const HalfSpace& b) { return lex_less(a.normal, b.normal); });
  EXPECT_EQ(got, want);
  VPolytope seg{2, 1, {V({0, 0}), V({1, 1})}};
  EXPECT_THROW(facets_from_vertices(seg), InvalidInput);
}

TEST(NormalFan, SquareQuadrants) {
  auto fan = normal_fan(square());
  ASSERT_EQ(fan.cones.size(), 4u);
  for (const auto& c : fan.cones) {
    if (c.vertex != V({0, 0})) continue;
    EXPECT_TRUE(c.cone.contains(V({1, 2})));
    EXPECT_TRUE(c.cone.contains(V({0, 1})));
    EXPECT_FALSE(c.cone.contains(V({-1, 1})));
  }
}

TEST(NormalFan, P112DirectionLiesInTopVertexCone) {
  auto p = convex_hull(std::vector<VecQ>{V({-1, -1}), V({-1, 1}), V({3, -1})});
  auto fan = normal_fan(p);
  auto idx = fan.cones_containing(V({0, -1}));
  ASSERT_EQ(idx.size(), 1u);
  EXPECT_EQ(fan.cones[idx[0]].vertex, V({-1, 1}));
}

TEST(ExtremeRays, Examples) {
  auto g = extreme_rays(ConeH{2, {V({1, 0}), V({0, 1})}});
  EXPECT_EQ(sorted(g.rays), sorted({V({-1, 0}), V({0, -1})}));
  EXPECT_TRUE(g.lineality.empty());
  g = extreme_rays(ConeH{2, {V({0, 1}), V({-2, 1})}});
  // (1,-2) is an interior member; the wall -2v1 + v2 = 0 carries (-1,-2).
  EXPECT_EQ(sorted(g.rays), sorted({V({1, 0}), V({-1, -2})}));
  EXPECT_TRUE(testing::in_conic_hull(g.rays, {}, V({1, -2})));
  g = extreme_rays(ConeH{2, {}});
  EXPECT_TRUE(g.rays.empty());
  EXPECT_EQ(g.lineality.size(), 2u);
}

TEST(Triangulate, Examples) {
  auto tri = convex_hull(std::vector<VecQ>{V({0, 0}), V({1, 0}), V({0, 1})});
  EXPECT_EQ(triangulate(tri).size(), 1u);
  auto sq = triangulate(square());
  ASSERT_EQ(sq.size(), 2u);
  for (const auto& s : sq) EXPECT_EQ(simplex_volume(s), Q(1, 2));
  std::vector<VecQ> hex{V({1, 0}), V({0, 1}), V({-1, 1}), V({-1, 0}), V({0, -1}), V({1, -1})};
  auto h = triangulate(convex_hull(hex));
  EXPECT_EQ(h.size(), 4u);
  Rational total = 0;
  for (const auto& s : h) total += simplex_volume(s);
  EXPECT_EQ(total, testing::polygon_moments(hex).area);
  EXPECT_EQ(total, Rational(3));
}

// --- properties ---------------------------------------------------------

TEST(ExactgeomProperty, RoundTripRandomPolytopes) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
    auto p = testing::random_polytope(rng, d);
    auto h = facets_from_vertices(p);
    for (const auto& c : h.constraints) {
      ASSERT_EQ(c.normal, primitive_integral(c.normal));
      for (const auto& u : p.vertices) ASSERT_TRUE(c.contains(u));
    }
    auto back = vertices_from_facets(h);
    ASSERT_EQ(sorted(back.vertices), sorted(p.vertices)) << "d=" << d << " case " << i;
    for (const auto& u : back.vertices) {
      std::size_t tight = 0;
      for (const auto& c : h.constraints) tight += c.tight(u);
      ASSERT_GE(tight, d);
    }
  }
}

TEST(ExactgeomProperty, FanCovering) {
  testing::Rng rng(12);
  std::vector<VPolytope> polys;
  for (const auto& e : testing::corpus_contexts()) polys.push_back(e.ctx.polytope());
  polys.push_back(square());
  for (const auto& p : polys) {
    auto fan = normal_fan(p);
    for (int k = 0; k < 1000; ++k) {
      VecQ v = testing::random_direction(rng, p.ambient, k < 500 ? 2 : 40);
      auto in = fan.cones_containing(v);
      ASSERT_GE(in.size(), 1u);
      std::size_t interior = 0;
      for (const auto& c : fan.cones)
        interior += std::all_of(c.cone.normals.begin(), c.cone.normals.end(),
                                [&](const VecQ& a) { return sgn(dot(a, v)) < 0; });
      // Interior of exactly one cone, or on a shared wall of several.
      ASSERT_TRUE((interior == 1 && in.size() == 1) || (interior == 0 && in.size() >= 2));
      // Membership agrees with direct vertex evaluation.
      Rational low = support_min(p, v);
      for (auto i : in) ASSERT_EQ(dot(fan.cones[i].vertex, v), low);
    }
  }
}

TEST(ExactgeomProperty, TriangulationAdditivityAndOrder) {
  testing::Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
    auto p = testing::random_polytope(rng, d);
    std::vector<std::size_t> order(p.vertices.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = order.size() - 1 - k;
    Rational a = 0, b = 0;
    for (const auto& s : triangulate(p)) {
      ASSERT_GT(simplex_volume(s), 0);
      a += simplex_volume(s);
    }
    for (const auto& s : triangulate(p, order)) b += simplex_volume(s);
    ASSERT_EQ(a, b);
    if (d == 2) ASSERT_EQ(a, testing::polygon_moments(p.vertices).area);
  }
}

TEST(ExactgeomProperty, ExtremeRaysAreMinimal) {
  testing::Rng rng(14);
  for (int i = 0; i < 150; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(i % 3);
    ConeH c{d, {}};
    const long n = testing::uniform(rng, 1, static_cast<long>(d) + 3);
    for (long k = 0; k < n; ++k) c.normals.push_back(testing::random_direction(rng, d, 3));
    auto g = extreme_rays(c);
    for (std::size_t k = 0; k < g.rays.size(); ++k) {
      ASSERT_TRUE(c.contains(g.rays[k]));
      ASSERT_EQ(g.rays[k], primitive_integral(g.rays[k]));
      std::vector<VecQ> rest = g.rays;
      rest.erase(rest.begin() + static_cast<long>(k));
      ASSERT_FALSE(testing::in_conic_hull(rest, g.lineality, g.rays[k]));
    }
    for (const auto& l : g.lineality) {
      ASSERT_TRUE(c.contains(l));
      ASSERT_TRUE(c.contains(-l));
    }
    // The generators reach random members of the cone.
    for (int t = 0; t < 20; ++t) {
      VecQ v = testing::random_direction(rng, d, 5);
      if (c.contains(v)) ASSERT_TRUE(testing::in_conic_hull(g.rays, g.lineality, v));
    }
  }
}

}  // namespace
}  // namespace kstab
