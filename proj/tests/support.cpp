#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kstab/moments.hpp"
#include "../core/src/detail/combinations.hpp"

namespace kstab::testing {

VPolytope random_polytope(Rng& rng, std::size_t d) {
  while (true) {
    std::vector<VecQ> pts;
    const long n = uniform(rng, static_cast<long>(d) + 1, static_cast<long>(d) + 6);
    for (long i = 0; i < n; ++i) {
      VecQ p;
      for (std::size_t k = 0; k < d; ++k) p.push_back(random_rational(rng, 12, 3));
      pts.push_back(std::move(p));
    }
    if (affine_dimension(pts) == d) return convex_hull(pts);
  }
}

MatQ random_unimodular(Rng& rng, std::size_t d) {
  MatQ u = MatQ::identity(d);
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 2));
    if (j >= i) ++j;
    MatQ e = MatQ::identity(d);
    e(i, j) = uniform(rng, -2, 2);
    u = e * u;
  }
  MatQ perm(d, d);
  std::vector<std::size_t> idx(d);
  for (std::size_t k = 0; k < d; ++k) idx[k] = k;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t k = 0; k < d; ++k) perm(k, idx[k]) = uniform(rng, 0, 1) ? 1 : -1;
  return perm * u;
}

VPolytope transform(const MatQ& u, const VPolytope& p) {
  std::vector<VecQ> pts;
  for (const auto& x : p.vertices) pts.push_back(u * x);
  return convex_hull(pts);
}

VPolytope dilate(const VPolytope& p, long k) {
  std::vector<VecQ> pts;
  for (const auto& x : p.vertices) pts.push_back(Rational(k) * x);
  return convex_hull(pts);
}

std::vector<VecQ> primitive_grid(std::size_t d, long bound) {
  std::vector<VecQ> out;
  VecQ v(d);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      if (!is_zero(v) && primitive_integral(v) == v) out.push_back(v);
      return;
    }
    for (long t = -bound; t <= bound; ++t) {
      v[k] = t;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

const std::vector<NamedContext>& corpus_contexts() {
  static const std::vector<NamedContext> all = [] {
    std::vector<NamedContext> out;
    for (const auto& spec : cli::corpus()) out.push_back({spec.name, cli::make_context(spec)});
    return out;
  }();
  return all;
}

std::vector<VecQ> ccw(std::vector<VecQ> vertices) {
  double cx = 0, cy = 0;
  for (const auto& v : vertices) {
    cx += v[0].get_d();
    cy += v[1].get_d();
  }
  cx /= static_cast<double>(vertices.size());
  cy /= static_cast<double>(vertices.size());
  std::sort(vertices.begin(), vertices.end(), [&](const VecQ& a, const VecQ& b) {
    return std::atan2(a[1].get_d() - cy, a[0].get_d() - cx) < std::atan2(b[1].get_d() - cy, b[0].get_d() - cx);
  });
  return vertices;
}

PolygonMoments polygon_moments(std::vector<VecQ> vertices) {
  auto vs = ccw(std::move(vertices));
  Rational a = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& p = vs[i];
    const auto& q = vs[(i + 1) % vs.size()];
    Rational x0 = p[0], y0 = p[1], x1 = q[0], y1 = q[1];
    Rational c = x0 * y1 - x1 * y0;
    a += c / 2;
    sx += (x0 + x1) * c / 6;
    sy += (y0 + y1) * c / 6;
    sxx += (x0 * x0 + x0 * x1 + x1 * x1) * c / 12;
    syy += (y0 * y0 + y0 * y1 + y1 * y1) * c / 12;
    sxy += (x0 * y1 + 2 * x0 * y0 + 2 * x1 * y1 + x1 * y0) * c / 24;
  }
  PolygonMoments m;
  m.area = a;
  m.centroid = {sx / a, sy / a};
  m.covariance = MatQ(2, 2);
  m.covariance(0, 0) = sxx / a - m.centroid[0] * m.centroid[0];
  m.covariance(1, 1) = syy / a - m.centroid[1] * m.centroid[1];
  m.covariance(0, 1) = m.covariance(1, 0) = sxy / a - m.centroid[0] * m.centroid[1];
  return m;
}

bool in_conic_hull(const std::vector<VecQ>& gens, const std::vector<VecQ>& lineality, const VecQ& target) {
  std::vector<VecQ> cols = gens;
  for (const auto& l : lineality) {
    cols.push_back(l);
    cols.push_back(-l);
  }
  const std::size_t d = target.size();
  if (is_zero(target)) return true;
  bool found = false;
  for (std::size_t k = 1; k <= std::min(d, cols.size()) && !found; ++k) {
    detail::for_each_combination(cols.size(), k, [&](std::span<const std::size_t> idx) {
      // Solve [cols_idx] x = target in the least-squares-free way: the
      // normal equations are exact when the columns are independent.
      MatQ a(d, k);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i) a(i, j) = cols[idx[j]][i];
      MatQ ata = a.transpose() * a;
      auto x = solve(ata, a.transpose() * target);
      if (!x) return true;
      if (a * *x != target) return true;
      if (std::any_of(x->begin(), x->end(), [](const Rational& t) { return sgn(t) < 0; })) return true;
      found = true;
      return false;
    });
  }
  return found;
}

NaiveLatticeRow naive_lattice_row(const VPolytope& p, const VecQ& v, long m) {
  auto h = facets_from_vertices(p);
  const std::size_t d = p.ambient;
  std::vector<std::pair<long, long>> box(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational lo = p.vertices[0][k], hi = lo;
    for (const auto& u : p.vertices) {
      lo = std::min(lo, u[k]);
      hi = std::max(hi, u[k]);
    }
    Rational mlo = m * lo, mhi = m * hi;
    Integer flo, chi;
    mpz_fdiv_q(flo.get_mpz_t(), mlo.get_num_mpz_t(), mlo.get_den_mpz_t());
    mpz_cdiv_q(chi.get_mpz_t(), mhi.get_num_mpz_t(), mhi.get_den_mpz_t());
    box[k] = {flo.get_si() - 1, chi.get_si() + 1};
  }
  NaiveLatticeRow row{0, 0, 0, 0};
  bool first = true;
  VecQ u(d);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      VecQ scaled = (Rational(1) / Rational(m)) * u;
      if (!h.contains(scaled)) return;
      Rational x = dot(u, v);
      row.count += 1;
      row.w += x.get_num();
      row.q += Rational(x * x).get_num();
      if (first || x < row.lambda_min) row.lambda_min = x;
      first = false;
      return;
    }
    for (long t = box[k].first; t <= box[k].second; ++t) {
      u[k] = t;
      rec(k + 1);
    }
  };
  rec(0);
  return row;
}

}  // namespace kstab::testing
