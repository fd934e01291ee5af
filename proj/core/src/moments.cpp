#include "kstab/moments.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

Integer to_integer(i128 x) {
  bool neg = x < 0;
  u128 u = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

long to_long_checked(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidInput("lattice scan coordinates exceed 64-bit range");
  return z.get_si();
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long ceil_of(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_long_checked(c);
}

long floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return to_long_checked(f);
}

// Σ_{t=lo}^{hi} t and t^2 via the polynomial antiderivatives, valid for all signs.
i128 sum1(i128 lo, i128 hi) {
  auto g = [](i128 x) { return x * (x + 1) / 2; };
  return g(hi) - g(lo - 1);
}

i128 sum2(i128 lo, i128 hi) {
  auto f = [](i128 x) { return x * (x + 1) * (2 * x + 1) / 6; };
  return f(hi) - f(lo - 1);
}

struct IntConstraint {
  std::vector<long> a;
  long bound;  // <u, a> >= bound
};

struct ScanAccumulator {
  i128 count = 0;
  i128 w = 0;
  i128 q = 0;
  std::optional<i128> lambda_min;
};

void scan_dilate(const std::vector<IntConstraint>& cons, const std::vector<std::pair<long, long>>& box,
                 const std::vector<long>& v, ScanAccumulator& acc) {
  const std::size_t d = v.size();
  // partial[i] = Σ_{j<d-1} a_ij u_j for constraint i
  std::vector<long> partial(cons.size(), 0);

  auto visit_line = [&](i128 c) {
    long lo = box[d - 1].first, hi = box[d - 1].second;
    for (std::size_t i = 0; i < cons.size(); ++i) {
      long ad = cons[i].a[d - 1];
      long rhs = cons[i].bound - partial[i];
      if (ad > 0) {
        lo = std::max(lo, ceil_div(rhs, ad));
      } else if (ad < 0) {
        hi = std::min(hi, floor_div(rhs, ad));
      } else if (rhs > 0) {
        return;
      }
      if (lo > hi) return;
    }
    i128 n = hi - lo + 1;
    i128 e = v[d - 1];
    i128 st = sum1(lo, hi), st2 = sum2(lo, hi);
    acc.count += n;
    acc.w += n * c + e * st;
    acc.q += n * c * c + 2 * c * e * st + e * e * st2;
    i128 m = std::min(c + e * lo, c + e * hi);
    if (!acc.lambda_min || m < *acc.lambda_min) acc.lambda_min = m;
  };

  auto recurse = [&](auto&& self, std::size_t k, i128 c) -> void {
    if (k + 1 == d) {
      visit_line(c);
      return;
    }
    for (long x = box[k].first; x <= box[k].second; ++x) {
      for (std::size_t i = 0; i < cons.size(); ++i) partial[i] += cons[i].a[k] * x;
      self(self, k + 1, c + static_cast<i128>(v[k]) * x);
      for (std::size_t i = 0; i < cons.size(); ++i) partial[i] -= cons[i].a[k] * x;
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace

MomentData compute_moments(std::span<const Simplex> simplices) {
  const std::size_t d = simplices.front().size() - 1;
  Rational vol = 0;
  VecQ first = zeros(d);
  MatQ second(d, d);
  for (const auto& s : simplices) {
    Rational sv = simplex_volume(s);
    VecQ sum = zeros(d);
    MatQ outer(d, d);
    for (const auto& p : s) {
      sum += p;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) outer(i, j) += p[i] * p[j];
    }
    vol += sv;
    first += (sv / Rational(static_cast<long>(d + 1))) * sum;
    Rational w = sv / Rational(static_cast<long>((d + 1) * (d + 2)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) second(i, j) += w * (outer(i, j) + sum[i] * sum[j]);
  }
  MomentData m;
  m.volume = vol;
  m.barycenter = (1 / vol) * first;
  m.covariance = MatQ(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m.covariance(i, j) = second(i, j) / vol - m.barycenter[i] * m.barycenter[j];
  return m;
}

MomentData compute_moments(const VPolytope& p) {
  auto simplices = triangulate(p);
  return compute_moments(simplices);
}

Rational volume(const VPolytope& p) {
  Rational v = 0;
  for (const auto& s : triangulate(p)) v += simplex_volume(s);
  return v;
}

VecQ barycenter(const VPolytope& p) { return compute_moments(p).barycenter; }

MatQ covariance(const VPolytope& p) { return compute_moments(p).covariance; }

MatQ raw_second_moment(const MomentData& m) {
  const std::size_t d = m.barycenter.size();
  MatQ raw = m.covariance;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) raw(i, j) += m.barycenter[i] * m.barycenter[j];
  return raw;
}

Rational support_min(const VPolytope& p, const VecQ& v) {
  if (is_zero(v)) throw InvalidInput("zero direction");
  Rational best = dot(p.vertices.front(), v);
  for (const auto& u : p.vertices) {
    Rational x = dot(u, v);
    if (x < best) best = x;
  }
  return best;
}

long dilation_index(const VPolytope& p) {
  Integer l = 1;
  for (const auto& u : p.vertices) {
    Integer dl = denominator_lcm(u);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dl.get_mpz_t());
  }
  return to_long_checked(l);
}

LatticeSeries lattice_series(const VPolytope& p, const VecQ& v, long m_max) {
  if (is_zero(v)) throw InvalidInput("zero direction");
  if (v.size() != p.ambient) throw InvalidInput("direction has wrong dimension");
  std::vector<long> vi;
  for (const auto& x : v) {
    if (x.get_den() != 1) throw InvalidInput("direction must be integral");
    vi.push_back(to_long_checked(x.get_num()));
  }
  LatticeSeries s;
  s.r = dilation_index(p);
  s.direction = v;
  if (m_max < 3 * s.r) throw InvalidInput("insufficient series length");

  const std::size_t d = p.ambient;
  auto h = facets_from_vertices(p);
  for (long m = s.r; m <= m_max; m += s.r) {
    Rational mq(m);
    std::vector<IntConstraint> cons;
    for (const auto& c : h.constraints) {
      IntConstraint ic;
      for (const auto& a : c.normal) ic.a.push_back(to_long_checked(a.get_num()));
      ic.bound = ceil_of(mq * c.offset);
      cons.push_back(std::move(ic));
    }
    std::vector<std::pair<long, long>> box(d);
    for (std::size_t k = 0; k < d; ++k) {
      Rational lo = p.vertices.front()[k], hi = lo;
      for (const auto& u : p.vertices) {
        if (u[k] < lo) lo = u[k];
        if (u[k] > hi) hi = u[k];
      }
      box[k] = {ceil_of(mq * lo), floor_of(mq * hi)};
    }
    ScanAccumulator acc;
    scan_dilate(cons, box, vi, acc);
    if (acc.count == 0) throw CertificateFailure("empty dilate at m=" + std::to_string(m));
    s.rows.push_back({m, to_integer(acc.count), to_integer(acc.w), to_integer(acc.q),
                      Rational(to_integer(*acc.lambda_min))});
  }
  return s;
}

ExtrapolationResult extrapolate(const LatticeSeries& s) {
  if (s.rows.size() < 3) throw InvalidInput("extrapolation needs at least 3 rows");
  std::vector<Rational> f, q;
  for (const auto& row : s.rows) {
    Rational m(row.m);
    f.push_back(Rational(row.weight_sum) / (m * Rational(row.count)));
    q.push_back(Rational(row.square_sum) / (m * m * Rational(row.count)));
  }
  auto richardson = [&](const std::vector<Rational>& e) {
    std::vector<Rational> est;
    for (std::size_t i = 1; i < e.size(); ++i) {
      Rational m1(s.rows[i - 1].m), m2(s.rows[i].m);
      est.push_back((m2 * e[i] - m1 * e[i - 1]) / (m2 - m1));
    }
    return est;
  };
  auto fe = richardson(f);
  auto qe = richardson(q);
  ExtrapolationResult r;
  r.F0_est = fe.back();
  r.Q0_est = qe.back();
  for (std::size_t i = 1; i < fe.size(); ++i) {
    r.residuals.push_back(fe[i] - fe[i - 1]);
    r.q_residuals.push_back(qe[i] - qe[i - 1]);
  }
  return r;
}

}  // namespace kstab
