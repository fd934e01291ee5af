#include "kstab/rational.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>
#include <vector>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  Integer n(strip_plus(num), 10);
  Integer d(strip_plus(den), 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const VecQ& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

std::string to_decimal(const Rational& q, int digits) {
  digits = std::max(digits, 1);
  mpf_class f(q, 64 + static_cast<mp_bitcnt_t>(digits) * 4);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

double to_double(const Rational& q) { return q.get_d(); }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

VecQ zeros(std::size_t d) { return VecQ(d, Rational(0)); }

VecQ unit(std::size_t d, std::size_t i) {
  VecQ e = zeros(d);
  e[i] = 1;
  return e;
}

VecQ from_ints(std::span<const long> xs) {
  VecQ v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rational dot(const VecQ& a, const VecQ& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const VecQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

VecQ operator+(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecQ operator-(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecQ operator-(const VecQ& a) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

VecQ operator*(const Rational& s, const VecQ& a) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

VecQ& operator+=(VecQ& a, const VecQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Integer denominator_lcm(const VecQ& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

VecQ primitive_integral(const VecQ& v) {
  if (is_zero(v)) return v;
  Integer l = denominator_lcm(v);
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  VecQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

bool same_ray(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return primitive_integral(a) == primitive_integral(b);
}

bool lex_less(const VecQ& a, const VecQ& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

}  // namespace kstab
