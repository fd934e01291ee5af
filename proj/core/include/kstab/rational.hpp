#pragma once

// Exact rational scalars and vectors. Everything in the core is computed
// with these; doubles only ever appear as display annotations.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of M_R or N_R in lattice coordinates.
using VecQ = std::vector<Rational>;

/// Parses "p/q", "p" or a decimal-free integer string. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Always renders as "p/q", including "0/1" and "3/1".
std::string to_string(const Rational& q);
std::string to_string(const VecQ& v, char sep = ',');

/// Decimal rendering with `digits` significant digits (display only).
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

std::strong_ordering compare(const Rational& a, const Rational& b);

VecQ zeros(std::size_t d);
VecQ unit(std::size_t d, std::size_t i);
VecQ from_ints(std::span<const long> xs);

Rational dot(const VecQ& a, const VecQ& b);
bool is_zero(const VecQ& v);

VecQ operator+(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a);
VecQ operator*(const Rational& s, const VecQ& a);
VecQ& operator+=(VecQ& a, const VecQ& b);

/// The primitive integral vector on the ray through v (positive multiple).
/// Returns the zero vector for v = 0.
VecQ primitive_integral(const VecQ& v);

/// True when a = s * b for some rational s > 0. Both must be nonzero.
bool same_ray(const VecQ& a, const VecQ& b);

/// Least common multiple of all coordinate denominators.
Integer denominator_lcm(const VecQ& v);

bool lex_less(const VecQ& a, const VecQ& b);

}  // namespace kstab
