#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cohomlen {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalPoint = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_div(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
void make_primitive(IntVector& v);

/// Rank of a rational matrix given by rows.
std::size_t rank(std::vector<RationalPoint> rows);

/// Determinant of a square rational matrix.
Rational determinant(std::vector<RationalPoint> rows);

}  // namespace cohomlen
