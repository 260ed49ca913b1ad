#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cohomlen/rational.hpp"

namespace cohomlen {

/// f(n) = polys[n mod period](n) for n >= valid_from. Coefficients ascending.
struct QuasiPolynomial {
  std::size_t period = 1;
  std::vector<std::vector<Rational>> polys;
  std::size_t valid_from = 0;

  Rational evaluate(std::size_t n) const;
  /// Largest degree with a nonzero coefficient over all constituents; -1 for f = 0.
  int degree() const;
  /// Coefficient of n^k in the constituent for residue r.
  const Rational& coefficient(std::size_t r, std::size_t k) const { return polys[r][k]; }

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

struct FitOptions {
  std::size_t max_degree = 5;
  std::size_t max_period = 2;
};

/// Number of values (counting n = 0) that fit_quasipolynomial needs for `opts`.
std::size_t required_points(const FitOptions& opts);

/// Exact fit of values[n], n = 0, 1, .... Candidates (period, degree, valid_from)
/// are tried in lexicographic order with valid_from <= (N-1)/2. Each candidate
/// interpolates (degree+1)*period consecutive values from valid_from and must
/// reproduce every later value exactly; at least max(5, 2*period) of them.
/// Throws InsufficientData or NoFitFound.
QuasiPolynomial fit_quasipolynomial(std::span<const Integer> values, const FitOptions& opts = {});

/// numerator / prod_j (1 - x^{b_j}). Numerator coefficients ascending.
struct RationalGeneratingFunction {
  std::vector<Integer> numerator;
  std::vector<std::size_t> denominator_factors;  // ascending

  /// First `count` series coefficients.
  std::vector<Integer> series(std::size_t count) const;
  std::string to_string() const;

  friend bool operator==(const RationalGeneratingFunction&, const RationalGeneratingFunction&) = default;
};

/// Generating function of the sequence that equals `prefix` for n < qp.valid_from
/// and qp afterwards. Starts from (1 - x^period)^(deg+1) and cancels common
/// cyclotomic-style factors. Throws ConsistencyError when the numerator does not
/// terminate or has non-integer coefficients.
RationalGeneratingFunction to_generating_function(const QuasiPolynomial& qp, std::span<const Integer> prefix);

}  // namespace cohomlen
