#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohomlen/family.hpp"
#include "cohomlen/quasi_polynomial.hpp"
#include "cohomlen/takayama.hpp"

namespace cohomlen {

struct LengthEntry {
  std::size_t n = 0;
  LengthResult result;
};

/// lambda(H^i_m(R/I_n)) for consecutive n.
struct LengthSequence {
  IdealFamily family;
  std::size_t index = 0;
  std::vector<LengthEntry> values;

  bool all_finite() const;
  /// Values for n = 0, 1, ..., last; lambda(0) = 0 since I_0 = R. Requires the
  /// stored entries to start at n = 1 and be finite.
  std::vector<Integer> from_zero() const;
};

/// Entries for n = first..last. Infinite entries are kept, never dropped.
LengthSequence length_sequence(const IdealFamily& family, std::size_t i, std::size_t first, std::size_t last,
                               const ScanOptions& opts = {});
inline LengthSequence length_sequence(const IdealFamily& family, std::size_t i, std::size_t count,
                                      const ScanOptions& opts = {}) {
  return length_sequence(family, i, 1, count, opts);
}

/// Fits the sequence extended by lambda(0) = 0. Throws DomainError on infinite
/// entries or when the entries do not start at n = 1.
QuasiPolynomial fit_quasipolynomial(const LengthSequence& seq, const FitOptions& opts);

struct VolumeLimitOptions {
  FieldSpec field;
  /// Finiteness of the integral-closure family is checked at this n; 0 means n = d.
  std::size_t check_n = 0;
  std::size_t max_candidates = 20'000'000;
  unsigned threads = 1;
};

/// lim lambda(H^i_m(R/closure(I^n))) / n^d as a sum over subcomplexes D of
/// Delta(I) with nonzero H~_{i-1}(D), each weighted by the volume of the
/// region of degrees whose complex is D. Throws DomainError when the
/// integral-closure family is infinite at the check point, ResourceError on
/// too many candidate complexes.
Rational limit_via_volume(const MonomialIdeal& ideal, std::size_t i, const VolumeLimitOptions& opts = {});

/// Non-certified tail statistics of lambda(n) / n^d.
struct GrowthEstimate {
  double limsup_est = 0;
  double liminf_est = 0;
  std::optional<int> fitted_degree;
  /// Average top-degree coefficient of the fit when it has degree d.
  std::optional<Rational> leading_coefficient;
  /// leading_coefficient when present, else lambda(N) / N^d.
  double trend = 0;
};

/// Needs at least 4 finite entries; the tail is the last half of them.
GrowthEstimate growth_estimate(const LengthSequence& seq, const FitOptions& opts);

}  // namespace cohomlen
