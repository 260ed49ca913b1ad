#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cohomlen/exponent_vector.hpp"

namespace cohomlen {

/// A monomial ideal of k[x_1..x_d], held as its minimal generating set.
///
/// Generators form an antichain under divisibility and are kept sorted
/// lexicographically, so two equal ideals always compare equal. The unit
/// ideal is the single generator 0 and the zero ideal has no generators.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  /// Reduces `gens` to the minimal generating set. Throws DimensionMismatch
  /// if a generator has the wrong length and DomainError on negative entries.
  static MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> gens);
  static MonomialIdeal unit(std::size_t dim);
  static MonomialIdeal zero(std::size_t dim);
  /// The ideal generated by the variables whose indices are in `vars`.
  static MonomialIdeal variables(std::size_t dim, VarMask vars);

  std::size_t dim() const { return dim_; }
  std::span<const ExponentVector> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  /// True iff x^a is in the ideal. `a` must be nonnegative.
  bool contains(const ExponentVector& a) const;

  /// Largest exponent of each variable over the generators.
  ExponentVector max_exponents() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens)
      : dim_(dim), gens_(std::move(gens)) {}

  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);

/// A^n by repeated multiplication; n = 0 yields the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, std::size_t n);

/// pi_F(I): every variable in F is set to 1.
MonomialIdeal localize(const MonomialIdeal& ideal, VarMask vars);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : m^infinity, as the intersection over i of I : x_i^infinity.
MonomialIdeal saturate(const MonomialIdeal& ideal);

/// All 2^d localizations, indexed by VarMask bits.
std::vector<MonomialIdeal> all_localizations(const MonomialIdeal& ideal);

}  // namespace cohomlen
