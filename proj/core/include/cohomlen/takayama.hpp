#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cohomlen/family.hpp"
#include "cohomlen/homology.hpp"
#include "cohomlen/monomial_ideal.hpp"
#include "cohomlen/simplicial_complex.hpp"

namespace cohomlen {

/// dim_k H^i_m(R/I)_a for one degree a in Z^d.
struct GradedPieceQuery {
  MonomialIdeal ideal;
  std::size_t index = 0;  // cohomological index i
  ExponentVector degree;
};

/// lambda(H^i_m(R/I)): a natural number with its graded support, or infinite.
struct LengthResult {
  bool infinite = false;
  std::uint64_t value = 0;
  /// Nonzero graded pieces in lexicographic degree order (finite results only).
  std::vector<std::pair<ExponentVector, std::size_t>> support;

  static LengthResult infinity() { return {true, 0, {}}; }
  friend bool operator==(const LengthResult&, const LengthResult&) = default;
};

struct ScanOptions {
  FieldSpec field;
  unsigned threads = 1;
  bool collect_support = true;
};

/// For each degree a in the box prod [0, M_i], the set of masks F with
/// x^a in (I_n)_F, packed 2^d bits per point. Past M_i membership no longer
/// changes, so any a in N^d is answered by clamping.
class LocalizationTable {
public:
  explicit LocalizationTable(const FamilyMember& member);

  std::size_t dim() const { return dim_; }
  /// M with M_i = 1 + the largest relevant exponent of x_i.
  const ExponentVector& bound() const { return bound_; }
  std::size_t point_count() const { return points_; }
  std::size_t words_per_point() const { return words_per_point_; }

  /// Whether x^{clamp(a)} lies in I_F; `a` must be nonnegative.
  bool member(const ExponentVector& a, VarMask f) const;
  std::span<const std::uint64_t> words_at(std::size_t linear) const {
    return {bits_.data() + linear * words_per_point_, words_per_point_};
  }
  std::size_t linear_index(const ExponentVector& a) const;
  ExponentVector point_at(std::size_t linear) const;

  /// Delta_a for any a in Z^d.
  SimplicialComplex delta(const ExponentVector& a) const;

private:
  std::size_t dim_ = 0;
  ExponentVector bound_;
  std::vector<std::size_t> stride_;
  std::size_t points_ = 0;
  std::size_t words_per_point_ = 1;
  std::vector<std::uint64_t> bits_;
};

/// Delta_a(I) straight from the definition: faces F of [d] minus G_a with
/// x^{a+} not in I_{F union G_a}.
SimplicialComplex delta_complex(const MonomialIdeal& ideal, const ExponentVector& a);

/// dim H^i_m(R/I)_a via reduced homology of Delta_a(I) in index i - |G_a| - 1.
std::size_t graded_dim(const GradedPieceQuery& q, FieldSpec field = {});

/// M_i = 1 + max exponent of x_i over the generators.
ExponentVector support_bound(const MonomialIdeal& ideal);

/// True iff lambda(H^i_m(R/I)) is finite. Scans every sign pattern and the
/// boundary of the clamped box; each of those stands for infinitely many degrees.
bool finiteness_oracle(const MonomialIdeal& ideal, std::size_t i, FieldSpec field = {}, unsigned threads = 1);
bool finiteness_oracle(const LocalizationTable& table, std::size_t i, const ScanOptions& opts);

/// lambda(H^i_m(R/I)) as the sum of graded pieces over the clamped box, or infinite.
LengthResult total_length(const MonomialIdeal& ideal, std::size_t i, FieldSpec field = {}, unsigned threads = 1);
LengthResult total_length(const FamilyMember& member, std::size_t i, const ScanOptions& opts);
LengthResult total_length(const LocalizationTable& table, std::size_t i, const ScanOptions& opts);

/// Independent check of Takayama's formula: cohomology in index i of the
/// degree-a strand of the Cech complex of R/I on x_1..x_d, ranks over Q.
std::size_t cech_oracle(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a);

}  // namespace cohomlen
