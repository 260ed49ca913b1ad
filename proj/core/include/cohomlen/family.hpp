#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cohomlen/monomial_ideal.hpp"
#include "cohomlen/polyhedra.hpp"

namespace cohomlen {

enum class FamilyKind { powers, saturated_powers, integral_closure_powers, explicit_list };

/// A graded family (I_n) with I_0 = R.
struct IdealFamily {
  MonomialIdeal base;
  FamilyKind kind = FamilyKind::powers;
  std::vector<MonomialIdeal> members;  // explicit_list only; members[0] is I_1

  static IdealFamily powers(MonomialIdeal base);
  static IdealFamily saturated_powers(MonomialIdeal base);
  static IdealFamily integral_closure_powers(MonomialIdeal base);
  static IdealFamily explicit_list(std::vector<MonomialIdeal> members);

  std::size_t dim() const;
};

/// I_n of a family. For integral closures this is a membership predicate
/// backed by the Newton polyhedra of the localizations of the base ideal.
class FamilyMember {
public:
  static FamilyMember from_ideal(MonomialIdeal ideal);
  static FamilyMember integral_closure(const MonomialIdeal& base, std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t n() const { return n_; }
  bool has_generators() const { return ideal_.has_value(); }
  /// Throws DomainError for closure members; use integral_closure_power to materialize.
  const MonomialIdeal& ideal() const;

  bool contains(const ExponentVector& a) const;
  /// x^a in (I_n)_F.
  bool contains_localized(const ExponentVector& a, VarMask f) const;
  bool is_zero() const;
  bool is_unit() const;

  /// Componentwise bound past which membership in every localization is constant.
  ExponentVector max_exponents() const;

private:
  std::size_t dim_ = 0;
  std::size_t n_ = 1;
  std::optional<MonomialIdeal> ideal_;
  MonomialIdeal base_;
  // Newton polyhedron of base_F for every mask F.
  std::shared_ptr<const std::vector<NewtonPolyhedron>> local_polyhedra_;
};

/// Throws RangeError for an explicit-list index past the stored members.
FamilyMember family_member(const IdealFamily& family, std::size_t n);

/// Integral closure of I^n as an explicit ideal: the lattice points of
/// n * conv(I), minimalized. Exhaustive over [0, n * max]^d.
MonomialIdeal integral_closure_power(const MonomialIdeal& base, std::size_t n);

/// Checks I_n * I_m in I_{n+m} for every stored pair of an explicit list,
/// generator by generator. Always true for the other kinds.
bool graded_containment_holds(const IdealFamily& family);

}  // namespace cohomlen
