#include "cohomlen/family.hpp"

#include <algorithm>

#include "cohomlen/errors.hpp"

namespace cohomlen {

IdealFamily IdealFamily::powers(MonomialIdeal base) { return {std::move(base), FamilyKind::powers, {}}; }

IdealFamily IdealFamily::saturated_powers(MonomialIdeal base) {
  return {std::move(base), FamilyKind::saturated_powers, {}};
}

IdealFamily IdealFamily::integral_closure_powers(MonomialIdeal base) {
  return {std::move(base), FamilyKind::integral_closure_powers, {}};
}

IdealFamily IdealFamily::explicit_list(std::vector<MonomialIdeal> members) {
  if (members.empty()) throw DomainError("explicit family needs at least one member");
  for (const auto& m : members)
    if (m.dim() != members.front().dim()) throw DimensionMismatch("explicit family members in different rings");
  IdealFamily f{members.front(), FamilyKind::explicit_list, std::move(members)};
  return f;
}

std::size_t IdealFamily::dim() const { return base.dim(); }

FamilyMember FamilyMember::from_ideal(MonomialIdeal ideal) {
  FamilyMember m;
  m.dim_ = ideal.dim();
  m.base_ = ideal;
  m.ideal_ = std::move(ideal);
  return m;
}

FamilyMember FamilyMember::integral_closure(const MonomialIdeal& base, std::size_t n) {
  if (base.is_zero()) return from_ideal(base);
  if (n == 0) return from_ideal(MonomialIdeal::unit(base.dim()));
  FamilyMember m;
  m.dim_ = base.dim();
  m.n_ = n;
  m.base_ = base;
  auto polys = std::make_shared<std::vector<NewtonPolyhedron>>();
  for (const auto& local : all_localizations(base)) polys->push_back(newton_polyhedron(local));
  m.local_polyhedra_ = std::move(polys);
  return m;
}

const MonomialIdeal& FamilyMember::ideal() const {
  if (!ideal_) throw DomainError("integral-closure member has no stored generator list");
  return *ideal_;
}

bool FamilyMember::contains(const ExponentVector& a) const { return contains_localized(a, VarMask{}); }

bool FamilyMember::contains_localized(const ExponentVector& a, VarMask f) const {
  if (!a.is_nonnegative()) throw DomainError("membership query " + a.to_string() + " has a negative exponent");
  if (ideal_) {
    return std::any_of(ideal_->generators().begin(), ideal_->generators().end(), [&](const ExponentVector& g) {
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!f.contains(i) && g[i] > a[i]) return false;
      return true;
    });
  }
  return (*local_polyhedra_)[f.bits()].contains_scaled(a.zeroed(f), n_);
}

bool FamilyMember::is_zero() const { return ideal_ && ideal_->is_zero(); }

bool FamilyMember::is_unit() const { return ideal_ ? ideal_->is_unit() : base_.is_unit(); }

ExponentVector FamilyMember::max_exponents() const {
  if (ideal_) return ideal_->max_exponents();
  auto m = base_.max_exponents();
  for (std::size_t i = 0; i < m.size(); ++i) m[i] *= static_cast<Exponent>(n_);
  return m;
}

FamilyMember family_member(const IdealFamily& family, std::size_t n) {
  if (n == 0) return FamilyMember::from_ideal(MonomialIdeal::unit(family.dim()));
  switch (family.kind) {
    case FamilyKind::powers:
      return FamilyMember::from_ideal(power(family.base, n));
    case FamilyKind::saturated_powers:
      return FamilyMember::from_ideal(saturate(power(family.base, n)));
    case FamilyKind::integral_closure_powers:
      return FamilyMember::integral_closure(family.base, n);
    case FamilyKind::explicit_list:
      if (n > family.members.size())
        throw RangeError("explicit family has " + std::to_string(family.members.size()) + " members, asked for n=" +
                         std::to_string(n));
      return FamilyMember::from_ideal(family.members[n - 1]);
  }
  throw DomainError("unknown family kind");
}

MonomialIdeal integral_closure_power(const MonomialIdeal& base, std::size_t n) {
  if (base.is_zero()) return base;
  if (n == 0 || base.is_unit()) return MonomialIdeal::unit(base.dim());
  const auto poly = newton_polyhedron(base);
  auto top = base.max_exponents();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < top.size(); ++i) {
    top[i] *= static_cast<Exponent>(n);
    points *= static_cast<std::uint64_t>(top[i] + 1);
    if (points > 50'000'000) throw ResourceError("integral-closure box too large to enumerate");
  }
  std::vector<ExponentVector> gens;
  ExponentVector a(base.dim());
  while (true) {
    if (poly.contains_scaled(a, n)) gens.push_back(a);
    std::size_t k = 0;
    while (k < a.size() && ++a[k] > top[k]) a[k++] = 0;
    if (k == a.size()) break;
  }
  return MonomialIdeal::minimalize(base.dim(), std::move(gens));
}

bool graded_containment_holds(const IdealFamily& family) {
  if (family.kind != FamilyKind::explicit_list) return true;
  const auto& m = family.members;
  for (std::size_t a = 1; a <= m.size(); ++a)
    for (std::size_t b = a; a + b <= m.size(); ++b) {
      const auto& target = m[a + b - 1];
      for (const auto& g : m[a - 1].generators())
        for (const auto& h : m[b - 1].generators())
          if (!target.contains(g + h)) return false;
    }
  return true;
}

}  // namespace cohomlen
