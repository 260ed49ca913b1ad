#include "cohomlen/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "cohomlen/errors.hpp"

namespace cohomlen {

VarMask VarMask::of(std::initializer_list<std::size_t> indices) {
  std::uint32_t bits = 0;
  for (auto i : indices) bits |= std::uint32_t{1} << i;
  return VarMask(bits);
}

std::vector<std::size_t> VarMask::indices() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("exponent overflow");
  return r;
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e >= 0; });
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
}

Exponent ExponentVector::total_degree() const {
  Exponent s = 0;
  for (auto e : entries_) s = checked_add(s, e);
  return s;
}

VarMask ExponentVector::negative_support() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < 0) bits |= std::uint32_t{1} << i;
  return VarMask(bits);
}

ExponentVector ExponentVector::positive_part() const {
  ExponentVector out(*this);
  for (auto& e : out.entries_) e = std::max<Exponent>(e, 0);
  return out;
}

ExponentVector ExponentVector::zeroed(VarMask mask) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (mask.contains(i)) out.entries_[i] = 0;
  return out;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.entries_[i] = checked_add(a[i], b[i]);
  return out;
}

ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.entries_[i] = std::max(a[i], b[i]);
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t dim, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != dim) throw DimensionMismatch("generator " + g.to_string() + " not of length " + std::to_string(dim));
    if (!g.is_nonnegative()) throw DomainError("generator " + g.to_string() + " has a negative exponent");
  }
  // A divisor has total degree no larger than its multiple, so scanning in
  // degree order only needs to test against already-kept generators.
  std::vector<std::pair<Exponent, ExponentVector>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) keyed.emplace_back(g.total_degree(), std::move(g));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  std::vector<ExponentVector> kept;
  for (auto& [deg, g] : keyed) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(dim, std::move(kept));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return MonomialIdeal(dim, {ExponentVector(dim)}); }

MonomialIdeal MonomialIdeal::zero(std::size_t dim) { return MonomialIdeal(dim, {}); }

MonomialIdeal MonomialIdeal::variables(std::size_t dim, VarMask vars) {
  std::vector<ExponentVector> gens;
  for (auto i : vars.indices()) {
    if (i >= dim) throw RangeError("variable index out of range");
    ExponentVector e(dim);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return minimalize(dim, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  if (a.size() != dim_) throw DimensionMismatch("membership query of wrong length");
  if (!a.is_nonnegative()) throw DomainError("membership query " + a.to_string() + " has a negative exponent");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(a); });
}

ExponentVector MonomialIdeal::max_exponents() const {
  ExponentVector m(dim_);
  for (const auto& g : gens_) m = componentwise_max(m, g);
  return m;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("product of ideals in different rings");
  std::vector<ExponentVector> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) prods.push_back(g + h);
  return MonomialIdeal::minimalize(a.dim(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, std::size_t n) {
  auto result = MonomialIdeal::unit(a.dim());
  for (std::size_t k = 0; k < n; ++k) result = multiply(result, a);
  return result;
}

MonomialIdeal localize(const MonomialIdeal& ideal, VarMask vars) {
  if (!vars.subset_of(VarMask::full(ideal.dim()))) throw RangeError("localization mask outside the variable range");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.zeroed(vars));
  return MonomialIdeal::minimalize(ideal.dim(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("intersection of ideals in different rings");
  std::vector<ExponentVector> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) lcms.push_back(componentwise_max(g, h));
  return MonomialIdeal::minimalize(a.dim(), std::move(lcms));
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.dim() == 0) return ideal;
  auto result = localize(ideal, VarMask::of({0}));
  for (std::size_t i = 1; i < ideal.dim(); ++i) result = intersect(result, localize(ideal, VarMask::of({i})));
  return result;
}

std::vector<MonomialIdeal> all_localizations(const MonomialIdeal& ideal) {
  if (ideal.dim() > 20) throw ResourceError("too many variables to tabulate all localizations");
  std::vector<MonomialIdeal> out;
  out.reserve(std::size_t{1} << ideal.dim());
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << ideal.dim()); ++f) out.push_back(localize(ideal, VarMask(f)));
  return out;
}

}  // namespace cohomlen
