#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cohomlen {

using Exponent = std::int64_t;

/// Subset of variable indices {0, ..., d-1} packed into a word. Supports d <= 32.
class VarMask {
public:
  constexpr VarMask() = default;
  constexpr explicit VarMask(std::uint32_t bits) : bits_(bits) {}

  static VarMask of(std::initializer_list<std::size_t> indices);
  static constexpr VarMask full(std::size_t d) {
    return VarMask(d >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << d) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(VarMask other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VarMask operator|(VarMask o) const { return VarMask(bits_ | o.bits_); }
  constexpr VarMask operator&(VarMask o) const { return VarMask(bits_ & o.bits_); }
  constexpr VarMask without(VarMask o) const { return VarMask(bits_ & ~o.bits_); }
  constexpr VarMask with(std::size_t i) const { return VarMask(bits_ | (std::uint32_t{1} << i)); }

  constexpr auto operator<=>(const VarMask&) const = default;

  std::vector<std::size_t> indices() const;

private:
  std::uint32_t bits_ = 0;
};

/// Degree vector a in Z^d. Monomial exponents are the nonnegative ones.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t d) : entries_(d, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const Exponent> view() const { return entries_; }
  const std::vector<Exponent>& entries() const { return entries_; }

  bool is_nonnegative() const;
  bool is_zero() const;
  Exponent total_degree() const;

  /// G_a, the coordinates holding negative entries.
  VarMask negative_support() const;
  /// a^+, negative entries clamped to zero.
  ExponentVector positive_part() const;
  /// Copy with every coordinate in `mask` set to zero.
  ExponentVector zeroed(VarMask mask) const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const;

private:
  std::vector<Exponent> entries_;
};

/// Overflow-checked exponent addition; throws ResourceError on overflow.
Exponent checked_add(Exponent a, Exponent b);

}  // namespace cohomlen
