#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cohomlen/exponent_vector.hpp"

namespace cohomlen {

/// Downward-closed family of subsets of {0, ..., d-1}, stored as a bitset over
/// all 2^d subsets (bit F set iff F is a face). d is capped at 16.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They are different values.
class SimplicialComplex {
public:
  static constexpr std::size_t max_vertices = 16;

  SimplicialComplex() = default;

  static SimplicialComplex void_complex(std::size_t d);
  static SimplicialComplex irrelevant(std::size_t d);
  /// Every subset of `vertices` (the full simplex on them).
  static SimplicialComplex simplex(std::size_t d, VarMask vertices);
  static SimplicialComplex from_facets(std::size_t d, std::span<const VarMask> facets);
  /// Takes a raw face bitset; throws DomainError unless it is downward closed.
  static SimplicialComplex from_face_bits(std::size_t d, std::vector<std::uint64_t> words);

  std::size_t ambient_dim() const { return dim_; }
  bool contains(VarMask face) const { return (words_[face.bits() >> 6] >> (face.bits() & 63)) & 1u; }
  bool is_void() const;
  bool is_irrelevant() const;

  std::vector<VarMask> faces() const;
  /// Maximal faces, in increasing bit order.
  std::vector<VarMask> facets() const;
  /// Subsets not in the complex all of whose proper subsets are.
  std::vector<VarMask> minimal_nonfaces() const;
  VarMask vertices() const;
  std::size_t face_count() const;

  /// Cone over a new vertex with index d; the ambient dimension grows by one.
  SimplicialComplex cone() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  SimplicialComplex(std::size_t d, std::vector<std::uint64_t> words) : dim_(d), words_(std::move(words)) {}
  static std::size_t word_count(std::size_t d) { return d >= 6 ? (std::size_t{1} << (d - 6)) : 1; }

  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_{0};
};

}  // namespace cohomlen
