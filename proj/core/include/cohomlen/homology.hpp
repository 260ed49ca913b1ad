#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cohomlen/simplicial_complex.hpp"

namespace cohomlen {

/// Coefficient field: characteristic 0 means Q, otherwise F_p.
class FieldSpec {
public:
  constexpr FieldSpec() = default;
  /// Throws DomainError unless `characteristic` is 0 or a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic);

  static constexpr FieldSpec rationals() { return FieldSpec(); }

  constexpr std::uint32_t characteristic() const { return characteristic_; }

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

private:
  std::uint32_t characteristic_ = 0;
};

/// Reduced homology dimensions dim H~_j(K; k) for j = -1, ..., d-1.
/// Entry j+1 of the result holds H~_j. Ranks of boundary matrices are
/// computed by fraction-free elimination over Q or modular elimination over F_p.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& k, FieldSpec field = {});

/// dim H~_j, or 0 when j lies outside -1..d-1.
std::size_t reduced_homology_dim(const SimplicialComplex& k, int j, FieldSpec field = {});

/// Whether the 1-skeleton is connected over the vertex set. Throws DomainError
/// for the void and irrelevant complexes.
bool is_connected(const SimplicialComplex& k);

/// Rank of a small integer matrix over the given field.
std::size_t matrix_rank(const std::vector<std::vector<int>>& rows, FieldSpec field = {});

/// Memoizes reduced homology by face bitset. Not thread-safe; use one per thread.
class HomologyCache {
public:
  explicit HomologyCache(FieldSpec field = {}) : field_(field) {}

  const std::vector<std::size_t>& dims(const SimplicialComplex& k);
  /// Same as dims() for a face bitset that is already known to be downward closed.
  const std::vector<std::size_t>& dims(std::size_t d, std::span<const std::uint64_t> words);
  FieldSpec field() const { return field_; }
  std::size_t size() const { return cache_.size(); }

private:
  struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const noexcept;
  };
  FieldSpec field_;
  std::unordered_map<std::vector<std::uint64_t>, std::vector<std::size_t>, WordsHash> cache_;
  std::vector<std::uint64_t> key_;
};

}  // namespace cohomlen
