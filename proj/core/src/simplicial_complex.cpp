#include "cohomlen/simplicial_complex.hpp"

#include <algorithm>

#include "cohomlen/errors.hpp"

namespace cohomlen {

namespace {

void check_dim(std::size_t d) {
  if (d > SimplicialComplex::max_vertices)
    throw ResourceError("simplicial complexes are limited to " + std::to_string(SimplicialComplex::max_vertices) +
                        " vertices");
}

bool closed_downward(std::size_t d, const std::vector<std::uint64_t>& words) {
  auto has = [&](std::uint32_t f) { return (words[f >> 6] >> (f & 63)) & 1u; };
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << d); ++f) {
    if (!has(f)) continue;
    for (std::uint32_t b = f; b != 0; b &= b - 1)
      if (!has(f & ~(b & -b))) return false;
  }
  return true;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::size_t d) {
  check_dim(d);
  return SimplicialComplex(d, std::vector<std::uint64_t>(word_count(d), 0));
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t d) {
  auto k = void_complex(d);
  k.words_[0] = 1;
  return k;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t d, VarMask vertices) {
  auto k = void_complex(d);
  if (!vertices.subset_of(VarMask::full(d))) throw RangeError("simplex vertex outside the ambient range");
  // Enumerate all submasks of `vertices`.
  std::uint32_t v = vertices.bits();
  for (std::uint32_t s = v;; s = (s - 1) & v) {
    k.words_[s >> 6] |= std::uint64_t{1} << (s & 63);
    if (s == 0) break;
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t d, std::span<const VarMask> facets) {
  auto k = void_complex(d);
  for (auto f : facets) {
    auto s = simplex(d, f);
    for (std::size_t w = 0; w < k.words_.size(); ++w) k.words_[w] |= s.words_[w];
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_face_bits(std::size_t d, std::vector<std::uint64_t> words) {
  check_dim(d);
  if (words.size() != word_count(d)) throw DimensionMismatch("face bitset of wrong size");
  if (d < 6) words[0] &= (std::uint64_t{1} << (std::size_t{1} << d)) - 1;
  if (!closed_downward(d, words)) throw DomainError("face family is not downward closed");
  return SimplicialComplex(d, std::move(words));
}

bool SimplicialComplex::is_void() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool SimplicialComplex::is_irrelevant() const { return face_count() == 1 && contains(VarMask{}); }

std::vector<VarMask> SimplicialComplex::faces() const {
  std::vector<VarMask> out;
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << dim_); ++f)
    if (contains(VarMask(f))) out.emplace_back(f);
  return out;
}

std::vector<VarMask> SimplicialComplex::facets() const {
  std::vector<VarMask> out;
  for (auto f : faces()) {
    bool maximal = true;
    for (std::size_t i = 0; i < dim_ && maximal; ++i)
      if (!f.contains(i) && contains(f.with(i))) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<VarMask> SimplicialComplex::minimal_nonfaces() const {
  std::vector<VarMask> out;
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << dim_); ++f) {
    VarMask m(f);
    if (contains(m)) continue;
    bool minimal = true;
    for (std::uint32_t b = f; b != 0 && minimal; b &= b - 1)
      if (!contains(VarMask(f & ~(b & -b)))) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

VarMask SimplicialComplex::vertices() const {
  VarMask out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (contains(VarMask::of({i}))) out = out.with(i);
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

SimplicialComplex SimplicialComplex::cone() const {
  check_dim(dim_ + 1);
  auto k = void_complex(dim_ + 1);
  const std::uint32_t apex = std::uint32_t{1} << dim_;
  for (auto f : faces()) {
    for (std::uint32_t g : {f.bits(), f.bits() | apex}) k.words_[g >> 6] |= std::uint64_t{1} << (g & 63);
  }
  return k;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  if (other.dim_ != dim_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

}  // namespace cohomlen
