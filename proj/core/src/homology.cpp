#include "cohomlen/homology.hpp"

#include <algorithm>
#include <bit>
#include <gmpxx.h>

#include "cohomlen/errors.hpp"

namespace cohomlen {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

using Matrix = std::vector<std::vector<int>>;

std::size_t rank_rational(const Matrix& m) {
  if (m.empty() || m.front().empty()) return 0;
  // Bareiss fraction-free elimination.
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const Matrix& m, std::uint32_t p) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  const std::int64_t mod = p;
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = ((m[r][c] % mod) + mod) % mod;
  auto inverse = [&](std::int64_t x) {
    std::int64_t result = 1, e = mod - 2;
    while (e > 0) {
      if (e & 1) result = result * x % mod;
      x = x * x % mod;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % mod;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1u << 31)))
    throw DomainError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& k, FieldSpec field) {
  const std::size_t d = k.ambient_dim();
  // Faces grouped by cardinality 0..d; chain group C_j holds faces of size j+1.
  std::vector<std::vector<std::uint32_t>> by_size(d + 1);
  for (auto f : k.faces()) by_size[f.size()].push_back(f.bits());

  // rank of the boundary from size-s faces to size-(s-1) faces, s = 1..d.
  std::vector<std::size_t> boundary_rank(d + 2, 0);
  for (std::size_t s = 1; s <= d; ++s) {
    const auto& hi = by_size[s];
    const auto& lo = by_size[s - 1];
    if (hi.empty() || lo.empty()) continue;
    Matrix m(lo.size(), std::vector<int>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c) {
      int sign = 1;
      for (std::uint32_t b = hi[c]; b != 0; b &= b - 1) {
        std::uint32_t face = hi[c] & ~(b & -b);
        auto it = std::lower_bound(lo.begin(), lo.end(), face);
        m[static_cast<std::size_t>(it - lo.begin())][c] = sign;
        sign = -sign;
      }
    }
    boundary_rank[s] = field.characteristic() == 0 ? rank_rational(m) : rank_mod_p(m, field.characteristic());
  }
  std::vector<std::size_t> dims(d + 1, 0);
  for (std::size_t s = 0; s <= d; ++s) {
    // H~_{s-1} = |C_{s-1}| - rank(d_s) - rank(d_{s+1})
    std::size_t out_rank = s >= 1 ? boundary_rank[s] : 0;
    std::size_t in_rank = s + 1 <= d ? boundary_rank[s + 1] : 0;
    dims[s] = by_size[s].size() - out_rank - in_rank;
  }
  return dims;
}

std::size_t reduced_homology_dim(const SimplicialComplex& k, int j, FieldSpec field) {
  if (j < -1 || j > static_cast<int>(k.ambient_dim()) - 1) return 0;
  return reduced_homology_dims(k, field)[static_cast<std::size_t>(j + 1)];
}

bool is_connected(const SimplicialComplex& k) {
  const VarMask verts = k.vertices();
  if (verts.empty()) throw DomainError("connectivity is undefined for a complex without vertices");
  VarMask reached = VarMask::of({verts.indices().front()});
  for (VarMask prev; prev != reached;) {
    prev = reached;
    for (auto u : prev.indices())
      for (auto v : verts.indices())
        if (k.contains(VarMask::of({u, v}))) reached = reached.with(v);
  }
  return reached == verts;
}

std::size_t HomologyCache::WordsHash::operator()(const std::vector<std::uint64_t>& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : w) h = (h ^ x) * 0x100000001b3ull ^ (h >> 29);
  return h;
}

const std::vector<std::size_t>& HomologyCache::dims(const SimplicialComplex& k) {
  return dims(k.ambient_dim(), k.words());
}

const std::vector<std::size_t>& HomologyCache::dims(std::size_t d, std::span<const std::uint64_t> words) {
  key_.assign(words.begin(), words.end());
  key_.push_back(d);
  auto it = cache_.find(key_);
  if (it != cache_.end()) return it->second;
  auto k = SimplicialComplex::from_face_bits(d, std::vector<std::uint64_t>(words.begin(), words.end()));
  return cache_.emplace(key_, reduced_homology_dims(k, field_)).first->second;
}

std::size_t matrix_rank(const std::vector<std::vector<int>>& rows, FieldSpec field) {
  return field.characteristic() == 0 ? rank_rational(rows) : rank_mod_p(rows, field.characteristic());
}

}  // namespace cohomlen
