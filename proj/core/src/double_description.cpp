#include "cohomlen/double_description.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "cohomlen/errors.hpp"

namespace cohomlen {

namespace {

struct Ray {
  IntVector v;
  boost::dynamic_bitset<> zeros;  // rows processed so far that vanish on v
};

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Greedily picks rows that raise the rank, in index order.
std::vector<std::size_t> row_basis(std::span<const IntVector> rows, std::size_t dim) {
  std::vector<std::size_t> picked;
  std::vector<RationalPoint> echelon;  // reduced rows, pivot columns recorded below
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size() && picked.size() < dim; ++r) {
    RationalPoint v(rows[r].begin(), rows[r].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (v[pivots[k]] == 0) continue;
      Rational f = v[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t c = 0; c < dim; ++c) v[c] -= f * echelon[k][c];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    picked.push_back(r);
  }
  return picked;
}

// Columns of B^{-1}, scaled to primitive integer vectors.
std::vector<IntVector> inverse_columns(const std::vector<IntVector>& basis, std::size_t dim) {
  std::vector<RationalPoint> aug(dim, RationalPoint(2 * dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug[r][c] = basis[r][c];
    aug[r][dim + r] = 1;
  }
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t k = 0; k < 2 * dim; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<IntVector> cols(dim, IntVector(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    Integer den = 1;
    for (std::size_t r = 0; r < dim; ++r) den = lcm(den, Integer(aug[r][dim + j].get_den()));
    for (std::size_t r = 0; r < dim; ++r) {
      Rational scaled = aug[r][dim + j] * den;
      cols[j][r] = scaled.get_num();
    }
    make_primitive(cols[j]);
  }
  return cols;
}

}  // namespace

std::vector<IntVector> extreme_rays(std::span<const IntVector> rows, std::size_t dim) {
  for (const auto& r : rows)
    if (r.size() != dim) throw DimensionMismatch("inequality row of wrong length");
  auto basis_idx = row_basis(rows, dim);
  if (basis_idx.size() < dim) throw DomainError("cone is not pointed: inequality rank below dimension");

  std::vector<IntVector> basis;
  for (auto i : basis_idx) basis.push_back(rows[i]);
  auto cols = inverse_columns(basis, dim);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray ray{std::move(cols[j]), boost::dynamic_bitset<>(rows.size())};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) ray.zeros.set(basis_idx[k]);
    rays.push_back(std::move(ray));
  }

  boost::dynamic_bitset<> is_basis(rows.size());
  for (auto i : basis_idx) is_basis.set(i);

  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    if (is_basis.test(idx)) continue;
    const auto& h = rows[idx];
    std::vector<Integer> val(rays.size());
    bool any_negative = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(h, rays[k].v);
      if (val[k] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] == 0) rays[k].zeros.set(idx);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      Ray r = rays[k];
      if (val[k] == 0) r.zeros.set(idx);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0) continue;
        auto common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.is_subset_of(rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{IntVector(dim), common};
        for (std::size_t c = 0; c < dim; ++c) r.v[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
        make_primitive(r.v);
        r.zeros.set(idx);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cohomlen
