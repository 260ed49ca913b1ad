#include "cohomlen/polyhedra.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <limits>

#include "cohomlen/double_description.hpp"
#include "cohomlen/errors.hpp"

namespace cohomlen {

__extension__ typedef __int128 i128;

namespace {

using Bits = boost::dynamic_bitset<>;

Rational dot(const IntVector& c, std::span<const Rational> x) {
  Rational out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) out += c[i] * x[i];
  return out;
}

// Homogenized rows (den*c, -num) for <c,x> >= num/den, plus t >= 0.
std::vector<IntVector> homogenized_rows(std::size_t dim, std::span<const HalfSpace> hs) {
  std::vector<IntVector> rows;
  rows.reserve(hs.size() + 1);
  for (const auto& h : hs) {
    if (h.normal.size() != dim) throw DimensionMismatch("half-space of wrong dimension");
    IntVector row(dim + 1);
    Integer den = h.offset.get_den();
    for (std::size_t i = 0; i < dim; ++i) row[i] = h.normal[i] * den;
    row[dim] = -h.offset.get_num();
    rows.push_back(std::move(row));
  }
  IntVector t(dim + 1);
  t[dim] = 1;
  rows.push_back(std::move(t));
  return rows;
}

std::size_t affine_dim(const std::vector<RationalPoint>& verts, const Bits& subset) {
  std::vector<RationalPoint> diffs;
  std::size_t base = subset.find_first();
  if (base == Bits::npos) return 0;
  for (auto i = subset.find_next(base); i != Bits::npos; i = subset.find_next(i)) {
    RationalPoint d(verts[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = verts[i][c] - verts[base][c];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

bool is_tight(const HalfSpace& h, const RationalPoint& x) {
  return dot(h.normal, x) == h.offset;
}

// Pulling triangulation: cone the lowest vertex of `face` over every facet
// of `face` that misses it. Accumulates |det| of each simplex. `tight` holds
// the vertex sets of the facets of the polytope; the facets of a face are the
// inclusion-maximal proper intersections of the face with them.
void accumulate_simplices(const std::vector<RationalPoint>& verts, const std::vector<Bits>& tight, const Bits& face,
                          std::size_t k, std::vector<std::size_t>& apex_stack, Rational& total) {
  if (face.count() == k + 1) {
    std::vector<std::size_t> simplex(apex_stack);
    for (auto i = face.find_first(); i != Bits::npos; i = face.find_next(i)) simplex.push_back(i);
    const auto& v0 = verts[simplex.front()];
    std::vector<RationalPoint> rows;
    for (std::size_t j = 1; j < simplex.size(); ++j) {
      RationalPoint r(v0.size());
      for (std::size_t c = 0; c < v0.size(); ++c) r[c] = verts[simplex[j]][c] - v0[c];
      rows.push_back(std::move(r));
    }
    total += abs(determinant(std::move(rows)));
    return;
  }
  const std::size_t apex = face.find_first();
  std::vector<Bits> subs;
  for (const auto& t : tight) {
    Bits sub = face & t;
    if (sub == face || sub.count() < k) continue;
    subs.push_back(std::move(sub));
  }
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  for (std::size_t a = 0; a < subs.size(); ++a) {
    if (subs[a].test(apex)) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < subs.size() && maximal; ++b)
      if (b != a && subs[a].is_proper_subset_of(subs[b])) maximal = false;
    if (!maximal) continue;
    apex_stack.push_back(apex);
    accumulate_simplices(verts, tight, subs[a], k - 1, apex_stack, total);
    apex_stack.pop_back();
  }
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

std::vector<HalfSpace> box_halfspaces(std::size_t dim, const Integer& bound) {
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < dim; ++i) {
    RationalPoint e(dim);
    e[i] = 1;
    out.push_back(HalfSpace::make(e, 0));
    out.push_back(HalfSpace::at_most(e, Rational(bound)));
  }
  return out;
}

}  // namespace

HalfSpace HalfSpace::make(const RationalPoint& normal, const Rational& offset) {
  Integer den = offset.get_den();
  for (const auto& q : normal) den = lcm(den, Integer(q.get_den()));
  HalfSpace h;
  h.normal.resize(normal.size());
  Integer g = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    Rational scaled = normal[i] * den;
    h.normal[i] = scaled.get_num();
    g = gcd(g, h.normal[i]);
  }
  if (g == 0) throw DomainError("half-space with zero normal");
  for (auto& c : h.normal) c /= g;
  h.offset = offset * den / g;
  h.offset.canonicalize();
  return h;
}

HalfSpace HalfSpace::at_most(const RationalPoint& normal, const Rational& bound) {
  RationalPoint neg(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) neg[i] = -normal[i];
  return make(neg, -bound);
}

bool HalfSpace::contains(std::span<const Rational> x) const {
  return dot(normal, x) >= offset;
}

bool HalfSpace::contains_scaled(std::span<const Exponent> a, std::uint64_t n) const {
  Integer s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * Integer(static_cast<long>(a[i]));
  return Rational(s) >= offset * Rational(Integer(static_cast<unsigned long>(n)));
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("the zero ideal has no Newton polyhedron");
  const std::size_t d = ideal.dim();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector r(d + 1);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  for (const auto& g : ideal.generators()) {
    IntVector r(d + 1);
    for (std::size_t i = 0; i < d; ++i) r[i] = Integer(static_cast<long>(g[i]));
    r[d] = 1;
    rows.push_back(std::move(r));
  }
  NewtonPolyhedron p;
  p.dim_ = d;
  for (const auto& ray : extreme_rays(rows, d + 1)) {
    bool at_infinity = std::all_of(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(d),
                                   [](const Integer& z) { return z == 0; });
    if (at_infinity) continue;
    RationalPoint normal(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(d));
    p.halfspaces_.push_back(HalfSpace::make(normal, Rational(-ray[d])));
  }
  std::sort(p.halfspaces_.begin(), p.halfspaces_.end());

  for (const auto& g : ideal.generators()) {
    RationalPoint x(g.begin(), g.end());
    std::vector<RationalPoint> normals;
    for (const auto& h : p.halfspaces_)
      if (is_tight(h, x)) normals.emplace_back(h.normal.begin(), h.normal.end());
    if (rank(std::move(normals)) == d) p.vertices_.push_back(g);
  }

  constexpr long limit = 1L << 40;
  bool fits = true;
  for (const auto& h : p.halfspaces_) {
    if (h.offset.get_den() != 1 || abs(h.offset.get_num()) > limit) fits = false;
    for (const auto& c : h.normal)
      if (abs(c) > limit) fits = false;
  }
  if (fits) {
    for (const auto& h : p.halfspaces_) {
      for (const auto& c : h.normal) p.word_normals_.push_back(c.get_si());
      p.word_offsets_.push_back(h.offset.get_num().get_si());
    }
    p.word_ready_ = true;
  }
  return p;
}

bool NewtonPolyhedron::contains_scaled(const ExponentVector& a, std::uint64_t n) const {
  if (a.size() != dim_) throw DimensionMismatch("point of wrong dimension");
  if (word_ready_ && n < (1u << 20)) {
    bool small = std::all_of(a.begin(), a.end(), [](Exponent e) { return e >= -(1L << 20) && e <= (1L << 20); });
    if (small) {
      for (std::size_t f = 0; f < word_offsets_.size(); ++f) {
        i128 s = 0;
        const auto* c = &word_normals_[f * dim_];
        for (std::size_t i = 0; i < dim_; ++i) s += static_cast<i128>(c[i]) * a[i];
        if (s < static_cast<i128>(word_offsets_[f]) * static_cast<i128>(n)) return false;
      }
      return true;
    }
  }
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const HalfSpace& h) { return h.contains_scaled(a.view(), n); });
}

bool NewtonPolyhedron::contains(std::span<const Rational> x) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

bool nc_membership(const NewtonPolyhedron& p, std::uint64_t n, const ExponentVector& a) {
  if (!a.is_nonnegative()) throw DomainError("integral-closure membership needs a nonnegative exponent");
  return p.contains_scaled(a, n);
}

std::vector<RationalPoint> polytope_vertices(std::size_t dim, std::span<const HalfSpace> halfspaces) {
  auto rows = homogenized_rows(dim, halfspaces);
  std::vector<IntVector> rays;
  try {
    rays = extreme_rays(rows, dim + 1);
  } catch (const DomainError&) {
    throw DomainError("polyhedron has a lineality space and is unbounded");
  }
  std::vector<RationalPoint> verts;
  for (const auto& r : rays) {
    if (r[dim] == 0) throw DomainError("polyhedron is unbounded");
    RationalPoint v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Rational(r[i], r[dim]);
      v[i].canonicalize();
    }
    verts.push_back(std::move(v));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

Rational polytope_volume(std::size_t dim, std::span<const HalfSpace> halfspaces) {
  auto verts = polytope_vertices(dim, halfspaces);
  if (verts.size() < dim + 1) return 0;
  Bits all(verts.size());
  all.set();
  if (affine_dim(verts, all) < dim) return 0;
  std::vector<Bits> tight;
  for (const auto& h : halfspaces) {
    Bits t(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (is_tight(h, verts[i])) t.set(i);
    if (t.count() >= dim) tight.push_back(std::move(t));
  }
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  std::erase_if(tight, [&](const Bits& t) { return affine_dim(verts, t) + 1 != dim; });
  Rational total = 0;
  std::vector<std::size_t> apex_stack;
  accumulate_simplices(verts, tight, all, dim, apex_stack, total);
  return total / factorial(dim);
}

Rational polytope_volume(std::span<const RationalPoint> points) {
  if (points.empty()) return 0;
  const std::size_t dim = points.front().size();
  std::vector<RationalPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Bits all(pts.size());
  all.set();
  if (pts.size() < dim + 1 || affine_dim(pts, all) < dim) return 0;

  // Facets of conv(points) are the extreme rays of {(c, b) : <c,p> + b >= 0}.
  std::vector<IntVector> rows;
  for (const auto& p : pts) {
    Integer den = 1;
    for (const auto& q : p) den = lcm(den, Integer(q.get_den()));
    IntVector r(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
      Rational s = p[i] * den;
      r[i] = s.get_num();
    }
    r[dim] = den;
    rows.push_back(std::move(r));
  }
  std::vector<HalfSpace> facets;
  for (const auto& ray : extreme_rays(rows, dim + 1)) {
    RationalPoint normal(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(dim));
    facets.push_back(HalfSpace::make(normal, Rational(-ray[dim])));
  }
  return polytope_volume(dim, facets);
}

bool ConvexRegion::contains(std::span<const Rational> x) const {
  return std::all_of(halfspaces.begin(), halfspaces.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

void ConvexRegion::add(const NewtonPolyhedron& p) {
  if (p.dim() != dim) throw DimensionMismatch("Newton polyhedron of wrong dimension");
  halfspaces.insert(halfspaces.end(), p.halfspaces().begin(), p.halfspaces().end());
}

Rational VolumeCache::volume(std::size_t dim, std::vector<HalfSpace> halfspaces) {
  std::sort(halfspaces.begin(), halfspaces.end());
  halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()), halfspaces.end());
  auto it = memo_.find(halfspaces);
  if (it != memo_.end()) return it->second;
  Rational v = polytope_volume(dim, halfspaces);
  memo_.emplace(std::move(halfspaces), v);
  return v;
}

Rational clipped_volume(const CoConvexRegion& region, const Integer& bound, VolumeCache* cache) {
  const std::size_t d = region.dim();
  const std::size_t s = region.inner.size();
  if (s > 20) throw ResourceError("too many inner regions for inclusion-exclusion");
  for (const auto& in : region.inner)
    if (in.dim != d) throw DimensionMismatch("inner region of wrong dimension");

  auto box = box_halfspaces(d, bound);
  std::vector<bool> is_zero(std::size_t{1} << s, false);
  Rational total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
    bool known_zero = false;
    for (std::uint32_t b = mask; b != 0 && !known_zero; b &= b - 1)
      if (is_zero[mask & ~(b & -b)]) known_zero = true;
    if (known_zero) {
      is_zero[mask] = true;
      continue;
    }
    std::vector<HalfSpace> hs(region.outer.halfspaces);
    for (std::size_t i = 0; i < s; ++i)
      if ((mask >> i) & 1u) hs.insert(hs.end(), region.inner[i].halfspaces.begin(), region.inner[i].halfspaces.end());
    hs.insert(hs.end(), box.begin(), box.end());
    Rational v = cache ? cache->volume(d, std::move(hs)) : polytope_volume(d, hs);
    if (v == 0) {
      is_zero[mask] = true;
      continue;
    }
    if (std::popcount(mask) % 2 == 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

CoConvexRegion certify_box(CoConvexRegion region, const Integer& initial, unsigned max_doublings, Rational* volume,
                           VolumeCache* cache) {
  Integer bound = initial > 0 ? initial : Integer(1);
  Rational current = clipped_volume(region, bound, cache);
  for (unsigned k = 0; k <= max_doublings; ++k) {
    Rational doubled = clipped_volume(region, 2 * bound, cache);
    if (doubled == current) {
      region.box_bound = bound;
      if (volume) *volume = current;
      return region;
    }
    bound *= 2;
    current = doubled;
  }
  throw CertificateError("co-convex region not certified bounded after " + std::to_string(max_doublings) +
                         " box doublings");
}

Rational coconvex_volume(const CoConvexRegion& region) {
  if (region.box_bound <= 0) throw CertificateError("co-convex region carries no box certificate");
  Rational v = clipped_volume(region, region.box_bound);
  if (clipped_volume(region, 2 * region.box_bound) != v)
    throw CertificateError("box certificate fails: region extends past [0, " + region.box_bound.get_str() + "]^d");
  return v;
}

Integer lattice_count(const CoConvexRegion& region, std::uint64_t n, std::uint64_t max_lines) {
  if (region.box_bound <= 0) throw CertificateError("co-convex region carries no box certificate");
  const std::size_t d = region.dim();
  if (d == 0) throw DomainError("zero-dimensional region");
  const Integer top = region.box_bound * Integer(static_cast<unsigned long>(n));
  if (!top.fits_slong_p()) throw ResourceError("lattice box too large");
  const long hi = top.get_si();
  {
    Integer lines = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) lines *= (hi + 1);
    if (lines > Integer(static_cast<unsigned long>(max_lines))) throw ResourceError("lattice enumeration exceeds cap");
  }

  // <c,x> >= n*p/q  <=>  <q*c, x> >= n*p, all integers.
  struct Row {
    IntVector c;
    Integer rhs;
  };
  auto scale = [&](const std::vector<HalfSpace>& hs) {
    std::vector<Row> rows;
    for (const auto& h : hs) {
      Row r;
      Integer q = h.offset.get_den();
      for (const auto& c : h.normal) r.c.push_back(c * q);
      r.rhs = h.offset.get_num() * Integer(static_cast<unsigned long>(n));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  const auto outer = scale(region.outer.halfspaces);
  std::vector<std::vector<Row>> inner;
  for (const auto& in : region.inner) inner.push_back(scale(in.halfspaces));

  // Integer interval of the last coordinate allowed by `rows`, given the others.
  auto clip = [&](const std::vector<Row>& rows, const std::vector<long>& x, long& lo, long& up) {
    for (const auto& r : rows) {
      Integer t = r.rhs;
      for (std::size_t j = 0; j + 1 < d; ++j) t -= r.c[j] * x[j];
      const Integer& cy = r.c[d - 1];
      if (cy == 0) {
        if (t > 0) up = lo - 1;
        continue;
      }
      Rational q(t, cy);
      q.canonicalize();
      if (cy > 0) {
        Integer b = ceil_div(q);
        if (b > lo) lo = b.fits_slong_p() ? b.get_si() : up + 1;
      } else {
        Integer b = floor_div(q);
        if (b < up) up = b.fits_slong_p() ? b.get_si() : lo - 1;
      }
      if (lo > up) return;
    }
  };

  Integer count = 0;
  std::vector<long> x(d, 0);
  std::vector<std::pair<long, long>> spans;
  while (true) {
    long lo = 0, up = hi;
    clip(outer, x, lo, up);
    if (lo <= up) {
      spans.clear();
      for (const auto& rows : inner) {
        long ilo = lo, iup = up;
        clip(rows, x, ilo, iup);
        if (ilo <= iup) spans.emplace_back(ilo, iup);
      }
      std::sort(spans.begin(), spans.end());
      long covered = 0, reach = lo - 1;
      for (auto [a, b] : spans) {
        a = std::max(a, reach + 1);
        if (a <= b) {
          covered += b - a + 1;
          reach = b;
        }
      }
      count += (up - lo + 1) - covered;
    }
    std::size_t k = 0;
    while (k + 1 < d) {
      if (++x[k] <= hi) break;
      x[k] = 0;
      ++k;
    }
    if (k + 1 >= d) break;
  }
  return count;
}

}  // namespace cohomlen
