#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cohomlen/monomial_ideal.hpp"
#include "cohomlen/rational.hpp"

namespace cohomlen {

/// The closed half-space <normal, x> >= offset, with a primitive integer normal.
struct HalfSpace {
  IntVector normal;
  Rational offset;

  /// Normalizes any nonzero rational normal; throws DomainError on a zero normal.
  static HalfSpace make(const RationalPoint& normal, const Rational& offset);
  /// The half-space <normal, x> <= bound, rewritten in >= form.
  static HalfSpace at_most(const RationalPoint& normal, const Rational& bound);

  bool contains(std::span<const Rational> x) const;
  /// Membership of an integer point in the dilation n * H.
  bool contains_scaled(std::span<const Exponent> a, std::uint64_t n) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// conv(I) = conv(exponents of generators) + nonnegative orthant, held in
/// both V-form (vertices) and H-form (facets, including the d coordinate facets).
class NewtonPolyhedron {
public:
  std::size_t dim() const { return dim_; }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  /// a in n * conv(I), i.e. x^a lies in the integral closure of I^n.
  bool contains_scaled(const ExponentVector& a, std::uint64_t n) const;
  bool contains(std::span<const Rational> x) const;

  friend NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

private:
  std::size_t dim_ = 0;
  std::vector<ExponentVector> vertices_;
  std::vector<HalfSpace> halfspaces_;
  // Machine-word copy of the facets, used when every coefficient fits.
  std::vector<std::int64_t> word_normals_;  // row-major, dim_ per facet
  std::vector<std::int64_t> word_offsets_;
  bool word_ready_ = false;
};

/// Throws DomainError for the zero ideal. The unit ideal gives the orthant.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// x^a in the integral closure of I^n for the ideal whose Newton polyhedron is `p`.
bool nc_membership(const NewtonPolyhedron& p, std::uint64_t n, const ExponentVector& a);

/// Vertices of the bounded polyhedron {x : every half-space holds}, sorted
/// lexicographically. Empty when infeasible; throws DomainError if unbounded.
std::vector<RationalPoint> polytope_vertices(std::size_t dim, std::span<const HalfSpace> halfspaces);

/// Volume of a bounded H-polytope; zero when it is lower-dimensional or empty.
Rational polytope_volume(std::size_t dim, std::span<const HalfSpace> halfspaces);

/// Volume of the convex hull of a finite point set.
Rational polytope_volume(std::span<const RationalPoint> points);

/// Intersection of finitely many half-spaces (all of R^d when the list is empty).
struct ConvexRegion {
  std::size_t dim = 0;
  std::vector<HalfSpace> halfspaces;

  bool contains(std::span<const Rational> x) const;
  void add(const NewtonPolyhedron& p);
};

/// Gamma minus the union of Gamma_i, with Gamma_i = outer intersected with inner[i].
///
/// `box_bound` certifies the set difference lies in [0, box_bound]^d; see
/// certify_box. All volumes and counts only look inside that box.
struct CoConvexRegion {
  ConvexRegion outer;
  std::vector<ConvexRegion> inner;
  Integer box_bound = 0;

  std::size_t dim() const { return outer.dim; }
};

/// Memo of polytope_volume keyed by the sorted, deduplicated half-space list.
/// Not thread-safe.
class VolumeCache {
public:
  Rational volume(std::size_t dim, std::vector<HalfSpace> halfspaces);
  std::size_t size() const { return memo_.size(); }

private:
  std::map<std::vector<HalfSpace>, Rational> memo_;
};

/// Inclusion-exclusion volume of the region clipped to [0, bound]^d. No certificate check.
Rational clipped_volume(const CoConvexRegion& region, const Integer& bound, VolumeCache* cache = nullptr);

/// Starting at `initial`, doubles the bound until the clipped volume stops
/// changing between B and 2B. Throws CertificateError after `max_doublings`.
/// The certified volume is stored through `volume` when given.
CoConvexRegion certify_box(CoConvexRegion region, const Integer& initial, unsigned max_doublings = 10,
                           Rational* volume = nullptr, VolumeCache* cache = nullptr);

/// Exact volume of the co-convex region. Throws CertificateError when the
/// stored box does not pass the B versus 2B stability check.
Rational coconvex_volume(const CoConvexRegion& region);

/// #(Z^d intersected with n*C), enumerating n times the certified box.
/// Throws ResourceError past `max_points` candidate lines.
Integer lattice_count(const CoConvexRegion& region, std::uint64_t n, std::uint64_t max_lines = 200'000'000);

}  // namespace cohomlen
