#include <doctest.h>

#include <algorithm>
#include <random>

#include "cohomlen/double_description.hpp"
#include "cohomlen/errors.hpp"
#include "cohomlen/polyhedra.hpp"
#include "corpus.hpp"

using namespace cohomlen;

namespace {

HalfSpace hs(std::initializer_list<long> normal, long offset) {
  RationalPoint n;
  for (auto c : normal) n.emplace_back(c);
  return HalfSpace::make(n, Rational(offset));
}

std::vector<HalfSpace> sorted(std::vector<HalfSpace> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RationalPoint pt(std::initializer_list<long> xs) {
  RationalPoint p;
  for (auto x : xs) p.emplace_back(x);
  return p;
}

std::vector<RationalPoint> unit_simplex(std::size_t d) {
  std::vector<RationalPoint> pts{RationalPoint(d, Rational(0))};
  for (std::size_t i = 0; i < d; ++i) {
    RationalPoint e(d, Rational(0));
    e[i] = 1;
    pts.push_back(e);
  }
  return pts;
}

// Gamma = conv(xy^5, x^4y^4, x^5y) minus three avoided Newton polyhedra.
CoConvexRegion two_variable_region() {
  CoConvexRegion region;
  region.outer.dim = 2;
  region.outer.add(newton_polyhedron(parse_ideal("ring 2; ideal x1*x2^5, x1^4*x2^4, x1^5*x2;")));
  for (const char* src : {"ring 2; ideal x1*x2^8, x1^3*x2^6;", "ring 2; ideal x1^6*x2^4, x1^7*x2^3;",
                          "ring 2; ideal x1^9*x2, x1^10;"}) {
    ConvexRegion r{2, {}};
    r.add(newton_polyhedron(parse_ideal(src)));
    region.inner.push_back(r);
  }
  return certify_box(region, 60);
}

}  // namespace

TEST_SUITE("polyhedra") {

TEST_CASE("Newton polyhedron facets") {
  auto p = newton_polyhedron(parse_ideal("ring 2; ideal x1*x2^5, x1^4*x2^4, x1^5*x2;"));
  CHECK(sorted(p.halfspaces()) == sorted({hs({1, 0}, 1), hs({0, 1}, 1), hs({1, 1}, 6)}));
  CHECK(p.vertices().size() == 2);
  CHECK(p.contains(pt({4, 4})));
  // Strictly inside: every inequality is slack.
  for (const auto& h : p.halfspaces()) CHECK(h.normal[0] * 4 + h.normal[1] * 4 > h.offset);

  auto q = newton_polyhedron(parse_ideal("ring 2; ideal x1, x2;"));
  CHECK(sorted(q.halfspaces()) == sorted({hs({1, 0}, 0), hs({0, 1}, 0), hs({1, 1}, 1)}));

  auto r = newton_polyhedron(parse_ideal("ring 1; ideal x1^2;"));
  CHECK(r.halfspaces() == std::vector<HalfSpace>{hs({1}, 2)});

  CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::zero(2)), DomainError);
}

TEST_CASE("integral closure membership") {
  auto p = newton_polyhedron(parse_ideal("ring 2; ideal x1*x2^5, x1^4*x2^4, x1^5*x2;"));
  CHECK(nc_membership(p, 1, {4, 4}));
  CHECK_FALSE(nc_membership(p, 1, {2, 3}));
  for (const auto& g : {ExponentVector{1, 5}, ExponentVector{4, 4}, ExponentVector{5, 1}}) CHECK(nc_membership(p, 1, g));
  CHECK(nc_membership(p, 2, {6, 6}));
  CHECK_FALSE(nc_membership(p, 2, {5, 6}));
  CHECK_THROWS_AS(nc_membership(p, 1, {-1, 9}), DomainError);
}

TEST_CASE("V and H descriptions agree on random ideals") {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + t % 3;
    auto ideal = cohomlen::testing::random_ideal(rng, d, 5, 4);
    if (ideal.is_unit()) continue;
    auto p = newton_polyhedron(ideal);
    for (const auto& g : ideal.generators()) CHECK(p.contains_scaled(g, 1));
    for (const auto& v : p.vertices())
      CHECK(std::find(ideal.generators().begin(), ideal.generators().end(), v) != ideal.generators().end());
    // Each facet is tight at d affinely independent points of vertices plus recession rays.
    for (const auto& h : p.halfspaces()) {
      std::vector<RationalPoint> dirs;
      std::vector<RationalPoint> tight;
      for (const auto& v : p.vertices()) {
        RationalPoint x(v.begin(), v.end());
        Rational s = 0;
        for (std::size_t i = 0; i < d; ++i) s += h.normal[i] * x[i];
        if (s == h.offset) tight.push_back(x);
      }
      REQUIRE_FALSE(tight.empty());
      for (std::size_t k = 1; k < tight.size(); ++k) {
        RationalPoint diff(d);
        for (std::size_t i = 0; i < d; ++i) diff[i] = tight[k][i] - tight[0][i];
        dirs.push_back(diff);
      }
      for (std::size_t i = 0; i < d; ++i)
        if (h.normal[i] == 0) {
          RationalPoint e(d, Rational(0));
          e[i] = 1;
          dirs.push_back(e);
        }
      CHECK(rank(dirs) == d - 1);
    }
    // Graded: a in nP and b in mP give a + b in (n+m)P.
    for (std::size_t k = 0; k + 1 < ideal.size(); ++k)
      CHECK(nc_membership(p, 2, ideal.generators()[k] + ideal.generators()[k + 1]));
  }
}

TEST_CASE("extreme rays of a simplicial cone") {
  std::vector<IntVector> rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  auto rays = extreme_rays(rows, 3);
  CHECK(rays.size() == 3);
  std::vector<IntVector> line{{1, 0}, {-1, 0}};
  CHECK_THROWS_AS(extreme_rays(line, 2), DomainError);
}

TEST_CASE("polytope volumes") {
  CHECK(polytope_volume(unit_simplex(3)) == Rational(1, 6));
  std::vector<RationalPoint> square{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  CHECK(polytope_volume(square) == 1);
  std::vector<RationalPoint> big{pt({0, 0}), pt({6, 0}), pt({0, 6})};
  CHECK(polytope_volume(big) == 18);
  Rational fact = 1;
  for (std::size_t d = 2; d <= 6; ++d) {
    fact *= static_cast<unsigned long>(d);
    CHECK(polytope_volume(unit_simplex(d)) == 1 / fact);
  }
  std::vector<RationalPoint> flat{pt({0, 0}), pt({1, 1}), pt({2, 2})};
  CHECK(polytope_volume(flat) == 0);
  CHECK(polytope_volume(std::vector<RationalPoint>{}) == 0);
}

TEST_CASE("volume invariances") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coord(0, 6);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 3;
    std::vector<RationalPoint> pts;
    for (int k = 0; k < 8; ++k) {
      RationalPoint p;
      for (std::size_t i = 0; i < d; ++i) p.emplace_back(coord(rng));
      pts.push_back(p);
    }
    const Rational v = polytope_volume(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(polytope_volume(pts) == v);
    RationalPoint centroid(d, Rational(0));
    for (const auto& p : pts)
      for (std::size_t i = 0; i < d; ++i) centroid[i] += p[i] / static_cast<unsigned long>(pts.size());
    pts.push_back(centroid);
    CHECK(polytope_volume(pts) == v);
  }
}

TEST_CASE("H-polytope volume and vertices") {
  // 0 <= x, y and x + y <= 2
  std::vector<HalfSpace> tri{hs({1, 0}, 0), hs({0, 1}, 0), HalfSpace::at_most(pt({1, 1}), 2)};
  CHECK(polytope_volume(2, tri) == 2);
  CHECK(polytope_vertices(2, tri).size() == 3);
  std::vector<HalfSpace> open{hs({1, 0}, 0), hs({0, 1}, 0)};
  CHECK_THROWS_AS(polytope_vertices(2, open), DomainError);
  std::vector<HalfSpace> empty{hs({1, 0}, 3), HalfSpace::at_most(pt({1, 0}), 1), hs({0, 1}, 0),
                               HalfSpace::at_most(pt({0, 1}), 1)};
  CHECK(polytope_volume(2, empty) == 0);
}

TEST_CASE("co-convex volumes") {
  CoConvexRegion strip;
  strip.outer = {2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({1, 1}, 1)}};
  strip.inner.push_back({2, {hs({1, 1}, 2)}});
  strip = certify_box(strip, 4);
  CHECK(coconvex_volume(strip) == Rational(3, 2));

  CoConvexRegion same;
  same.outer = strip.outer;
  same.inner.push_back(strip.outer);
  same = certify_box(same, 4);
  CHECK(coconvex_volume(same) == 0);

  // With no inner regions the volume is the clipped outer polytope.
  CoConvexRegion box;
  box.outer = {2, {hs({1, 0}, 0), hs({0, 1}, 0), HalfSpace::at_most(pt({1, 0}), 3), HalfSpace::at_most(pt({0, 1}), 2)}};
  box = certify_box(box, 4);
  CHECK(coconvex_volume(box) == 6);
  CHECK(coconvex_volume(box) == polytope_volume(2, box.outer.halfspaces));

  CHECK(coconvex_volume(two_variable_region()) == Rational(51, 2));
}

TEST_CASE("box certificates") {
  CoConvexRegion unbounded;
  unbounded.outer = {2, {hs({1, 0}, 0), hs({0, 1}, 0)}};
  CHECK_THROWS_AS(certify_box(unbounded, 1, 3), CertificateError);
  CoConvexRegion uncertified = unbounded;
  CHECK_THROWS_AS(coconvex_volume(uncertified), CertificateError);
  uncertified.box_bound = 2;
  CHECK_THROWS_AS(coconvex_volume(uncertified), CertificateError);
}

TEST_CASE("lattice counts") {
  CoConvexRegion segment;
  segment.outer = {1, {hs({1}, 0), HalfSpace::at_most(pt({1}), 1)}};
  segment = certify_box(segment, 1);
  CHECK(lattice_count(segment, 5) == 6);

  CoConvexRegion empty;
  empty.outer = {1, {hs({1}, 2), HalfSpace::at_most(pt({1}), 1)}};
  empty.box_bound = 1;
  CHECK(lattice_count(empty, 7) == 0);

  // delta_1, delta_2 >= 1 and delta_3, delta_4 < 1 in five variables.
  CoConvexRegion e;
  e.outer = {5, {hs({1, 0, 0, 0, 0}, 0), hs({0, 1, 0, 0, 0}, 0), hs({0, 0, 1, 0, 0}, 0), hs({0, 0, 0, 1, 0}, 0),
                 hs({0, 0, 0, 0, 1}, 0), hs({1, 0, 1, 1, 0}, 1), hs({0, 1, 1, 0, 1}, 1)}};
  e.inner.push_back({5, {hs({1, 0, 1, 0, 1}, 1)}});
  e.inner.push_back({5, {hs({0, 1, 0, 1, 0}, 1)}});
  e = certify_box(e, 2);
  const long expected[] = {0, 0, 1, 5, 16, 40};
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(lattice_count(e, n) == expected[n - 1]);
  CHECK(coconvex_volume(e) == Rational(1, 240));
}

TEST_CASE("lattice count converges to the volume") {
  auto region = two_variable_region();
  const Rational vol = coconvex_volume(region);
  Rational ratio(lattice_count(region, 200), Integer(40000));
  ratio.canonicalize();
  const Rational err = abs(ratio - vol) / vol;
  CHECK(err < Rational(1, 50));
}

}  // TEST_SUITE
