#include <doctest.h>

#include <random>

#include "cohomlen/errors.hpp"
#include "cohomlen/homology.hpp"

using namespace cohomlen;

namespace {

SimplicialComplex complex_of(std::size_t d, std::vector<std::vector<std::size_t>> facets) {
  std::vector<VarMask> masks;
  for (const auto& f : facets) {
    VarMask m;
    for (auto v : f) m = m.with(v - 1);
    masks.push_back(m);
  }
  return SimplicialComplex::from_facets(d, masks);
}

SimplicialComplex random_complex(std::mt19937& rng, std::size_t d) {
  std::vector<VarMask> facets;
  const auto k = 1 + rng() % 5;
  for (std::size_t i = 0; i < k; ++i) facets.emplace_back(static_cast<std::uint32_t>(rng() % (1u << d)));
  return SimplicialComplex::from_facets(d, facets);
}

std::vector<std::size_t> unit_at(std::size_t size, std::size_t index) {
  std::vector<std::size_t> v(size, 0);
  v[index] = 1;
  return v;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("reference complexes") {
  auto two = complex_of(5, {{1, 3, 5}, {2, 4}});
  CHECK(reduced_homology_dims(two) == unit_at(6, 1));
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(4, VarMask::full(4))) == std::vector<std::size_t>(5, 0));
  CHECK(reduced_homology_dims(SimplicialComplex::irrelevant(3)) == unit_at(4, 0));
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3)) == std::vector<std::size_t>(4, 0));
  auto hollow = complex_of(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(reduced_homology_dims(hollow) == unit_at(4, 2));
  CHECK(reduced_homology_dim(hollow, 1) == 1);
  CHECK(reduced_homology_dim(hollow, 7) == 0);
  CHECK(reduced_homology_dim(hollow, -2) == 0);
  // Boundary of the 3-simplex is a 2-sphere.
  auto sphere = complex_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(reduced_homology_dims(sphere, FieldSpec(3)) == unit_at(5, 3));
}

TEST_CASE("void and irrelevant complexes differ") {
  CHECK(SimplicialComplex::void_complex(3).is_void());
  CHECK(SimplicialComplex::irrelevant(3).is_irrelevant());
  CHECK_FALSE(SimplicialComplex::void_complex(3) == SimplicialComplex::irrelevant(3));
}

TEST_CASE("face bitsets must be downward closed") {
  std::vector<std::uint64_t> bad{0b10};  // {0} without the empty face
  CHECK_THROWS_AS(SimplicialComplex::from_face_bits(2, bad), DomainError);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(complex_of(5, {{1, 3, 5}, {2, 4}})));
  CHECK(is_connected(SimplicialComplex::simplex(4, VarMask::full(4))));
  CHECK(is_connected(complex_of(5, {{1, 3, 5}, {1, 4}, {2, 4}, {2, 5}})));
  CHECK_THROWS_AS(is_connected(SimplicialComplex::void_complex(3)), DomainError);
  CHECK_THROWS_AS(is_connected(SimplicialComplex::irrelevant(3)), DomainError);
}

TEST_CASE("field characteristics") {
  CHECK_THROWS_AS(FieldSpec(4), DomainError);
  CHECK_THROWS_AS(FieldSpec(1), DomainError);
  CHECK(FieldSpec(2).characteristic() == 2);
  CHECK(FieldSpec::rationals().characteristic() == 0);
}

TEST_CASE("minimal nonfaces and facets") {
  auto k = complex_of(5, {{1, 3, 5}, {1, 4}, {2, 4}, {2, 5}});
  CHECK(k.facets().size() == 4);
  for (auto g : k.minimal_nonfaces()) {
    CHECK_FALSE(k.contains(g));
    for (auto v : g.indices()) CHECK(k.contains(VarMask(g.bits() & ~(1u << v))));
  }
}

TEST_CASE("random complex invariants") {
  std::mt19937 rng(31);
  HomologyCache cache;
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 5;
    auto k = random_complex(rng, d);
    const auto q = reduced_homology_dims(k);
    CHECK(cache.dims(k) == q);

    // Reduced Euler characteristic two ways; entry j+1 of q holds H~_j.
    long euler_h = 0;
    for (std::size_t j = 0; j < q.size(); ++j) euler_h += (j % 2 ? 1 : -1) * static_cast<long>(q[j]);
    long euler_f = 0;
    for (auto f : k.faces()) euler_f += (f.size() % 2 ? 1 : -1);
    CHECK(euler_h == euler_f);

    // No torsion on at most five vertices.
    CHECK(reduced_homology_dims(k, FieldSpec(2)) == q);
    CHECK(reduced_homology_dims(k, FieldSpec(3)) == q);

    if (!k.vertices().empty()) {
      CHECK((q[1] == 0) == is_connected(k));
    }
    auto coned = k.cone();
    if (!k.is_void()) {
      CHECK(reduced_homology_dims(coned) == std::vector<std::size_t>(d + 2, 0));
    }
    CHECK_FALSE(k.is_subcomplex_of(coned));
    for (auto f : k.faces()) CHECK(coned.contains(f));
  }
}

TEST_CASE("matrix ranks") {
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{1, 1}, {1, -1}}) == 2);
  CHECK(matrix_rank({{1, 1}, {1, -1}}, FieldSpec(2)) == 1);
  CHECK(matrix_rank({}) == 0);
}

}  // TEST_SUITE
