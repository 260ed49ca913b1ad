#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "cohomlen/errors.hpp"
#include "cohomlen/family.hpp"
#include "cohomlen/monomial_ideal.hpp"
#include "corpus.hpp"

using namespace cohomlen;
using cohomlen::testing::path5_ideal;
using cohomlen::testing::random_ideal;

namespace {

MonomialIdeal ideal_of(std::size_t d, std::vector<ExponentVector> gens) {
  return MonomialIdeal::minimalize(d, std::move(gens));
}

VarMask one_based(std::initializer_list<std::size_t> idx) {
  VarMask m;
  for (auto i : idx) m = m.with(i - 1);
  return m;
}

}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("minimalize drops multiples and sorts") {
  auto i = ideal_of(2, {{1, 1}, {1, 2}});
  REQUIRE(i.size() == 1);
  CHECK(i.generators()[0] == ExponentVector{1, 1});

  CHECK(ideal_of(3, {}).is_zero());

  auto j = ideal_of(5, {{0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}});
  REQUIRE(j.size() == 2);
  CHECK(j.generators()[0] == ExponentVector{0, 0, 0, 1, 0});
  CHECK(j.generators()[1] == ExponentVector{0, 1, 0, 0, 0});
}

TEST_CASE("minimalize rejects bad input") {
  CHECK_THROWS_AS(ideal_of(2, {{1, 1, 1}}), DimensionMismatch);
  CHECK_THROWS_AS(ideal_of(2, {{1, -1}}), DomainError);
}

TEST_CASE("unit and zero representations") {
  auto u = MonomialIdeal::unit(3);
  CHECK(u.is_unit());
  CHECK(u.size() == 1);
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(ideal_of(2, {{0, 0}, {1, 0}}) == MonomialIdeal::unit(2));
}

TEST_CASE("powers") {
  auto m = MonomialIdeal::variables(2, VarMask::full(2));
  auto m2 = power(m, 2);
  REQUIRE(m2.size() == 3);
  CHECK(m2.generators()[0] == ExponentVector{0, 2});
  CHECK(m2.generators()[1] == ExponentVector{1, 1});
  CHECK(m2.generators()[2] == ExponentVector{2, 0});

  CHECK(power(MonomialIdeal::unit(3), 5) == MonomialIdeal::unit(3));
  CHECK(power(path5_ideal(), 0) == MonomialIdeal::unit(5));

  auto sq = power(path5_ideal(), 2);
  CHECK(sq.size() == 10);
  for (const auto& g : sq.generators()) CHECK(g.total_degree() == 4);
}

TEST_CASE("localization of the five-path ideal") {
  const auto i = path5_ideal();
  CHECK(localize(i, one_based({1, 3, 5})) == MonomialIdeal::variables(5, one_based({2, 4})));
  CHECK(localize(i, one_based({2, 4})) == MonomialIdeal::variables(5, one_based({1, 3, 5})));
  CHECK(localize(i, one_based({1, 2})).is_unit());
  CHECK_THROWS_AS(localize(i, VarMask::of({5})), RangeError);
}

TEST_CASE("membership") {
  const auto i = path5_ideal();
  CHECK(i.contains({1, 1, 0, 0, 0}));
  CHECK_FALSE(i.contains(ExponentVector(5)));
  CHECK(MonomialIdeal::unit(5).contains(ExponentVector(5)));
  CHECK_FALSE(power(i, 3).contains({0, 1, 2, 1, 0}));
  CHECK_THROWS_AS(i.contains({0, -1, 0, 0, 0}), DomainError);
}

TEST_CASE("intersection") {
  auto x = MonomialIdeal::variables(2, VarMask::of({0}));
  auto y = MonomialIdeal::variables(2, VarMask::of({1}));
  CHECK(intersect(x, y) == ideal_of(2, {{1, 1}}));
  CHECK(intersect(path5_ideal(), path5_ideal()) == path5_ideal());

  auto a = MonomialIdeal::variables(5, one_based({2, 4}));
  auto b = MonomialIdeal::variables(5, one_based({1, 3, 5}));
  auto expected = ideal_of(5, {{1, 1, 0, 0, 0},
                               {1, 0, 0, 1, 0},
                               {0, 1, 1, 0, 0},
                               {0, 1, 0, 0, 1},
                               {0, 0, 1, 1, 0},
                               {0, 0, 0, 1, 1}});
  CHECK(intersect(a, b) == expected);
}

TEST_CASE("saturation") {
  CHECK(saturate(ideal_of(2, {{2, 0}, {0, 2}})).is_unit());
  CHECK(saturate(path5_ideal()) == path5_ideal());
  CHECK(saturate(ideal_of(2, {{2, 0}, {1, 1}})) == ideal_of(2, {{1, 0}}));
}

TEST_CASE("family members") {
  const auto i = path5_ideal();
  CHECK(family_member(IdealFamily::powers(i), 1).ideal() == i);
  CHECK(family_member(IdealFamily::powers(i), 0).is_unit());

  auto sat = IdealFamily::saturated_powers(ideal_of(2, {{2, 0}, {1, 1}}));
  CHECK(family_member(sat, 1).ideal() == ideal_of(2, {{1, 0}}));

  auto closure = IdealFamily::integral_closure_powers(ideal_of(2, {{1, 5}, {4, 4}, {5, 1}}));
  auto m1 = family_member(closure, 1);
  CHECK(m1.contains({4, 4}));
  CHECK(m1.contains({3, 3}));
  CHECK_FALSE(m1.contains({2, 3}));
  CHECK_THROWS_AS(m1.ideal(), DomainError);

  auto list = IdealFamily::explicit_list({i, power(i, 2)});
  CHECK(family_member(list, 2).ideal() == power(i, 2));
  CHECK_THROWS_AS(family_member(list, 3), RangeError);
}

TEST_CASE("graded containment of explicit lists") {
  const auto i = path5_ideal();
  CHECK(graded_containment_holds(IdealFamily::explicit_list({i, power(i, 2), power(i, 3)})));
  // I_1 * I_1 is not inside I_2 = I^3.
  CHECK_FALSE(graded_containment_holds(IdealFamily::explicit_list({i, power(i, 3)})));
}

TEST_CASE("integral closure generators") {
  auto base = ideal_of(2, {{2, 0}, {0, 2}});
  CHECK(integral_closure_power(base, 1) == ideal_of(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(integral_closure_power(path5_ideal(), 2) == power(path5_ideal(), 2));
}

TEST_CASE("exponent overflow is reported") {
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Exponent>::max(), 1), ResourceError);
  CHECK(checked_add(2, 3) == 5);
}

TEST_CASE("random ideal properties") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 3;
    auto a = random_ideal(rng, d, 4, 3);
    auto b = random_ideal(rng, d, 4, 3);

    std::vector<ExponentVector> gens(a.generators().begin(), a.generators().end());
    CHECK(MonomialIdeal::minimalize(d, gens) == a);
    std::reverse(gens.begin(), gens.end());
    CHECK(MonomialIdeal::minimalize(d, gens) == a);

    const VarMask f(static_cast<std::uint32_t>(rng() % (1u << d)));
    const VarMask g(static_cast<std::uint32_t>(rng() % (1u << d)));
    CHECK(localize(localize(a, f), g) == localize(a, f | g));
    CHECK(intersect(localize(a, f), localize(b, f)) == localize(intersect(a, b), f));
    for (std::size_t n = 1; n <= 3; ++n) CHECK(localize(power(a, n), f) == power(localize(a, f), n));

    const auto p1 = power(a, 1);
    const auto p2 = power(a, 2);
    const auto p3 = power(a, 3);
    for (const auto& u : p1.generators())
      for (const auto& v : p2.generators()) CHECK(p3.contains(u + v));

    const auto s = saturate(a);
    for (const auto& u : a.generators()) CHECK(s.contains(u));
    CHECK(saturate(s) == s);
  }
}

}  // TEST_SUITE
