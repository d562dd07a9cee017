/** @file test_perm_core.cc
 *  Tests for permutations and stabilizer chains.
 */
#include "doctest.h"
#include "oracles.hpp"

#include "starp/perm_group.hpp"

#include <random>
#include <set>

using namespace starp;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) {
  return Permutation::from_cycles(n, c);
}

PermGroup random_group(std::mt19937_64 &rng, std::size_t n, int ngens) {
  std::vector<Permutation> gens;
  for (int i = 0; i < ngens; ++i) {
    std::vector<Point> img(n);
    for (Point k = 0; k < n; ++k)
      img[k] = k;
    std::shuffle(img.begin(), img.end(), rng);
    gens.emplace_back(img);
  }
  return PermGroup(n, gens);
}

} // namespace

TEST_CASE("compose applies the left factor first") {
  Permutation a = cyc(3, {{0, 1}});
  Permutation b = cyc(3, {{1, 2}});
  Permutation ab = compose(a, b);
  // Two-line evaluation: 0 -a-> 1 -b-> 2, 1 -a-> 0 -b-> 0, 2 -a-> 2 -b-> 1.
  CHECK(ab.images() == std::vector<Point>{2, 0, 1});
  Permutation ba = compose(b, a);
  CHECK(ba.images() == std::vector<Point>{1, 2, 0});
  CHECK(compose(cyc(2, {{0, 1}}), cyc(2, {{0, 1}})).is_identity());
  CHECK(compose(cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1, 2}})) == cyc(3, {{0, 2, 1}}));
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), InvalidArgument);
}

TEST_CASE("right action law and inverses") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> a(9), b(9);
    for (Point i = 0; i < 9; ++i)
      a[i] = b[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation g(a), h(b);
    for (Point w = 0; w < 9; ++w)
      CHECK((g * h)(w) == h(g(w)));
    CHECK((g * g.inverse()).is_identity());
    CHECK(conjugate(h, g) == g.inverse() * h * g);
    CHECK(g.pow(static_cast<long long>(g.order())).is_identity());
  }
}

TEST_CASE("from_cycles and parsing") {
  Permutation t = cyc(12, {{0, 1, 2}});
  CHECK(t(0) == 1);
  CHECK(t(2) == 0);
  CHECK(t(5) == 5);
  CHECK(cyc(4, {}).is_identity());
  Permutation inv = cyc(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK((inv * inv).is_identity());
  for (Point x = 0; x < 6; ++x)
    CHECK(inv(x) != x);
  CHECK_THROWS_AS(cyc(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(cyc(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK(Permutation::parse_cycles(5, "(1,2,3)(4,5)") == cyc(5, {{0, 1, 2}, {3, 4}}));
  CHECK(Permutation::parse_cycles(3, "()").is_identity());
  CHECK(Permutation::parse_cycles(6, " (1, 2)\n(3,4, 5) ").to_string() == "(1,2)(3,4,5)");
  CHECK_THROWS_AS(Permutation::parse_cycles(3, "(1,4)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles(3, "(1,2"), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InvalidArgument);
}

TEST_CASE("orbits") {
  auto triv = orbits(PermGroup::trivial(5));
  CHECK(triv.orbits.size() == 5);
  CHECK(orbits(PermGroup::cyclic(6)).orbits.size() == 1);
  PermGroup g(5, {cyc(5, {{0, 1}}), cyc(5, {{2, 3, 4}})});
  auto o = orbits(g);
  REQUIRE(o.orbits.size() == 2);
  CHECK(o.orbits[0] == std::vector<Point>{0, 1});
  CHECK(o.orbits[1] == std::vector<Point>{2, 3, 4});
  CHECK(is_transitive(PermGroup::cyclic(6)));
  CHECK_FALSE(is_transitive(PermGroup(3, {cyc(3, {{0, 1}})})));
}

TEST_CASE("orders agree with brute-force closure") {
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  CHECK(s4.order() == 24);
  CHECK(oracle::closure(s4).size() == 24);
  CHECK(PermGroup::trivial(3).order() == 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 7;
    PermGroup g = random_group(rng, n, 1 + trial % 3);
    auto all = oracle::closure(g);
    CHECK(g.order() == all.size());
    for (const auto &img : all)
      CHECK(g.contains(Permutation(img)));
  }
}

TEST_CASE("membership matches naive closure on groups of order at most 5000") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    std::size_t n = 4 + trial % 5;
    PermGroup g = random_group(rng, n, 1 + trial % 2);
    if (g.order() > 5000)
      continue;
    ++checked;
    auto all = oracle::closure(g);
    for (int k = 0; k < 40; ++k) {
      std::vector<Point> img(n);
      for (Point i = 0; i < n; ++i)
        img[i] = i;
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(g.contains(Permutation(img)) == (all.count(img) > 0));
    }
  }
  CHECK(checked >= 10);
  PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(cyc(4, {{0, 1}})));
  CHECK(a4.contains(Permutation(4)));
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  CHECK(s4.contains(cyc(4, {{0, 1, 2}})));
}

TEST_CASE("prescribed base prefix") {
  PermGroup s5 = PermGroup::symmetric(5);
  StabChain chain = s5.chain_with_base({3, 1});
  REQUIRE(chain.length() >= 2);
  CHECK(chain.level(0).base == 3);
  CHECK(chain.level(1).base == 1);
  CHECK(chain.order() == 120);
}

TEST_CASE("point stabilizers and orbit-stabilizer") {
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  PermGroup st = point_stabilizer(s4, 0);
  CHECK(st.order() == 6);
  auto all = oracle::closure(st);
  CHECK(all.size() == 6);
  for (const auto &img : all)
    CHECK(img[0] == 0);
  CHECK(point_stabilizer(PermGroup::cyclic(6), 4).order() == 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PermGroup g = random_group(rng, 7, 2);
    for (Point w = 0; w < 7; ++w)
      CHECK(g.order() == orbit(g, w).size() * point_stabilizer(g, w).order());
  }
}

TEST_CASE("element enumeration") {
  CHECK(elements(PermGroup::cyclic(3), 100).size() == 3);
  auto s4 = elements(PermGroup::symmetric(4), 100);
  std::set<Permutation> distinct(s4.begin(), s4.end());
  CHECK(distinct.size() == 24);
  CHECK_THROWS_AS(elements(PermGroup::symmetric(7), 1000), ResourceLimit);
}
