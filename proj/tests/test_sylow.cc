/** @file test_sylow.cc
 *  Tests for Sylow subgroups.
 */
#include "doctest.h"
#include "groups.hpp"
#include "oracles.hpp"

#include "starp/constructions.hpp"
#include "starp/numth.hpp"
#include "starp/sylow.hpp"

using namespace starp;

namespace {

std::set<oracle::Elem> as_set(const PermGroup &g) { return oracle::closure(g); }

void check_sylow(const PermGroup &g, std::uint64_t p, SylowMethod m) {
  SylowResult s = sylow_subgroup(g, p, m);
  Count want = p_part_value(g.order(), p);
  CHECK(s.order == want);
  CHECK(s.subgroup.order() == want);
  for (const auto &x : s.subgroup.generators()) {
    CHECK(g.contains(x));
    CHECK(p_part_value(x.order(), p) == x.order());
  }
}

} // namespace

TEST_CASE("Sylow subgroups of small groups") {
  PermGroup s4 = PermGroup::symmetric(4);
  CHECK(sylow_subgroup(s4, 2).order == 8);
  CHECK(sylow_subgroup(s4, 5).subgroup.order() == 1);
  CHECK(sylow_subgroup(fixture("M11-deg12"), 3).order == 9);
  for (SylowMethod m : {SylowMethod::reduction, SylowMethod::ascent, SylowMethod::oracle})
    for (std::uint64_t p : {2, 3, 5}) {
      check_sylow(s4, p, m);
      check_sylow(PermGroup::symmetric(6), p, m);
      check_sylow(testgroups::d5(), p, m);
    }
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), InvalidArgument);
}

TEST_CASE("Sylow orders on random groups agree with brute force") {
  for (const auto &g : testgroups::small_random_groups(11, 40, 5000)) {
    auto elems = as_set(g);
    REQUIRE(elems.size() == g.order());
    for (std::uint64_t p : {2, 3, 5}) {
      auto brute = oracle::sylow(elems, g.degree(), p);
      for (SylowMethod m : {SylowMethod::reduction, SylowMethod::ascent, SylowMethod::oracle}) {
        SylowResult s = sylow_subgroup(g, p, m);
        CHECK(s.subgroup.order() == brute.size());
        CHECK(is_subgroup(s.subgroup, g));
      }
    }
  }
}

TEST_CASE("Sylow subgroups of larger groups") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    PermGroup g = testgroups::random_group(rng, 10 + i % 6, 2);
    for (std::uint64_t p : {2, 3, 5, 7})
      check_sylow(g, p, SylowMethod::reduction);
  }
  for (const auto &name : fixture_names())
    for (std::uint64_t p : {2, 3, 5, 7, 11, 23})
      check_sylow(fixture(name), p, SylowMethod::reduction);
}

TEST_CASE("p-elements") {
  Rng rng(0);
  PermGroup s4 = PermGroup::symmetric(4);
  Permutation x = p_element(s4, 2, rng);
  CHECK((x.order() == 2 || x.order() == 4));
  Permutation y = p_element(s4, 3, rng);
  CHECK(y.order() == 3);
  CHECK(y.cycles().size() == 1);
  CHECK_THROWS_AS(p_element(PermGroup::cyclic(5), 2, rng), InvalidArgument);
}

TEST_CASE("normalizers by enumeration match brute force") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup c3(4, {Permutation::parse_cycles(4, "(1,2,3)")});
  CHECK(normalizer(s4, c3).order() == 6);
  PermGroup a4 = PermGroup::alternating(4);
  CHECK(normalizer(a4, a4).order() == 12);
  PermGroup c6 = testgroups::c6();
  CHECK(normalizer(c6, PermGroup(6, {c6.generators()[0].pow(2)})).order() == 6);

  for (const auto &g : testgroups::small_random_groups(3, 15, 2000)) {
    auto elems = oracle::closure(g);
    for (std::uint64_t p : {2, 3}) {
      PermGroup h = sylow_subgroup(g, p).subgroup;
      auto hset = oracle::closure(h);
      std::size_t count = 0;
      for (const auto &x : elems) {
        Permutation px(x);
        bool normal = true;
        for (const auto &gen : h.generators())
          normal = normal && hset.count(conjugate(gen, px).images());
        count += normal;
      }
      CHECK(normalizer(g, h).order() == count);
    }
  }
}

TEST_CASE("Sylow orbit lengths are stable under conjugation and start at n_p") {
  Rng rng(1);
  for (const auto &name : fixture_names()) {
    PermGroup g = fixture(name);
    for (std::uint64_t p : {2, 3}) {
      PermGroup s = sylow_subgroup(g, p).subgroup;
      auto lengths = orbit_lengths(s);
      CHECK(lengths.front() == p_part_value(g.degree(), p));
      for (int i = 0; i < 10; ++i)
        CHECK(orbit_lengths(conjugate(s, g.chain().random_element(rng))) == lengths);
    }
  }
  CHECK(sylow_orbit_lengths(fixture("M11-deg12"), 2) == std::vector<std::size_t>{4, 8});
  CHECK(sylow_orbit_lengths(fixture("M11-deg12"), 3) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(sylow_orbit_lengths(fixture("PGammaL2(8)-deg28"), 2) == std::vector<std::size_t>(7, 4));
  CHECK(format_multiset({4, 8}) == "4,8");
  CHECK(format_multiset({}) == "-");
}
