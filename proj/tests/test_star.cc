/** @file test_star.cc
 *  Tests for the (*)_p decision procedure.
 */
#include "doctest.h"
#include "groups.hpp"
#include "oracles.hpp"

#include "starp/constructions.hpp"
#include "starp/numth.hpp"
#include "starp/star.hpp"
#include "starp/transdb.hpp"

using namespace starp;

namespace {

const std::vector<TransitiveDbEntry> &db_low() {
  static const auto db = parse_db(STARP_DATA_DIR "/transitive_2_23.db", {false, 2, 10});
  return db;
}

StarOptions no_shortcuts() {
  StarOptions o;
  o.shortcuts = false;
  return o;
}

} // namespace

TEST_CASE("examples") {
  StarReport a5 = has_star_p(psl2_action(5, Psl2Variant::PSL), 2);
  CHECK(a5.verdict);
  StarReport m12 = has_star_p(fixture("M12-deg12"), 3);
  CHECK_FALSE(m12.verdict);
  CHECK(m12.orbit_multiset() == std::vector<std::size_t>{3, 9});
  CHECK(m12.machine() == "degree=12 p=3 verdict=false rule=orbit-length-test orbits=3,9");
  StarReport c6 = has_star_p(testgroups::c6(), 2, no_shortcuts());
  CHECK(c6.verdict);
  CHECK(c6.decided_by == StarRule::orbit_length_test);
  CHECK(c6.orbit_multiset() == std::vector<std::size_t>{2, 2, 2});
  StarReport s3 = has_star_p(PermGroup::symmetric(3), 2);
  CHECK_FALSE(s3.verdict);
  CHECK(s3.orbit_multiset() == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(has_star_p(PermGroup::symmetric(3), 6), InvalidArgument);
}

TEST_CASE("shortcut ladder") {
  CHECK(has_star_p(PermGroup::cyclic(5), 2).decided_by == StarRule::shortcut_stab_coprime);
  CHECK(has_star_p(testgroups::c6(), 2).decided_by == StarRule::shortcut_stab_coprime);
  CHECK(has_star_p(PermGroup::symmetric(4), 2).decided_by == StarRule::shortcut_prime_power_degree);
  CHECK(has_star_p(PermGroup::symmetric(6), 3).decided_by == StarRule::shortcut_pnp);
  CHECK(has_star_p(PermGroup::symmetric(6), 2).decided_by == StarRule::orbit_length_test);
  StarReport inter = has_star_p(testgroups::c2xc2_intransitive(), 2);
  CHECK(inter.decided_by == StarRule::per_orbit_aggregate);
  CHECK(inter.verdict);
  CHECK(inter.constituents.size() == 2);
  CHECK(has_star_p(testgroups::make(5, {"(1,2,3)", "(4,5)"}), 5).decided_by == StarRule::shortcut_stab_coprime);
  CHECK(has_star_p(testgroups::c6(), 2).machine() == "degree=6 p=2 verdict=true rule=shortcut-stab-coprime orbits=-");
  CHECK(has_star_p(testgroups::c6(), 2).human().find("holds") != std::string::npos);
}

TEST_CASE("shortcuts never change a verdict") {
  for (const auto &e : db_low())
    for (std::uint64_t p : {2, 3, 5}) {
      INFO(e.group.name() << " p=" << p);
      CHECK(has_star_p(e.group, p).verdict == has_star_p(e.group, p, no_shortcuts()).verdict);
    }
  for (const auto &name : fixture_names())
    for (std::uint64_t p : {2, 3, 5, 7}) {
      INFO(name << " p=" << p);
      CHECK(has_star_p(fixture(name), p).verdict == has_star_p(fixture(name), p, no_shortcuts()).verdict);
    }
}

TEST_CASE("agrees with the pointwise definition on groups of order at most 5000") {
  std::size_t compared = 0;
  auto compare = [&](const PermGroup &g) {
    if (g.order() > 5000)
      return;
    auto elems = oracle::closure(g);
    for (std::uint64_t p : {2, 3, 5}) {
      INFO(g.name() << " degree " << g.degree() << " p=" << p);
      CHECK(has_star_p(g, p).verdict == oracle::star_by_definition(elems, g.degree(), p));
      ++compared;
    }
  };
  for (const auto &e : db_low())
    compare(e.group);
  for (const auto &g : testgroups::small_random_groups(99, 60, 5000))
    compare(g);
  CHECK(compared > 300);
}

TEST_CASE("verdicts do not depend on the Sylow subgroup chosen") {
  Rng rng(3);
  for (const auto &name : fixture_names()) {
    PermGroup g = fixture(name);
    for (std::uint64_t p : {2, 3}) {
      SylowResult s = sylow_subgroup(g, p);
      bool base = has_star_p(g, p, no_shortcuts()).verdict;
      for (int i = 0; i < 10; ++i) {
        StarOptions o = no_shortcuts();
        o.sylow = SylowResult{p, conjugate(s.subgroup, g.chain().random_element(rng)), s.order, s.method};
        CHECK(has_star_p(g, p, o).verdict == base);
      }
    }
  }
}

TEST_CASE("transitive groups with (*)_p and p dividing |G| have p dividing n") {
  for (const auto &e : db_low())
    for (std::uint64_t p : {2, 3, 5, 7})
      if (e.group.order() % p == 0 && has_star_p(e.group, p).verdict)
        CHECK(e.degree % p == 0);
}

TEST_CASE("transitive subgroups inherit (*)_p") {
  PermGroup big = external_lines(8, Psl2Variant::PGammaL).group;
  PermGroup small = external_lines(8, Psl2Variant::PSL).group;
  CHECK(has_star_p(big, 2).verdict);
  CHECK(has_star_p(small, 2).verdict);
  CHECK(subgroup_monotonicity_check(big, small, 2));
  CHECK(subgroup_monotonicity_check(PermGroup::symmetric(4), PermGroup::cyclic(4), 2));
  CHECK_THROWS_AS(subgroup_monotonicity_check(PermGroup::cyclic(4), PermGroup::symmetric(4), 2), InvalidArgument);

  // Every transitive subgroup of A5 on ordered pairs, found as the groups
  // generated by one or two elements.
  PermGroup a5 = tuple_action(PermGroup::alternating(5), {0, 1}).target;
  std::vector<Permutation> elems = elements(a5, 100);
  std::size_t transitive = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      PermGroup h(20, {elems[i], elems[j]});
      if (!is_transitive(h))
        continue;
      ++transitive;
      CHECK(subgroup_monotonicity_check(a5, h, 2));
    }
  CHECK(transitive > 0);
}
