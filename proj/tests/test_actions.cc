/** @file test_actions.cc
 *  Tests for block systems and induced actions.
 */
#include "doctest.h"
#include "groups.hpp"
#include "oracles.hpp"

#include "starp/actions.hpp"
#include "starp/constructions.hpp"
#include "starp/star.hpp"

#include <set>

using namespace starp;

namespace {

std::set<std::size_t> block_sizes(const std::vector<BlockSystem> &systems) {
  std::set<std::size_t> out;
  for (const auto &b : systems)
    out.insert(b.block_size);
  return out;
}

std::vector<PermGroup> transitive_samples() {
  std::vector<PermGroup> out{testgroups::c6(), testgroups::d4(), testgroups::d5(), testgroups::s3_regular(),
                             PermGroup::symmetric(4), fixture("D12-regular"),
                             testgroups::make(8, {"(1,2,3,4,5,6,7,8)", "(1,5)"}),
                             testgroups::make(8, {"(1,2,3,4)(5,6,7,8)", "(1,5)(2,6)(3,7)(4,8)"}),
                             testgroups::make(9, {"(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)"}),
                             testgroups::make(12, {"(1,2,3,4,5,6)(7,8,9,10,11,12)", "(1,7)(2,8)"})};
  return out;
}

} // namespace

TEST_CASE("minimal block systems") {
  BlockSystem c6 = minimal_block_system(testgroups::c6(), 0, 3);
  CHECK(c6.block_count == 3);
  CHECK(c6.block_size == 2);
  CHECK(is_invariant(testgroups::c6(), c6));
  CHECK(minimal_block_system(PermGroup::symmetric(4), 0, 2).block_count == 1);
  CHECK(all_minimal_block_systems(PermGroup::symmetric(4)).empty());
  CHECK(block_sizes(all_minimal_block_systems(testgroups::c6())) == std::set<std::size_t>{2, 3});
  CHECK_THROWS_AS(minimal_block_system(testgroups::c2xc2_intransitive(), 0, 1), InvalidArgument);

  PermGroup d12 = fixture("D12-regular");
  BlockSystem four = minimal_block_system(d12, std::vector<Point>{0, 3, 6});
  CHECK(four.block_size == 4);
  CHECK(is_invariant(d12, four));
  // No pair generates a block of size 4: D12 has no cyclic subgroup of order 4.
  for (Point b = 1; b < 12; ++b)
    CHECK(minimal_block_system(d12, 0, b).block_size != 4);
}

TEST_CASE("minimal blocks agree with exhaustive search") {
  for (const auto &g : transitive_samples()) {
    auto elems = oracle::closure(g);
    for (Point b = 1; b < g.degree(); ++b) {
      BlockSystem sys = minimal_block_system(g, 0, b);
      auto brute = oracle::smallest_block(elems, g.degree(), {0, b});
      const auto &block = sys.blocks[sys.block_of[0]];
      CHECK(std::set<Point>(block.begin(), block.end()) == brute);
    }
  }
}

TEST_CASE("induced actions on blocks and on a block") {
  PermGroup c6 = testgroups::c6();
  BlockSystem b = minimal_block_system(c6, 0, 3);
  InducedAction on = action_on_blocks(c6, b);
  CHECK(on.target.degree() == 3);
  CHECK(on.target.order() == 3);
  CHECK(on.kernel_order == 2);
  InducedAction in = block_restriction(c6, b, 0);
  CHECK(in.target.degree() == 2);
  CHECK(in.target.order() == 2);
  CHECK_THROWS_AS(block_restriction(c6, b, 3), InvalidArgument);

  PermGroup d12 = fixture("D12-regular");
  BlockSystem four = minimal_block_system(d12, std::vector<Point>{0, 3, 6});
  InducedAction quotient = action_on_blocks(d12, four);
  CHECK(quotient.target.degree() == 3);
  CHECK(quotient.target.order() == 6);
  InducedAction block = block_restriction(d12, four, 0);
  CHECK(block.target.degree() == 4);
  CHECK(is_transitive(block.target));
  CHECK(block.target.order() % 4 == 0);

  PermGroup a5 = PermGroup::alternating(5);
  BlockSystem singletons = BlockSystem::from_ids(5, {0, 1, 2, 3, 4});
  InducedAction same = action_on_blocks(a5, singletons);
  CHECK(same.target.order() == 60);
  CHECK(same.faithful());
  CHECK(block_restriction(a5, singletons, 2).target.order() == 1);

  CHECK_THROWS_AS(action_on_blocks(c6, BlockSystem::from_ids(6, {0, 0, 1, 1, 2, 2})), InvalidArgument);
  CHECK_THROWS_AS(BlockSystem::from_ids(4, {0, 0, 0, 1}), InvalidArgument);

  for (const auto &g : transitive_samples())
    for (const auto &sys : all_minimal_block_systems(g)) {
      InducedAction a = action_on_blocks(g, sys);
      CHECK(a.kernel_order * a.target.order() == g.order());
    }
}

TEST_CASE("tuple actions") {
  PermGroup a5 = PermGroup::alternating(5);
  InducedAction pairs = tuple_action(a5, {0, 1});
  CHECK(pairs.target.degree() == 20);
  CHECK(pairs.faithful());
  CHECK(std::is_sorted(pairs.labels.begin(), pairs.labels.end()));
  BlockSystem sets = tuple_to_set_blocks(pairs);
  CHECK(sets.block_count == 10);
  CHECK(sets.block_size == 2);
  bool found = false;
  for (const auto &sys : all_minimal_block_systems(pairs.target))
    found = found || sys.block_of == sets.block_of;
  CHECK(found);

  PermGroup c3 = testgroups::make(3, {"(1,2,3)"});
  InducedAction c3pairs = tuple_action(c3, {0, 1});
  CHECK(c3pairs.labels == std::vector<std::vector<Point>>{{0, 1}, {1, 2}, {2, 0}});

  InducedAction single = tuple_action(testgroups::d5(), {0});
  CHECK(single.target.generators() == testgroups::d5().generators());
  CHECK(tuple_to_set_blocks(single).block_size == 1);

  InducedAction triples = tuple_action(a5, {0, 1, 2});
  CHECK(tuple_to_set_blocks(triples).block_size == 6);

  CHECK_THROWS_AS(tuple_action(a5, {0, 0}), InvalidArgument);
  Limits tight;
  tight.max_degree = 10;
  CHECK_THROWS_AS(tuple_action(a5, {0, 1}, tight), ResourceLimit);
  CHECK_THROWS_AS(tuple_to_set_blocks(action_on_blocks(testgroups::c6(), minimal_block_system(testgroups::c6(), 0, 3))),
                  InvalidArgument);
}

TEST_CASE("(*)_p passes to blocks, and from block and quotient to the group") {
  for (const auto &g : transitive_samples())
    for (std::uint64_t p : {2, 3}) {
      bool whole = has_star_p(g, p).verdict;
      for (const auto &sys : all_minimal_block_systems(g)) {
        bool inner = has_star_p(block_restriction(g, sys, 0).target, p).verdict;
        bool outer = has_star_p(action_on_blocks(g, sys).target, p).verdict;
        if (whole)
          CHECK(inner);
        if (inner && outer)
          CHECK(whole);
      }
    }
}

TEST_CASE("coset actions") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup s3(4, {Permutation::parse_cycles(4, "(1,2)"), Permutation::parse_cycles(4, "(1,2,3)")});
  PermGroup a = coset_action(s4, s3);
  CHECK(a.degree() == 4);
  CHECK(a.order() == 24);
  CHECK(coset_action(s4, s4).degree() == 1);
  CHECK(coset_action(s4, PermGroup::trivial(4)).degree() == 24);
}
