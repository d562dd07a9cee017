/** @file actions.hpp
 *  Block systems and induced actions: on blocks, on a single block by its
 *  setwise stabilizer, and on orbits of tuples.
 */
#pragma once

#include "starp/perm_group.hpp"

#include "json.hpp"

#include <vector>

namespace starp {

struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::size_t> block_of;        ///< block id per point
  std::vector<std::vector<Point>> blocks;   ///< sorted blocks, ordered by least point
  std::size_t block_size = 0;
  std::size_t block_count = 0;

  /// Validates that the ids describe a partition into equal-size blocks.
  static BlockSystem from_ids(std::size_t degree, const std::vector<std::size_t> &block_of);
  bool trivial() const { return block_size == 1 || block_count == 1; }
};

bool is_invariant(const PermGroup &g, const BlockSystem &b);

enum class LabelKind { point, block, tuple };

struct InducedAction {
  PermGroup source;
  PermGroup target;
  LabelKind kind = LabelKind::point;
  std::vector<std::vector<Point>> labels;  ///< what each target point denotes (source points)
  Count kernel_order = 1;

  bool faithful() const { return kernel_order == 1; }
};

/// Finest invariant partition with alpha and beta in one block.
BlockSystem minimal_block_system(const PermGroup &g, Point alpha, Point beta);
/// Finest invariant partition with all seed points in one block.
BlockSystem minimal_block_system(const PermGroup &g, const std::vector<Point> &seed);
/// Distinct non-trivial systems minimal_block_system(g, 0, beta); empty iff primitive.
std::vector<BlockSystem> all_minimal_block_systems(const PermGroup &g);

InducedAction action_on_blocks(const PermGroup &g, const BlockSystem &b);
InducedAction block_restriction(const PermGroup &g, const BlockSystem &b, std::size_t index);

/// Action on the orbit of `seed` (distinct points) on ordered tuples; target
/// points are the orbit tuples in lexicographic order.
InducedAction tuple_action(const PermGroup &g, const std::vector<Point> &seed,
                           const Limits &limits = {});

/// Tuples with the same underlying set form one block.
BlockSystem tuple_to_set_blocks(const InducedAction &a);

/// Action of g by right multiplication on the right cosets of s, by enumeration.
/// Cosets are numbered in the order of their least elements.
PermGroup coset_action(const PermGroup &g, const PermGroup &s, const Limits &limits = {});

/// "labels" annotation for group files: kind plus 1-based source points.
nlohmann::json label_annotation(const InducedAction &a);

} // namespace starp
