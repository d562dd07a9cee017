/** @file centralizer.hpp
 *  Backtrack search for centralizers in permutation groups.
 */
#pragma once

#include "starp/perm_group.hpp"

namespace starp {

/// C_G(<elements>): elements of g commuting with every given permutation.
/// The elements need not lie in g.
PermGroup centralizer(const PermGroup &g, const std::vector<Permutation> &elements);

inline PermGroup centralizer(const PermGroup &g, const Permutation &z) {
  return centralizer(g, std::vector<Permutation>{z});
}

} // namespace starp
