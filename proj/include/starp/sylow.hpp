/** @file sylow.hpp
 *  Sylow subgroups of permutation groups.
 *
 *  Methods:
 *  - reduction: recursive descent through stabilizers, orbits, block
 *    systems and centralizers of p-central elements (default);
 *  - ascent: grow P inside N_G(P) using the enumeration normalizer;
 *  - oracle: greedy closure over the enumerated p-elements of G;
 *  - structural: assembled from the factors of a wreath product.
 */
#pragma once

#include "starp/perm_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace starp {

enum class SylowMethod { reduction, ascent, oracle, structural };

const char *to_string(SylowMethod m);

struct SylowResult {
  std::uint64_t p = 2;
  PermGroup subgroup;
  Count order = 1;
  SylowMethod method = SylowMethod::reduction;
};

/// A non-identity element of p-power order: the p-part of a random element,
/// falling back to enumeration when the order is within the cap.
Permutation p_element(const PermGroup &g, std::uint64_t p, Rng &rng, const Limits &limits = {});

/// N_g(h) by filtering the enumerated elements of g.
PermGroup normalizer(const PermGroup &g, const PermGroup &h, const Limits &limits = {});

SylowResult sylow_subgroup(const PermGroup &g, std::uint64_t p, const Limits &limits = {});
SylowResult sylow_subgroup(const PermGroup &g, std::uint64_t p, SylowMethod method,
                           const Limits &limits = {});

/// Sorted orbit lengths of a Sylow p-subgroup on the whole domain.
std::vector<std::size_t> sylow_orbit_lengths(const PermGroup &g, std::uint64_t p,
                                             const Limits &limits = {});

/// Formats a sorted multiset as "4,8"; empty input gives "-".
std::string format_multiset(const std::vector<std::size_t> &values);

} // namespace starp
