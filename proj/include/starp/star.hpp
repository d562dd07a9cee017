/** @file star.hpp
 *  Property (*)_p: a Sylow p-subgroup P of G has P_w Sylow in G_w for every
 *  point w. On a transitive constituent of size n this is equivalent to every
 *  P-orbit having length n_p.
 */
#pragma once

#include "starp/sylow.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starp {

enum class StarRule {
  shortcut_pnp,
  shortcut_stab_coprime,
  shortcut_prime_power_degree,
  orbit_length_test,
  per_orbit_aggregate,
};

const char *to_string(StarRule r);

struct Constituent {
  std::vector<Point> points;  ///< the orbit, sorted
  std::size_t n = 0;
  Count n_p = 1;
  Count order = 1;            ///< order of the induced group
  bool verdict = true;
  StarRule rule = StarRule::orbit_length_test;
  std::optional<std::vector<std::size_t>> sylow_orbits;
};

struct StarReport {
  std::size_t degree = 0;
  std::uint64_t p = 2;
  bool verdict = true;
  StarRule decided_by = StarRule::orbit_length_test;
  std::vector<Constituent> constituents;
  std::optional<SylowMethod> sylow_method;  ///< set when a Sylow subgroup was used

  /// Sorted Sylow orbit lengths over all constituents where they were computed.
  std::vector<std::size_t> orbit_multiset() const;
  std::string machine() const;
  std::string human() const;
};

struct StarOptions {
  bool shortcuts = true;
  SylowMethod method = SylowMethod::reduction;
  /// Use this Sylow p-subgroup of g instead of computing one.
  std::optional<SylowResult> sylow;
};

StarReport has_star_p(const PermGroup &g, std::uint64_t p, const StarOptions &options = {},
                      const Limits &limits = {});

/// False exactly when g has (*)_p but its transitive subgroup h does not.
bool subgroup_monotonicity_check(const PermGroup &g, const PermGroup &h, std::uint64_t p,
                                 const Limits &limits = {});

} // namespace starp
