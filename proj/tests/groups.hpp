/** @file groups.hpp
 *  Small test groups.
 */
#pragma once

#include "starp/perm_group.hpp"

#include <random>

namespace testgroups {

using starp::Permutation;
using starp::PermGroup;

inline PermGroup make(std::size_t n, std::initializer_list<const char *> gens) {
  std::vector<Permutation> perms;
  for (const char *g : gens)
    perms.push_back(Permutation::parse_cycles(n, g));
  return PermGroup(n, std::move(perms));
}

inline PermGroup c6() { return make(6, {"(1,2,3,4,5,6)"}); }
inline PermGroup d4() { return make(4, {"(1,2,3,4)", "(1,3)"}); }
inline PermGroup d5() { return make(5, {"(1,2,3,4,5)", "(2,5)(3,4)"}); }
inline PermGroup s3_regular() { return make(6, {"(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"}); }
inline PermGroup c2xc2_intransitive() { return make(5, {"(1,2)", "(3,4,5)"}); }

/// A random subgroup of S_n generated by `ngens` uniform permutations.
inline PermGroup random_group(std::mt19937_64 &rng, std::size_t n, int ngens) {
  std::vector<Permutation> gens;
  for (int i = 0; i < ngens; ++i) {
    std::vector<starp::Point> img(n);
    for (starp::Point k = 0; k < n; ++k)
      img[k] = k;
    std::shuffle(img.begin(), img.end(), rng);
    gens.emplace_back(img);
  }
  return PermGroup(n, gens);
}

/// Random groups of order at most `max_order`, mixing transitive and
/// intransitive ones, drawn from products of small cycles.
inline std::vector<PermGroup> small_random_groups(std::uint64_t seed, int count, std::uint64_t max_order) {
  std::mt19937_64 rng(seed);
  std::vector<PermGroup> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t n = 3 + rng() % 8;
    int ngens = 1 + static_cast<int>(rng() % 2);
    std::vector<Permutation> gens;
    for (int i = 0; i < ngens; ++i) {
      // A product of a few random transpositions and 3-cycles keeps orders small.
      Permutation x(n);
      int parts = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < parts; ++j) {
        std::vector<starp::Point> pts(n);
        for (starp::Point k = 0; k < n; ++k)
          pts[k] = k;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::size_t len = 2 + rng() % std::min<std::size_t>(3, n - 1);
        x = x * Permutation::from_cycles(n, {std::vector<starp::Point>(pts.begin(), pts.begin() + len)});
      }
      gens.push_back(x);
    }
    PermGroup g(n, gens);
    if (g.order() <= max_order)
      out.push_back(g);
  }
  return out;
}

} // namespace testgroups
