/** @file perm_group.hpp
 *  Permutation groups given by generators, with a lazily built stabilizer
 *  chain (base and strong generating set).
 */
#pragma once

#include "starp/permutation.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace starp {

using Rng = std::mt19937_64;

/// One level of a stabilizer chain.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;   ///< strong generators fixing earlier base points
  std::vector<Point> orbit;              ///< basic orbit, base point first
  std::vector<std::int32_t> position;    ///< index in `orbit` per point, -1 if absent
  std::vector<Permutation> transversal;  ///< transversal[k] maps base to orbit[k]
  std::vector<Permutation> inverse;      ///< inverses of the transversal elements

  bool in_orbit(Point x) const { return position[x] >= 0; }
  const Permutation &rep(Point x) const { return transversal[static_cast<std::size_t>(position[x])]; }
  const Permutation &rep_inverse(Point x) const {
    return inverse[static_cast<std::size_t>(position[x])];
  }
};

class StabChain {
public:
  struct Options {
    std::vector<Point> base_prefix;  ///< base starts with these points, in order
    std::optional<Count> known_order;
    std::uint64_t seed = 0;
  };

  /// Schreier-Sims. A random phase is followed by a deterministic
  /// Schreier-generator pass unless the known order is reached first.
  static StabChain build(std::size_t degree, const std::vector<Permutation> &generators,
                         const Options &options);
  static StabChain build(std::size_t degree, const std::vector<Permutation> &generators) {
    return build(degree, generators, Options{});
  }

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  const std::vector<ChainLevel> &levels() const { return levels_; }
  const ChainLevel &level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;

  /// Product of the basic orbit lengths from `from` to the end.
  Count order(std::size_t from = 0) const;

  struct Sift {
    Permutation residue;
    std::size_t level;  ///< first level where sifting failed, or length()
  };
  Sift sift(Permutation g, std::size_t from = 0) const;
  bool contains(const Permutation &g) const;

  /// Chain of the stabilizer of the first `level` base points.
  StabChain suffix(std::size_t level) const;

  /// Uniformly distributed element of the group.
  Permutation random_element(Rng &rng) const;

  /// Calls `visit` once per group element (transversal products).
  void for_each_element(const std::function<void(const Permutation &)> &visit) const;

private:
  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

class PermGroup {
public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {});
  /// Adopts a chain that is already known to describe the generated group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, StabChain chain,
            std::string name = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);
  static PermGroup cyclic(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const StabChain &chain() const;
  Count order() const { return chain().order(); }
  bool contains(const Permutation &x) const;
  bool is_trivial() const { return order() == 1; }

  /// Builds a chain whose base starts with `prefix`; not cached.
  StabChain chain_with_base(const std::vector<Point> &prefix, std::uint64_t seed = 0) const;

private:
  struct Cache {
    std::once_flag once;
    std::optional<StabChain> chain;
  };
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

struct OrbitPartition {
  std::size_t degree = 0;
  std::vector<std::size_t> orbit_of;           ///< orbit id per point
  std::vector<std::vector<Point>> orbits;      ///< sorted; ordered by least point
};

OrbitPartition orbits(std::size_t degree, const std::vector<Permutation> &generators);
inline OrbitPartition orbits(const PermGroup &g) { return orbits(g.degree(), g.generators()); }

/// Orbit of `x` in breadth-first discovery order.
std::vector<Point> orbit(const PermGroup &g, Point x);

bool is_transitive(const PermGroup &g);
bool is_2_transitive(const PermGroup &g);

/// Strong generators of G_omega taken from a chain based at omega.
PermGroup point_stabilizer(const PermGroup &g, Point omega);

/// Pointwise stabilizer of a sequence of points.
PermGroup pointwise_stabilizer(const PermGroup &g, const std::vector<Point> &points);

/// All elements; throws ResourceLimit when the order exceeds `cap`.
std::vector<Permutation> elements(const PermGroup &g, std::uint64_t cap);

/// Subgroup test by sifting every generator of `h`.
bool is_subgroup(const PermGroup &h, const PermGroup &g);

/// Sorted list of orbit lengths.
std::vector<std::size_t> orbit_lengths(const PermGroup &g);

/// Group generated by the conjugates x^-1 h x of the generators of `h`.
PermGroup conjugate(const PermGroup &h, const Permutation &x);

/// Finest invariant partition of a transitive group in which all `seed`
/// points share a block (union-find block algorithm). Returns the block id
/// of every point, ids numbered by least point.
std::vector<std::size_t> minimal_block_partition(std::size_t degree,
                                                 const std::vector<Permutation> &generators,
                                                 const std::vector<Point> &seed);

/// Point set moved by at least one generator.
std::vector<Point> support(const PermGroup &g);

} // namespace starp
