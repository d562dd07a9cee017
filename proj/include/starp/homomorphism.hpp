/** @file homomorphism.hpp
 *  Action homomorphisms G -> Sym(m) given by generator images, with kernels
 *  and preimages computed from a stabilizer chain of the graph subgroup.
 */
#pragma once

#include "starp/perm_group.hpp"

namespace starp {

class ActionHom {
public:
  /// `images[i]` is the image of `source.generators()[i]` on `target_degree`
  /// points. The caller guarantees that the assignment defines a homomorphism.
  ActionHom(const PermGroup &source, std::size_t target_degree, std::vector<Permutation> images);

  const PermGroup &source() const { return source_; }
  const PermGroup &image() const { return image_; }
  Count kernel_order() const { return source_.order() / image_.order(); }
  PermGroup kernel() const;

  /// Some element of the source mapping to `t`; throws if t is not in the image.
  Permutation lift(const Permutation &t) const;

  /// Full preimage of a subgroup of the image.
  PermGroup preimage(const PermGroup &t) const;

private:
  PermGroup source_;
  PermGroup image_;
  std::size_t n_;
  std::size_t m_;
  StabChain graph_;  ///< chain of {g + f(g)} on n + m points, target points first in the base
};

/// Restriction of `g` to an invariant point set, relabelled in the given order.
ActionHom restriction_hom(const PermGroup &g, const std::vector<Point> &points);

/// Action of `g` on the blocks of an invariant partition (`block_of` per point).
ActionHom block_hom(const PermGroup &g, const std::vector<std::size_t> &block_of,
                    std::size_t block_count);

} // namespace starp
