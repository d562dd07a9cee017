/** @file permutation.hpp
 *  Permutations of {0,...,n-1} stored as image tables.
 *
 *  Products use the right action: (a * b) maps i to b(a(i)), so a is
 *  applied first.
 */
#pragma once

#include "starp/types.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace starp {

class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image table; throws unless it is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; the caller guarantees validity.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  /// Parses cycle notation such as "(1,2,3)(4,5)" or "()"; points are 1-based.
  static Permutation parse_cycles(std::size_t degree, const std::string &text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Element order; throws ResourceLimit if it overflows 128 bits.
  Count order() const;

  /// Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Apply a, then b.
Permutation compose(const Permutation &a, const Permutation &b);

inline Permutation operator*(const Permutation &a, const Permutation &b) {
  return compose(a, b);
}

/// x^-1 * h * x.
Permutation conjugate(const Permutation &h, const Permutation &x);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace starp
