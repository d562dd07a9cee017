/** @file field.hpp
 *  Finite fields GF(p^k) in a polynomial basis.
 *
 *  An element is encoded as the integer whose base-p digits are its
 *  coefficients, constant term least significant; the prime subfield
 *  element c is therefore encoded as c.
 */
#pragma once

#include "starp/types.hpp"

#include <cstdint>
#include <vector>

namespace starp {

class Field {
public:
  using Elt = std::uint32_t;

  /// Modulus is the lexicographically least monic irreducible of degree k,
  /// comparing coefficient lists from the constant term upwards.
  static Field make(std::uint64_t p, std::uint64_t k, const Limits &limits = {});

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  /// Coefficients c_0..c_k of the modulus (c_k = 1).
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }
  Elt primitive() const { return exp_[1]; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt add(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;
  /// Discrete logarithm to the base primitive(); a must be non-zero.
  std::uint64_t log(Elt a) const { return log_[a]; }
  Elt exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  /// Coefficient list of an element, constant term first.
  std::vector<std::uint32_t> coefficients(Elt a) const;

private:
  std::uint64_t p_ = 2, k_ = 1, q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;
};

} // namespace starp
