/** @file numth.hpp
 *  Exact integer number theory: p-parts, multiplicative orders, the
 *  primitive prime divisor p-part formula and the (r,p,f) inequality.
 */
#pragma once

#include "starp/types.hpp"

#include <cstdint>
#include <vector>

namespace starp {

struct PPart {
  Count p = 2;
  Count n = 1;
  Count p_part = 1;
  Count cofactor = 1;
};

bool is_prime(std::uint64_t n);

/// Largest power of p dividing n, with the cofactor.
PPart p_part(Count n, std::uint64_t p);
inline Count p_part_value(Count n, std::uint64_t p) { return p_part(n, p).p_part; }

/// Smallest e >= 1 with q^e = 1 mod p.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t p);

/// q^e, throwing ResourceLimit past `limit` (default 2^63 - 1).
Count checked_pow(std::uint64_t q, std::uint64_t e, Count limit = (Count(1) << 63) - 1);

/// True if q = r^k for a prime r and k >= 1; sets r and k.
bool prime_power(std::uint64_t q, std::uint64_t *r = nullptr, std::uint64_t *k = nullptr);

/// (q^m - 1)_p via the closed form (p odd: (q^e - 1)_p * b_p with m = e b;
/// p = 2: (q^2 - 1)_2 * (m/2)_2 for even m, else (q - 1)_2).
Count ppd_p_part(std::uint64_t q, std::uint64_t m, std::uint64_t p);

enum class Morenum { strict, equality, violated };

/// Compares (r^f + 1)/p with r^(2f/p) - 1.
Morenum morenum_holds(std::uint64_t r, std::uint64_t p, std::uint64_t f);

const char *to_string(Morenum m);

/// Prime factors of n by trial division up to 10^6; a cofactor above that
/// bound must itself be prime or a ResourceLimit is thrown.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace starp
