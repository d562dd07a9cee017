/** @file numth.cc
 *  Integer number theory.
 */
#include "starp/numth.hpp"

#include <string>

namespace starp {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Count>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1)
      r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0)
      return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1)
        composite = false;
    }
    if (composite)
      return false;
  }
  return true;
}

PPart p_part(Count n, std::uint64_t p) {
  require_prime(p);
  if (n == 0)
    throw InvalidArgument("p_part requires n >= 1");
  PPart r;
  r.p = p;
  r.n = n;
  while (n % p == 0) {
    n /= p;
    r.p_part *= p;
  }
  r.cofactor = n;
  return r;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t p) {
  require_prime(p);
  if (q % p == 0)
    throw InvalidArgument("mult_order: p divides q");
  std::uint64_t x = q % p;
  std::uint64_t e = 1;
  while (x != 1) {
    x = mul_mod(x, q, p);
    ++e;
  }
  return e;
}

Count checked_pow(std::uint64_t q, std::uint64_t e, Count limit) {
  Count r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r = checked_mul(r, q);
    if (r > limit)
      throw ResourceLimit(std::to_string(q) + "^" + std::to_string(e) + " exceeds the configured bound");
  }
  return r;
}

bool prime_power(std::uint64_t q, std::uint64_t *r, std::uint64_t *k) {
  if (q < 2)
    return false;
  std::uint64_t base = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      base = d;
      break;
    }
  if (base == 0)
    base = q;
  std::uint64_t e = 0;
  std::uint64_t x = q;
  while (x % base == 0) {
    x /= base;
    ++e;
  }
  if (x != 1)
    return false;
  if (r)
    *r = base;
  if (k)
    *k = e;
  return true;
}

Count ppd_p_part(std::uint64_t q, std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  if (!prime_power(q, nullptr, nullptr))
    throw InvalidArgument("ppd_p_part: q must be a prime power");
  if (m == 0)
    throw InvalidArgument("ppd_p_part: m must be positive");
  Count qm = checked_pow(q, m);
  if ((qm - 1) % p != 0)
    throw InvalidArgument("ppd_p_part: p does not divide q^m - 1");
  if (p == 2) {
    if (m % 2 == 0)
      return checked_mul(p_part_value(static_cast<Count>(q) * q - 1, 2), p_part_value(m / 2, 2));
    return p_part_value(q - 1, 2);
  }
  std::uint64_t e = mult_order(q, p);
  if (m % e != 0)
    throw Error("ppd_p_part: multiplicative order does not divide m");
  return checked_mul(p_part_value(checked_pow(q, e) - 1, p), p_part_value(m / e, p));
}

Morenum morenum_holds(std::uint64_t r, std::uint64_t p, std::uint64_t f) {
  require_prime(r);
  require_prime(p);
  if (p == 2)
    throw InvalidArgument("morenum_holds: p must be odd");
  if (f < 3 || f % p != 0)
    throw InvalidArgument("morenum_holds: requires f >= 3 and p | f");
  Count rf = checked_pow(r, f);
  if ((rf + 1) % p != 0)
    throw InvalidArgument("morenum_holds: p does not divide r^f + 1");
  Count lhs = (rf + 1) / p;
  Count rhs = checked_pow(r, 2 * f / p) - 1;
  if (lhs > rhs)
    return Morenum::strict;
  return lhs == rhs ? Morenum::equality : Morenum::violated;
}

const char *to_string(Morenum m) {
  switch (m) {
  case Morenum::strict:
    return "strict";
  case Morenum::equality:
    return "equality";
  case Morenum::violated:
    return "violated";
  }
  return "?";
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= 1'000'000 && d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    out.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1) {
    if (!is_prime(n))
      throw ResourceLimit("cofactor " + std::to_string(n) + " cannot be factored by trial division");
    out.push_back(n);
  }
  return out;
}

} // namespace starp
