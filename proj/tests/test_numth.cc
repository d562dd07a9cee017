/** @file test_numth.cc
 *  Tests for number theory.
 */
#include "doctest.h"
#include "oracles.hpp"

#include "starp/numth.hpp"

using namespace starp;

namespace {

bool naive_prime(unsigned long long n) {
  if (n < 2)
    return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("p-parts") {
  CHECK(p_part_value(12, 2) == 4);
  CHECK(p_part_value(12, 3) == 3);
  CHECK(p_part_value(63, 3) == 9);
  PPart pp = p_part(720, 2);
  CHECK(pp.p_part == 16);
  CHECK(pp.cofactor == 45);
  for (unsigned long long n = 1; n < 3000; ++n)
    for (unsigned long long p : {2ull, 3ull, 5ull, 7ull})
      CHECK(p_part_value(n, p) == oracle::p_part(n, p));
  CHECK_THROWS_AS(p_part(12, 4), InvalidArgument);
}

TEST_CASE("primality and factorization agree with trial division") {
  for (unsigned long long n = 0; n < 5000; ++n)
    CHECK(is_prime(n) == naive_prime(n));
  CHECK(is_prime(2305843009213693951ull));
  CHECK_FALSE(is_prime(2305843009213693953ull));
  CHECK(prime_divisors(4095) == std::vector<std::uint64_t>{3, 5, 7, 13});
  CHECK(prime_divisors(2147483647ull * 2) == std::vector<std::uint64_t>{2, 2147483647ull});
}

TEST_CASE("multiplicative order") {
  CHECK(mult_order(2, 3) == 2);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 2) == 1);
  CHECK_THROWS_AS(mult_order(6, 3), InvalidArgument);
}

TEST_CASE("checked powers detect overflow") {
  CHECK(checked_pow(2, 62) == (Count(1) << 62));
  CHECK_THROWS_AS(checked_pow(2, 63), ResourceLimit);
  CHECK_THROWS_AS(checked_pow(10, 30), ResourceLimit);
  std::uint64_t r = 0, k = 0;
  CHECK(prime_power(729, &r, &k));
  CHECK((r == 3 && k == 6));
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
}

TEST_CASE("closed-form p-part of q^m - 1") {
  CHECK(ppd_p_part(2, 6, 3) == 9);
  CHECK(ppd_p_part(3, 2, 2) == 8);
  CHECK(ppd_p_part(3, 1, 2) == 2);
  std::size_t cases = 0;
  for (unsigned long long q = 2; q <= 16; ++q) {
    if (!prime_power(q))
      continue;
    for (unsigned long long m = 1; m <= 12; ++m) {
      unsigned long long n = 1;
      for (unsigned long long i = 0; i < m; ++i)
        n *= q;
      n -= 1;
      for (unsigned long long p = 2; p <= n && p < 200000; ++p) {
        if (!naive_prime(p) || n % p != 0)
          continue;
        ++cases;
        CHECK(ppd_p_part(q, m, p) == oracle::p_part(n, p));
      }
    }
  }
  CHECK(cases > 300);
  CHECK_THROWS_AS(ppd_p_part(2, 3, 3), InvalidArgument);
}

TEST_CASE("the (r,p,f) inequality") {
  CHECK(morenum_holds(2, 3, 3) == Morenum::equality);
  CHECK(morenum_holds(2, 3, 9) == Morenum::strict);
  CHECK(morenum_holds(5, 3, 3) == Morenum::strict);
  CHECK_THROWS_AS(morenum_holds(2, 3, 6), InvalidArgument);
  CHECK_THROWS_AS(morenum_holds(2, 2, 4), InvalidArgument);
  int equalities = 0;
  for (unsigned long long r = 2; r <= 13; ++r)
    for (unsigned long long p = 3; p <= 11; p += 2)
      for (unsigned long long f = 3; f <= 12; ++f) {
        if (!naive_prime(r) || !naive_prime(p) || f % p != 0)
          continue;
        unsigned long long rf = 1;
        for (unsigned long long i = 0; i < f; ++i)
          rf *= r;
        if ((rf + 1) % p != 0)
          continue;
        unsigned long long lhs = (rf + 1) / p, rhs = 1;
        for (unsigned long long i = 0; i < 2 * f / p; ++i)
          rhs *= r;
        rhs -= 1;
        Morenum expect = lhs > rhs ? Morenum::strict : lhs == rhs ? Morenum::equality : Morenum::violated;
        CHECK(morenum_holds(r, p, f) == expect);
        CHECK(expect != Morenum::violated);
        equalities += expect == Morenum::equality;
      }
  CHECK(equalities == 1);
}
