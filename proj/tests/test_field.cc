/** @file test_field.cc
 *  Tests for finite fields.
 */
#include "doctest.h"

#include "starp/field.hpp"
#include "starp/numth.hpp"

using namespace starp;

namespace {

using Poly = std::vector<unsigned>;

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly &b, unsigned p) {
  while (a.size() >= b.size()) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - lead * b[i] % p) % p;
    a.pop_back();
  }
  return a;
}

bool is_zero(const Poly &a) {
  for (unsigned c : a)
    if (c)
      return false;
  return true;
}

Poly monic_from_code(unsigned code, unsigned p, unsigned k) {
  Poly f(k + 1);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[k] = 1;
  return f;
}

bool irreducible(const Poly &f, unsigned p) {
  unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i)
      count *= p;
    for (unsigned code = 0; code < count; ++code)
      if (is_zero(poly_mod(f, monic_from_code(code, p, d), p)))
        return false;
  }
  return true;
}

// Lexicographic order on (c_0, c_1, ...) is the order of codes read with c_0
// most significant.
Poly smallest_irreducible(unsigned p, unsigned k) {
  unsigned count = 1;
  for (unsigned i = 0; i < k; ++i)
    count *= p;
  Poly best;
  for (unsigned code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, p, k);
    if (!irreducible(f, p))
      continue;
    if (best.empty() || std::lexicographical_compare(f.begin(), f.end(), best.begin(), best.end()))
      best = f;
  }
  return best;
}

Poly poly_mul_mod(const Poly &a, const Poly &b, const Poly &m, unsigned p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  r = poly_mod(r, m, p);
  r.resize(m.size() - 1, 0);
  return r;
}

} // namespace

TEST_CASE("moduli are the lexicographically least irreducibles") {
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 1).order() == 2);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 3}, {5, 2}, {7, 2}}) {
    Poly expect = smallest_irreducible(p, k);
    auto got = Field::make(p, k).modulus();
    CHECK(Poly(got.begin(), got.end()) == expect);
  }
  CHECK_THROWS_AS(Field::make(2, 0), InvalidArgument);
  CHECK_THROWS_AS(Field::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 21), ResourceLimit);
}

TEST_CASE("field axioms hold exhaustively up to order 256") {
  for (unsigned q = 2; q <= 256; ++q) {
    std::uint64_t p = 0, k = 0;
    if (!prime_power(q, &p, &k))
      continue;
    Field f = Field::make(p, k);
    INFO("q = " << q);
    bool ok = true;
    for (Field::Elt a = 0; a < q && ok; ++a) {
      ok = ok && f.add(a, f.neg(a)) == 0 && f.add(a, 0) == a && f.mul(a, 1) == a;
      if (a != 0)
        ok = ok && f.mul(a, f.inv(a)) == 1 && f.exp(f.log(a)) == a;
      for (Field::Elt b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (Field::Elt c = 0; c < q && ok; ++c)
          ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) &&
               f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
               f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("multiplication matches polynomial arithmetic and the primitive element generates") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {2, 6}}) {
    Field f = Field::make(p, k);
    Poly m(f.modulus().begin(), f.modulus().end());
    bool ok = true;
    for (Field::Elt a = 0; a < f.order(); ++a)
      for (Field::Elt b = 0; b < f.order(); ++b) {
        auto ca = f.coefficients(a), cb = f.coefficients(b), cab = f.coefficients(f.mul(a, b));
        ok = ok && poly_mul_mod(Poly(ca.begin(), ca.end()), Poly(cb.begin(), cb.end()), m, p) ==
                       Poly(cab.begin(), cab.end());
      }
    CHECK(ok);
    std::vector<bool> seen(f.order(), false);
    Field::Elt x = 1;
    for (std::uint64_t i = 0; i + 1 < f.order(); ++i) {
      CHECK_FALSE(seen[x]);
      seen[x] = true;
      x = f.mul(x, f.primitive());
    }
    CHECK(x == 1);
  }
  Field f = Field::make(3, 2);
  CHECK(f.coefficients(5) == std::vector<std::uint32_t>{2, 1});
}
