/** @file field.cc
 *  Finite field arithmetic with log tables.
 */
#include "starp/field.hpp"

#include "starp/numth.hpp"

#include <string>

namespace starp {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly &m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly &a, const Poly &b, const Poly &m, std::uint32_t p) {
  if (a.empty() || b.empty())
    return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

Poly poly_pow_mod(Poly a, std::uint64_t e, const Poly &m, std::uint32_t p) {
  Poly r{1};
  while (e > 0) {
    if (e & 1)
      r = poly_mul_mod(r, a, m, p);
    a = poly_mul_mod(a, a, m, p);
    e >>= 1;
  }
  return r;
}

Poly digits(std::uint64_t code, std::uint32_t p, std::size_t k) {
  Poly a(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    a[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  trim(a);
  return a;
}

std::uint64_t encode(const Poly &a, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    code = code * p + a[i];
  return code;
}

bool irreducible(const Poly &m, std::uint32_t p) {
  std::size_t k = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f = digits(code, p, d);
      f.resize(d, 0);
      f.push_back(1);
      if (poly_mod(m, f, p).empty())
        return false;
    }
  }
  return true;
}

} // namespace

Field Field::make(std::uint64_t p, std::uint64_t k, const Limits &limits) {
  if (!is_prime(p))
    throw InvalidArgument("field characteristic must be prime");
  if (k == 0)
    throw InvalidArgument("field degree must be positive");
  Count q = checked_pow(p, k);
  if (q > limits.field_cap)
    throw ResourceLimit("field order " + to_string(q) + " exceeds the cap");
  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint64_t>(q);
  auto pp = static_cast<std::uint32_t>(p);

  // Lexicographic order with c_0 most significant: iterate the reversed digit string.
  for (std::uint64_t code = 0; code < f.q_; ++code) {
    Poly m(k, 0);
    std::uint64_t c = code;
    for (std::size_t i = k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m.push_back(1);
    if (irreducible(m, pp)) {
      f.modulus_ = m;
      break;
    }
  }

  std::vector<std::uint64_t> divisors = f.q_ > 2 ? prime_divisors(f.q_ - 1) : std::vector<std::uint64_t>{};
  Poly generator;
  for (std::uint64_t code = 1; code < f.q_; ++code) {
    Poly g = digits(code, pp, k);
    bool primitive = true;
    for (std::uint64_t r : divisors)
      if (poly_pow_mod(g, (f.q_ - 1) / r, f.modulus_, pp) == Poly{1}) {
        primitive = false;
        break;
      }
    if (primitive) {
      generator = g;
      break;
    }
  }
  f.exp_.resize(f.q_ - 1);
  f.log_.assign(f.q_, 0);
  Poly x{1};
  for (std::uint64_t e = 0; e + 1 < f.q_; ++e) {
    auto code = static_cast<Elt>(encode(x, pp));
    f.exp_[e] = code;
    f.log_[code] = static_cast<std::uint32_t>(e);
    x = poly_mul_mod(x, generator, f.modulus_, pp);
  }
  if (x != Poly{1})
    throw Error("field construction: generator order mismatch");
  return f;
}

Field::Elt Field::add(Elt a, Elt b) const {
  if (p_ == 2)
    return a ^ b;
  if (k_ == 1)
    return static_cast<Elt>((a + b) % p_);
  Elt r = 0, scale = 1;
  while (a > 0 || b > 0) {
    r += static_cast<Elt>(((a % p_) + (b % p_)) % p_) * scale;
    a /= static_cast<Elt>(p_);
    b /= static_cast<Elt>(p_);
    scale *= static_cast<Elt>(p_);
  }
  return r;
}

Field::Elt Field::neg(Elt a) const {
  if (p_ == 2)
    return a;
  if (k_ == 1)
    return static_cast<Elt>((p_ - a) % p_);
  Elt r = 0, scale = 1;
  while (a > 0) {
    r += static_cast<Elt>((p_ - a % p_) % p_) * scale;
    a /= static_cast<Elt>(p_);
    scale *= static_cast<Elt>(p_);
  }
  return r;
}

Field::Elt Field::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0)
    return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

Field::Elt Field::inv(Elt a) const {
  if (a == 0)
    throw InvalidArgument("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elt Field::pow(Elt a, std::uint64_t e) const {
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  return exp_[static_cast<std::uint64_t>(static_cast<Count>(log_[a]) * e % (q_ - 1))];
}

std::vector<std::uint32_t> Field::coefficients(Elt a) const {
  std::vector<std::uint32_t> out(k_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    out[i] = static_cast<std::uint32_t>(a % p_);
    a /= static_cast<Elt>(p_);
  }
  return out;
}

} // namespace starp
