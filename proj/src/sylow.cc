/** @file sylow.cc
 *  Sylow subgroups and normalizers.
 */
#include "starp/sylow.hpp"

#include "starp/centralizer.hpp"
#include "starp/homomorphism.hpp"
#include "starp/numth.hpp"

#include <algorithm>
#include <set>

namespace starp {

namespace {

constexpr int kElementAttempts = 100000;

/// Random element of order exactly p, or nullopt after the attempt budget.
std::optional<Permutation> element_of_order_p(const PermGroup &g, std::uint64_t p, Rng &rng,
                                              int attempts = kElementAttempts) {
  const StabChain &chain = g.chain();
  for (int i = 0; i < attempts; ++i) {
    Permutation x = chain.random_element(rng);
    Count o = x.order();
    if (o % p == 0)
      return x.pow(static_cast<long long>(o / p));
  }
  return std::nullopt;
}

PermGroup with_order(std::size_t degree, std::vector<Permutation> gens, Count order) {
  StabChain::Options options;
  options.known_order = order;
  StabChain chain = StabChain::build(degree, gens, options);
  return PermGroup(degree, std::move(gens), std::move(chain));
}

PermGroup extend(const PermGroup &p, const Permutation &y) {
  std::vector<Permutation> gens = p.generators();
  gens.push_back(y);
  return PermGroup(p.degree(), std::move(gens));
}

bool normalizes(const Permutation &x, const PermGroup &h) {
  for (const auto &s : h.generators())
    if (!h.contains(conjugate(s, x)))
      return false;
  return true;
}

class Reduction {
public:
  Reduction(std::uint64_t p, const Limits &limits) : p_(p), rng_(limits.seed) {}

  PermGroup run(const PermGroup &g) {
    Count order = g.order();
    Count q = p_part_value(order, p_);
    if (q == 1)
      return PermGroup::trivial(g.degree());
    if (q == order)
      return g;

    // Descend the stabilizer chain while the basic orbits have length prime to p.
    const StabChain &chain = g.chain();
    std::size_t l = 0;
    while (l < chain.length() && chain.level(l).orbit.size() % p_ != 0)
      ++l;
    if (l > 0) {
      StabChain rest = chain.suffix(l);
      std::vector<Permutation> gens = rest.level(0).generators;
      return run(PermGroup(g.degree(), std::move(gens), std::move(rest)));
    }

    if (q == p_)
      return cyclic_p(g);

    std::vector<Point> moved = support(g);
    OrbitPartition parts = orbits(g);
    std::size_t nontrivial = 0;
    for (const auto &o : parts.orbits)
      nontrivial += o.size() > 1;
    if (nontrivial > 1)
      return by_orbits(g, moved, q);
    if (moved.size() < g.degree()) {
      ActionHom f = restriction_hom(g, moved);
      return f.preimage(run(f.image()));
    }

    for (Point beta = 1; beta < g.degree(); ++beta) {
      auto block_of = minimal_block_partition(g.degree(), g.generators(), {0, beta});
      std::size_t count = *std::max_element(block_of.begin(), block_of.end()) + 1;
      if (count == 1)
        continue;
      ActionHom f = block_hom(g, block_of, count);
      PermGroup t = run(f.image());
      if (t.order() < f.image().order())
        return run(f.preimage(t));
      break;
    }
    return by_central_element(g, q);
  }

private:
  PermGroup cyclic_p(const PermGroup &g) {
    auto x = element_of_order_p(g, p_, rng_);
    if (!x)
      throw ResourceLimit("no element of order " + std::to_string(p_) + " found");
    return with_order(g.degree(), {*x}, p_);
  }

  PermGroup by_orbits(const PermGroup &g, const std::vector<Point> &moved, Count q) {
    PermGroup s = g;
    std::vector<bool> done(g.degree(), false);
    for (Point x : moved) {
      if (s.order() == q)
        break;
      if (done[x])
        continue;
      std::vector<Point> orb = orbit(s, x);
      std::sort(orb.begin(), orb.end());
      for (Point y : orb)
        done[y] = true;
      if (orb.size() == 1)
        continue;
      ActionHom f = restriction_hom(s, orb);
      s = f.preimage(run(f.image()));
    }
    if (s.order() != q)
      throw Error("orbit reduction did not reach a Sylow subgroup");
    return s;
  }

  PermGroup by_central_element(const PermGroup &g, Count q) {
    auto first = element_of_order_p(g, p_, rng_);
    if (!first)
      throw ResourceLimit("no element of order " + std::to_string(p_) + " found");
    Permutation z = *first;
    PermGroup c = centralizer(g, z);
    int attempts = 0;
    while (p_part_value(c.order(), p_) < q) {
      if (++attempts > 5000)
        throw ResourceLimit("no p-central element found within the retry budget");
      auto x = element_of_order_p(c, p_, rng_);
      if (!x)
        continue;
      PermGroup c2 = centralizer(g, *x);
      if (p_part_value(c2.order(), p_) > p_part_value(c.order(), p_)) {
        z = *x;
        c = std::move(c2);
      }
    }
    // C permutes the cycles of z; the kernel of that action lies in the
    // product of the cyclic groups generated by the individual cycles.
    std::vector<std::size_t> cycle_of(g.degree());
    std::vector<bool> seen(g.degree(), false);
    std::size_t count = 0;
    for (Point x = 0; x < g.degree(); ++x) {
      if (seen[x])
        continue;
      for (Point y = x; !seen[y]; y = z(y)) {
        seen[y] = true;
        cycle_of[y] = count;
      }
      ++count;
    }
    ActionHom f = block_hom(c, cycle_of, count);
    PermGroup result = f.preimage(run(f.image()));
    if (result.order() != q)
      throw Error("centralizer reduction did not reach a Sylow subgroup");
    return result;
  }

  std::uint64_t p_;
  Rng rng_;
};

PermGroup sylow_ascent(const PermGroup &g, std::uint64_t p, const Limits &limits) {
  Count q = p_part_value(g.order(), p);
  Rng rng(limits.seed);
  PermGroup pg = PermGroup::trivial(g.degree());
  while (pg.order() < q) {
    PermGroup n = normalizer(g, pg, limits);
    std::optional<Permutation> y;
    for (unsigned attempt = 0; attempt < limits.retry_budget && !y; ++attempt) {
      Permutation x = n.chain().random_element(rng);
      Count o = x.order();
      Permutation cand = x.pow(static_cast<long long>(o / p_part_value(o, p)));
      if (!cand.is_identity() && !pg.contains(cand))
        y = cand;
    }
    if (!y) {
      for (const auto &x : elements(n, limits.max_enum)) {
        Count o = x.order();
        if (o > 1 && p_part_value(o, p) == o && !pg.contains(x)) {
          y = x;
          break;
        }
      }
    }
    if (!y)
      throw Error("ascent found no p-element in the normalizer");
    pg = extend(pg, *y);
  }
  return pg;
}

PermGroup sylow_oracle(const PermGroup &g, std::uint64_t p, const Limits &limits) {
  Count q = p_part_value(g.order(), p);
  std::vector<Permutation> pelts;
  for (const auto &x : elements(g, limits.max_enum)) {
    Count o = x.order();
    if (o > 1 && p_part_value(o, p) == o)
      pelts.push_back(x);
  }
  PermGroup pg = PermGroup::trivial(g.degree());
  while (pg.order() < q) {
    bool grown = false;
    for (const auto &y : pelts) {
      if (!pg.contains(y) && normalizes(y, pg)) {
        pg = extend(pg, y);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw Error("oracle closure stalled");
  }
  return pg;
}

} // namespace

const char *to_string(SylowMethod m) {
  switch (m) {
  case SylowMethod::reduction:
    return "reduction";
  case SylowMethod::ascent:
    return "ascent";
  case SylowMethod::oracle:
    return "oracle";
  case SylowMethod::structural:
    return "structural";
  }
  return "?";
}

Permutation p_element(const PermGroup &g, std::uint64_t p, Rng &rng, const Limits &limits) {
  Count order = g.order();
  if (p_part_value(order, p) == 1)
    throw InvalidArgument("p_element: p does not divide the group order");
  const StabChain &chain = g.chain();
  for (unsigned attempt = 0; attempt < limits.retry_budget; ++attempt) {
    Permutation x = chain.random_element(rng);
    Count o = x.order();
    if (o % p == 0)
      return x.pow(static_cast<long long>(o / p_part_value(o, p)));
  }
  for (const auto &x : elements(g, limits.max_enum)) {
    Count o = x.order();
    if (o > 1 && p_part_value(o, p) == o)
      return x;
  }
  throw Error("p_element: no p-element found");
}

PermGroup normalizer(const PermGroup &g, const PermGroup &h, const Limits &limits) {
  if (!is_subgroup(h, g))
    throw InvalidArgument("normalizer: h is not a subgroup of g");
  if (g.order() > limits.max_enum)
    throw ResourceLimit("normalizer: group order " + to_string(g.order()) + " exceeds the cap");
  std::vector<Permutation> gens = h.generators();
  PermGroup n(g.degree(), gens);
  g.chain().for_each_element([&](const Permutation &x) {
    if (n.contains(x) || !normalizes(x, h))
      return;
    gens.push_back(x);
    n = PermGroup(g.degree(), gens);
  });
  return n;
}

SylowResult sylow_subgroup(const PermGroup &g, std::uint64_t p, const Limits &limits) {
  return sylow_subgroup(g, p, SylowMethod::reduction, limits);
}

SylowResult sylow_subgroup(const PermGroup &g, std::uint64_t p, SylowMethod method,
                           const Limits &limits) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  SylowResult result;
  result.p = p;
  result.method = method;
  result.order = p_part_value(g.order(), p);
  switch (method) {
  case SylowMethod::reduction:
    result.subgroup = Reduction(p, limits).run(g);
    break;
  case SylowMethod::ascent:
    result.subgroup = sylow_ascent(g, p, limits);
    break;
  case SylowMethod::oracle:
    result.subgroup = sylow_oracle(g, p, limits);
    break;
  case SylowMethod::structural:
    throw InvalidArgument("structural Sylow subgroups come from the wreath module");
  }
  if (result.subgroup.order() != result.order)
    throw Error("Sylow computation produced a subgroup of the wrong order");
  return result;
}

std::vector<std::size_t> sylow_orbit_lengths(const PermGroup &g, std::uint64_t p,
                                             const Limits &limits) {
  return orbit_lengths(sylow_subgroup(g, p, limits).subgroup);
}

std::string format_multiset(const std::vector<std::size_t> &values) {
  if (values.empty())
    return "-";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

} // namespace starp
