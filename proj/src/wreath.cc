/** @file wreath.cc
 *  Wreath products and their Sylow subgroups.
 */
#include "starp/wreath.hpp"

#include "starp/numth.hpp"

namespace starp {

namespace {

struct Layout {
  WreathMode mode;
  std::size_t m, k, degree;
  std::vector<std::size_t> power;  // m^(k-1-c) for coordinate c
};

Layout layout(WreathMode mode, std::size_t m, std::size_t k, const Limits &limits) {
  Layout l{mode, m, k, 0, {}};
  if (mode == WreathMode::imprimitive) {
    l.degree = m * k;
  } else {
    Count d = checked_pow(m, k);
    if (d > limits.max_degree)
      throw ResourceLimit("product action degree " + to_string(d) + " exceeds the cap");
    l.degree = static_cast<std::size_t>(d);
    l.power.assign(k, 1);
    for (std::size_t c = k - 1; c-- > 0;)
      l.power[c] = l.power[c + 1] * m;
  }
  return l;
}

// h acting in block or coordinate c.
Permutation embed_base(const Layout &l, const Permutation &h, std::size_t c) {
  std::vector<Point> img(l.degree);
  for (std::size_t x = 0; x < l.degree; ++x) {
    if (l.mode == WreathMode::imprimitive) {
      std::size_t delta = x / l.m, omega = x % l.m;
      img[x] = static_cast<Point>(delta == c ? delta * l.m + h(static_cast<Point>(omega)) : x);
    } else {
      std::size_t digit = (x / l.power[c]) % l.m;
      img[x] = static_cast<Point>(x + (h(static_cast<Point>(digit)) - digit) * l.power[c]);
    }
  }
  return Permutation::unchecked(std::move(img));
}

Permutation embed_top(const Layout &l, const Permutation &s) {
  std::vector<Point> img(l.degree);
  for (std::size_t x = 0; x < l.degree; ++x) {
    if (l.mode == WreathMode::imprimitive) {
      std::size_t delta = x / l.m, omega = x % l.m;
      img[x] = static_cast<Point>(s(static_cast<Point>(delta)) * l.m + omega);
    } else {
      std::size_t y = 0;
      for (std::size_t c = 0; c < l.k; ++c) {
        std::size_t digit = (x / l.power[c]) % l.m;
        y += digit * l.power[s(static_cast<Point>(c))];
      }
      img[x] = static_cast<Point>(y);
    }
  }
  return Permutation::unchecked(std::move(img));
}

std::vector<Permutation> wreath_generators(const Layout &l, const std::vector<Permutation> &base_gens,
                                           const std::vector<Permutation> &top_gens,
                                           const std::vector<std::size_t> &coordinates) {
  std::vector<Permutation> gens;
  for (std::size_t c : coordinates)
    for (const auto &h : base_gens)
      gens.push_back(embed_base(l, h, c));
  for (const auto &s : top_gens)
    gens.push_back(embed_top(l, s));
  return gens;
}

WreathProduct build(const PermGroup &h, const PermGroup &k, WreathMode mode, const Limits &limits) {
  Layout l = layout(mode, h.degree(), k.degree(), limits);
  std::vector<std::size_t> reps;
  for (const auto &o : orbits(k).orbits)
    reps.push_back(o.front());
  PermGroup g(l.degree, wreath_generators(l, h.generators(), k.generators(), reps));
  Count expected = k.order();
  for (std::size_t i = 0; i < k.degree(); ++i)
    expected = checked_mul(expected, h.order());
  if (g.order() != expected)
    throw Error("wreath product order " + to_string(g.order()) + " differs from |H|^k |K| = " +
                to_string(expected));
  std::string sep = mode == WreathMode::imprimitive ? " Wr " : " PWr ";
  if (!h.name().empty() && !k.name().empty())
    g.set_name("(" + h.name() + ")" + sep + "(" + k.name() + ")");
  WreathProduct w{h, k, mode, g, std::nullopt};
  if (mode == WreathMode::imprimitive) {
    std::vector<std::size_t> ids(l.degree);
    for (std::size_t x = 0; x < l.degree; ++x)
      ids[x] = x / l.m;
    w.blocks = BlockSystem::from_ids(l.degree, ids);
  }
  return w;
}

} // namespace

nlohmann::json WreathProduct::encoding() const {
  if (mode == WreathMode::imprimitive)
    return {{"mode", "imprimitive"}, {"m", h.degree()}, {"k", k.degree()},
            {"point", "(omega, delta) -> delta*m + omega, 0-based"}};
  return {{"mode", "product"}, {"m", h.degree()}, {"k", k.degree()},
          {"point", "(d_1..d_k) -> base-m digits, d_1 most significant, 0-based"}};
}

WreathProduct wreath_imprimitive(const PermGroup &h, const PermGroup &k) {
  return build(h, k, WreathMode::imprimitive, Limits{});
}

WreathProduct wreath_product_action(const PermGroup &h, const PermGroup &k, const Limits &limits) {
  return build(h, k, WreathMode::product, limits);
}

SylowResult sylow_structural(const WreathProduct &w, std::uint64_t p, const Limits &limits) {
  SylowResult ph = sylow_subgroup(w.h, p, limits);
  SylowResult qk = sylow_subgroup(w.k, p, limits);
  Layout l = layout(w.mode, w.h.degree(), w.k.degree(), limits);
  std::vector<std::size_t> all(w.k.degree());
  for (std::size_t c = 0; c < all.size(); ++c)
    all[c] = c;
  std::vector<Permutation> gens = wreath_generators(l, ph.subgroup.generators(), qk.subgroup.generators(), all);
  Count order = qk.order;
  for (std::size_t i = 0; i < w.k.degree(); ++i)
    order = checked_mul(order, ph.order);
  StabChain::Options options;
  options.known_order = order;
  StabChain chain = StabChain::build(l.degree, gens, options);
  SylowResult r;
  r.p = p;
  r.subgroup = PermGroup(l.degree, std::move(gens), std::move(chain));
  r.order = order;
  r.method = SylowMethod::structural;
  if (order != p_part_value(w.group.order(), p))
    throw Error("structural Sylow order mismatch");
  return r;
}

} // namespace starp
