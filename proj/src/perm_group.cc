/** @file perm_group.cc
 *  Permutation groups and Schreier-Sims.
 */
#include "starp/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace starp {

namespace {

Point first_moved(const Permutation &g) {
  for (Point x = 0; x < g.degree(); ++x)
    if (g(x) != x)
      return x;
  return static_cast<Point>(g.degree());
}

class ProductReplacement {
public:
  ProductReplacement(std::size_t degree, const std::vector<Permutation> &gens, std::uint64_t seed)
      : accumulator_(degree), rng_(seed) {
    if (gens.empty()) {
      state_.push_back(Permutation(degree));
      return;
    }
    while (state_.size() < std::max<std::size_t>(10, gens.size()))
      for (const auto &g : gens)
        state_.push_back(g);
    for (int i = 0; i < 50; ++i)
      next();
  }

  const Permutation &next() {
    if (state_.size() < 2)
      return accumulator_ = state_.front();
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i)
      j = pick(rng_);
    state_[i] = (rng_() & 1) ? compose(state_[i], state_[j]) : compose(state_[i], state_[j].inverse());
    accumulator_ = compose(accumulator_, state_[i]);
    return accumulator_;
  }

private:
  std::vector<Permutation> state_;
  Permutation accumulator_;
  Rng rng_;
};

class Builder {
public:
  Builder(std::size_t degree, const StabChain::Options &options) : n_(degree), options_(options) {}

  std::vector<ChainLevel> run(const std::vector<Permutation> &input) {
    std::vector<Permutation> gens;
    for (const auto &g : input) {
      if (g.degree() != n_)
        throw InvalidArgument("generator degree does not match group degree");
      if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
        gens.push_back(g);
    }
    std::vector<bool> used(n_, false);
    for (Point b : options_.base_prefix) {
      if (b >= n_ || used[b])
        throw InvalidArgument("invalid or repeated base prefix point");
      used[b] = true;
      add_level(b);
    }
    for (const auto &g : gens) {
      bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                    [&](const ChainLevel &l) { return g(l.base) == l.base; });
      if (fixes_base)
        add_level(first_moved(g));
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      for (const auto &g : gens) {
        bool fixes = true;
        for (std::size_t e = 0; e < l && fixes; ++e)
          fixes = g(levels_[e].base) == levels_[e].base;
        if (fixes)
          levels_[l].generators.push_back(g);
      }
      extend(levels_[l], 0);
    }
    checked_orbit_.assign(levels_.size(), 0);
    checked_gens_.assign(levels_.size(), 0);
    if (gens.empty())
      return std::move(levels_);

    random_phase(gens);
    if (!reached_known_order())
      deterministic_phase();
    if (options_.known_order && current_order() != *options_.known_order)
      throw InvalidArgument("stated group order " + to_string(*options_.known_order) +
                            " disagrees with computed order " + to_string(current_order()));
    return std::move(levels_);
  }

private:
  void add_level(Point b) {
    ChainLevel level;
    level.base = b;
    level.position.assign(n_, -1);
    level.position[b] = 0;
    level.orbit.push_back(b);
    level.transversal.emplace_back(n_);
    level.inverse.emplace_back(n_);
    levels_.push_back(std::move(level));
    checked_orbit_.push_back(0);
    checked_gens_.push_back(0);
  }

  // Extends the orbit after generators from index `first_new` on were added.
  static void extend(ChainLevel &level, std::size_t first_new) {
    std::size_t old_size = level.orbit.size();
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      std::size_t start = k < old_size ? first_new : 0;
      for (std::size_t s = start; s < level.generators.size(); ++s) {
        Point y = level.generators[s](level.orbit[k]);
        if (level.position[y] >= 0)
          continue;
        level.position[y] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(y);
        Permutation t = compose(level.transversal[k], level.generators[s]);
        level.inverse.push_back(t.inverse());
        level.transversal.push_back(std::move(t));
      }
    }
  }

  StabChain::Sift sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const ChainLevel &level = levels_[l];
      Point y = g(level.base);
      if (level.position[y] < 0)
        return {std::move(g), l};
      g = compose(g, level.rep_inverse(y));
    }
    return {std::move(g), levels_.size()};
  }

  // Adds a residue to levels lo..j, creating a new base point when needed.
  void add_residue(const Permutation &r, std::size_t lo, std::size_t j) {
    if (j == levels_.size())
      add_level(first_moved(r));
    for (std::size_t l = lo; l <= j; ++l) {
      levels_[l].generators.push_back(r);
      extend(levels_[l], levels_[l].generators.size() - 1);
    }
  }

  Count current_order() const {
    Count order = 1;
    for (const auto &l : levels_)
      order = checked_mul(order, l.orbit.size());
    return order;
  }

  bool reached_known_order() const {
    if (!options_.known_order)
      return false;
    Count order = current_order();
    if (order > *options_.known_order)
      throw InvalidArgument("stated group order " + to_string(*options_.known_order) +
                            " is smaller than a verified subgroup");
    return order == *options_.known_order;
  }

  void random_phase(const std::vector<Permutation> &gens) {
    ProductReplacement pr(n_, gens, options_.seed);
    int quiet = 0;
    const int quiet_target = options_.known_order ? 1 << 30 : 24;
    for (int rounds = 0; rounds < 100000 && quiet < quiet_target; ++rounds) {
      if (reached_known_order())
        return;
      auto [residue, j] = sift(pr.next(), 0);
      if (j == levels_.size() && residue.is_identity()) {
        ++quiet;
        continue;
      }
      quiet = 0;
      add_residue(residue, 0, j);
    }
  }

  void deterministic_phase() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      auto li = static_cast<std::size_t>(i);
      bool restarted = false;
      for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
        for (std::size_t s = 0; s < levels_[li].generators.size(); ++s) {
          if (k < checked_orbit_[li] && s < checked_gens_[li])
            continue;
          const ChainLevel &level = levels_[li];
          const Permutation &gen = level.generators[s];
          Point gamma = level.orbit[k];
          Point delta = gen(gamma);
          Permutation ug = compose(level.transversal[k], gen);
          if (ug == level.rep(delta))
            continue;
          auto [residue, j] = sift(compose(ug, level.rep_inverse(delta)), li + 1);
          if (j == levels_.size() && residue.is_identity())
            continue;
          add_residue(residue, li + 1, j);
          if (reached_known_order())
            return;
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }
      if (!restarted) {
        checked_orbit_[li] = levels_[li].orbit.size();
        checked_gens_[li] = levels_[li].generators.size();
        --i;
      }
    }
  }

  std::size_t n_;
  const StabChain::Options &options_;
  std::vector<ChainLevel> levels_;
  std::vector<std::size_t> checked_orbit_;
  std::vector<std::size_t> checked_gens_;
};

} // namespace

StabChain StabChain::build(std::size_t degree, const std::vector<Permutation> &generators,
                           const Options &options) {
  StabChain chain;
  chain.degree_ = degree;
  chain.levels_ = Builder(degree, options).run(generators);
  return chain;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  for (const auto &l : levels_)
    out.push_back(l.base);
  return out;
}

Count StabChain::order(std::size_t from) const {
  Count order = 1;
  for (std::size_t l = from; l < levels_.size(); ++l)
    order = checked_mul(order, levels_[l].orbit.size());
  return order;
}

StabChain::Sift StabChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const ChainLevel &level = levels_[l];
    Point y = g(level.base);
    if (!level.in_orbit(y))
      return {std::move(g), l};
    g = compose(g, level.rep_inverse(y));
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  auto result = sift(g, 0);
  return result.level == levels_.size() && result.residue.is_identity();
}

StabChain StabChain::suffix(std::size_t level) const {
  StabChain chain;
  chain.degree_ = degree_;
  chain.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(std::min(level, levels_.size())),
                       levels_.end());
  return chain;
}

Permutation StabChain::random_element(Rng &rng) const {
  Permutation g(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g = compose(g, it->transversal[pick(rng)]);
  }
  return g;
}

void StabChain::for_each_element(const std::function<void(const Permutation &)> &visit) const {
  std::function<void(std::ptrdiff_t, const Permutation &)> walk =
      [&](std::ptrdiff_t l, const Permutation &acc) {
        if (l < 0) {
          visit(acc);
          return;
        }
        for (const auto &t : levels_[static_cast<std::size_t>(l)].transversal)
          walk(l - 1, compose(acc, t));
      };
  walk(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation(degree_));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {
  if (degree == 0)
    throw InvalidArgument("group degree must be positive");
  for (const auto &g : generators_)
    if (g.degree() != degree)
      throw InvalidArgument("generator degree does not match group degree");
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, StabChain chain,
                     std::string name)
    : PermGroup(degree, std::move(generators), std::move(name)) {
  std::call_once(cache_->once, [&] { cache_->chain = std::move(chain); });
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n < 2)
    return trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})},
                   "S" + std::to_string(n));
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n < 3)
    return trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cycle(n % 2 == 1 ? n : n - 1);
  std::iota(cycle.begin(), cycle.end(), Point{n % 2 == 1 ? 0u : 1u});
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {cycle})},
                   "A" + std::to_string(n));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n < 2)
    return trivial(1);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {cycle})}, "C" + std::to_string(n));
}

const StabChain &PermGroup::chain() const {
  std::call_once(cache_->once, [&] { cache_->chain = StabChain::build(degree_, generators_); });
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation &x) const { return chain().contains(x); }

StabChain PermGroup::chain_with_base(const std::vector<Point> &prefix, std::uint64_t seed) const {
  StabChain::Options options;
  options.base_prefix = prefix;
  options.known_order = order();
  options.seed = seed;
  return StabChain::build(degree_, generators_, options);
}

OrbitPartition orbits(std::size_t degree, const std::vector<Permutation> &generators) {
  OrbitPartition result;
  result.degree = degree;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  result.orbit_of.assign(degree, kNone);
  for (Point start = 0; start < degree; ++start) {
    if (result.orbit_of[start] != kNone)
      continue;
    std::size_t id = result.orbits.size();
    std::vector<Point> orb{start};
    result.orbit_of[start] = id;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto &g : generators) {
        Point y = g(orb[k]);
        if (result.orbit_of[y] == kNone) {
          result.orbit_of[y] = id;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    result.orbits.push_back(std::move(orb));
  }
  return result;
}

std::vector<Point> orbit(const PermGroup &g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto &s : g.generators()) {
      Point y = s(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

bool is_transitive(const PermGroup &g) { return orbit(g, 0).size() == g.degree(); }

bool is_2_transitive(const PermGroup &g) {
  if (!is_transitive(g))
    return false;
  if (g.degree() < 2)
    return true;
  PermGroup stab = point_stabilizer(g, 0);
  return orbit(stab, 1).size() == g.degree() - 1;
}

PermGroup point_stabilizer(const PermGroup &g, Point omega) {
  return pointwise_stabilizer(g, {omega});
}

PermGroup pointwise_stabilizer(const PermGroup &g, const std::vector<Point> &points) {
  StabChain chain = g.chain_with_base(points);
  StabChain rest = chain.suffix(points.size());
  std::vector<Permutation> gens;
  if (rest.length() > 0)
    gens = rest.level(0).generators;
  return PermGroup(g.degree(), std::move(gens), std::move(rest));
}

std::vector<Permutation> elements(const PermGroup &g, std::uint64_t cap) {
  Count order = g.order();
  if (order > cap)
    throw ResourceLimit("group order " + to_string(order) + " exceeds enumeration cap " +
                        std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order));
  g.chain().for_each_element([&](const Permutation &x) { out.push_back(x); });
  return out;
}

bool is_subgroup(const PermGroup &h, const PermGroup &g) {
  if (h.degree() != g.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation &x) { return g.contains(x); });
}

std::vector<std::size_t> orbit_lengths(const PermGroup &g) {
  std::vector<std::size_t> out;
  for (const auto &o : orbits(g).orbits)
    out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup conjugate(const PermGroup &h, const Permutation &x) {
  std::vector<Permutation> gens;
  for (const auto &g : h.generators())
    gens.push_back(conjugate(g, x));
  return PermGroup(h.degree(), std::move(gens));
}

std::vector<std::size_t> minimal_block_partition(std::size_t degree,
                                                 const std::vector<Permutation> &generators,
                                                 const std::vector<Point> &seed) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Point, Point>> pending;
  for (std::size_t i = 1; i < seed.size(); ++i)
    pending.emplace_back(seed[0], seed[i]);
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    Point ra = find(a), rb = find(b);
    if (ra == rb)
      continue;
    parent[std::max(ra, rb)] = std::min(ra, rb);
    for (const auto &g : generators)
      pending.emplace_back(g(ra), g(rb));
  }
  std::vector<std::size_t> id(degree, degree);
  std::vector<std::size_t> block_of(degree);
  std::size_t next = 0;
  for (Point x = 0; x < degree; ++x) {
    Point r = find(x);
    if (id[r] == degree)
      id[r] = next++;
    block_of[x] = id[r];
  }
  return block_of;
}

std::vector<Point> support(const PermGroup &g) {
  std::vector<Point> out;
  for (Point x = 0; x < g.degree(); ++x)
    for (const auto &s : g.generators())
      if (s(x) != x) {
        out.push_back(x);
        break;
      }
  return out;
}

} // namespace starp
