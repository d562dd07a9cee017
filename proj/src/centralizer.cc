/** @file centralizer.cc
 *  Centralizers by backtrack search.
 */
#include "starp/centralizer.hpp"

#include <algorithm>
#include <optional>

namespace starp {

namespace {

// The base runs through each <H>-orbit in breadth-first order, so every
// non-root base point is the image of an earlier one under a generator of H.
// The image of such a point under a centralizing element is then forced.
class CentralizerSearch {
public:
  CentralizerSearch(const PermGroup &g, const std::vector<Permutation> &h) : g_(g), h_(h) {
    n_ = g.degree();
    for (const auto &x : h_)
      h_inv_.push_back(x.inverse());
    OrbitPartition parts = orbits(n_, h_);
    std::vector<std::size_t> order(parts.orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return parts.orbits[a].size() > parts.orbits[b].size();
    });
    orbit_size_.assign(n_, 0);
    position_.assign(n_, 0);
    std::vector<bool> placed(n_, false);
    for (std::size_t oi : order) {
      const auto &orb = parts.orbits[oi];
      for (Point x : orb)
        orbit_size_[x] = orb.size();
      std::size_t start = base_.size();
      push(orb.front(), std::nullopt, placed);
      for (std::size_t k = start; k < base_.size(); ++k)
        for (std::size_t s = 0; s < h_.size(); ++s) {
          Point y = h_[s](base_[k]);
          if (!placed[y])
            push(y, Forced{k, s}, placed);
        }
    }
    chain_ = g.chain_with_base(base_);
  }

  PermGroup run() {
    std::vector<Permutation> found;
    std::vector<std::size_t> found_level;
    for (const auto &x : g_.generators())
      if (commutes(x)) {
        found.push_back(x);
        found_level.push_back(0);
      }
    Count order = 1;
    for (std::size_t i = n_; i-- > 0;) {
      if (forced_[i] || chain_.level(i).orbit.size() == 1)
        continue;
      std::vector<Permutation> level_gens;
      for (std::size_t k = 0; k < found.size(); ++k)
        if (fixes_prefix(found[k], i))
          level_gens.push_back(found[k]);
      std::vector<bool> reached(n_, false);
      std::vector<Point> reach{base_[i]};
      reached[base_[i]] = true;
      auto close = [&] {
        for (std::size_t k = 0; k < reach.size(); ++k)
          for (const auto &s : level_gens) {
            Point y = s(reach[k]);
            if (!reached[y]) {
              reached[y] = true;
              reach.push_back(y);
            }
          }
      };
      close();
      for (Point gamma : chain_.level(i).orbit) {
        if (reached[gamma])
          continue;
        std::optional<Permutation> hit = search(i, gamma);
        if (!hit)
          continue;
        found.push_back(*hit);
        found_level.push_back(i);
        level_gens.push_back(*hit);
        close();
      }
      order = checked_mul(order, reach.size());
    }
    std::vector<Permutation> gens;
    for (const auto &x : found)
      if (!x.is_identity() && std::find(gens.begin(), gens.end(), x) == gens.end())
        gens.push_back(x);
    StabChain::Options options;
    options.known_order = order;
    StabChain chain = StabChain::build(n_, gens, options);
    return PermGroup(n_, std::move(gens), std::move(chain));
  }

private:
  struct Forced {
    std::size_t parent;  ///< index into base_
    std::size_t gen;     ///< index into h_
  };

  void push(Point x, std::optional<Forced> f, std::vector<bool> &placed) {
    placed[x] = true;
    position_[x] = base_.size();
    base_.push_back(x);
    forced_.push_back(f);
  }

  bool commutes(const Permutation &x) const {
    for (const auto &s : h_)
      for (Point p = 0; p < n_; ++p)
        if (x(s(p)) != s(x(p)))
          return false;
    return true;
  }

  bool fixes_prefix(const Permutation &x, std::size_t i) const {
    for (std::size_t l = 0; l < i; ++l)
      if (x(base_[l]) != base_[l])
        return false;
    return true;
  }

  // Checks the commutation constraints that involve base point j under the
  // partial element h, whose images are final on base points 0..j.
  bool consistent(std::size_t j, const Permutation &h) const {
    Point x = base_[j];
    Point y = h(x);
    if (orbit_size_[y] != orbit_size_[x])
      return false;
    for (std::size_t s = 0; s < h_.size(); ++s) {
      Point fwd = h_[s](x);
      if (position_[fwd] <= j && h(fwd) != h_[s](y))
        return false;
      Point back = h_inv_[s](x);
      if (position_[back] <= j && h(back) != h_inv_[s](y))
        return false;
    }
    return true;
  }

  std::optional<Permutation> search(std::size_t i, Point gamma) {
    const ChainLevel &level = chain_.level(i);
    Permutation start = level.rep(gamma);
    if (!consistent(i, start))
      return std::nullopt;
    return descend(i + 1, start);
  }

  std::optional<Permutation> descend(std::size_t j, const Permutation &h) {
    if (j == n_)
      return h;
    const ChainLevel &level = chain_.level(j);
    if (forced_[j]) {
      const Forced &f = *forced_[j];
      Point target = h_[f.gen](h(base_[f.parent]));
      Point delta = h.inverse()(target);
      if (!level.in_orbit(delta))
        return std::nullopt;
      Permutation next = compose(level.rep(delta), h);
      if (!consistent(j, next))
        return std::nullopt;
      return descend(j + 1, next);
    }
    for (Point delta : level.orbit) {
      Permutation next = compose(level.rep(delta), h);
      if (!consistent(j, next))
        continue;
      if (auto hit = descend(j + 1, next))
        return hit;
    }
    return std::nullopt;
  }

  const PermGroup &g_;
  std::vector<Permutation> h_;
  std::vector<Permutation> h_inv_;
  std::size_t n_ = 0;
  std::vector<Point> base_;
  std::vector<std::optional<Forced>> forced_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> orbit_size_;
  StabChain chain_;
};

} // namespace

PermGroup centralizer(const PermGroup &g, const std::vector<Permutation> &elements) {
  for (const auto &x : elements)
    if (x.degree() != g.degree())
      throw InvalidArgument("centralizer: degree mismatch");
  return CentralizerSearch(g, elements).run();
}

} // namespace starp
