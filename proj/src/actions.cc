/** @file actions.cc
 *  Block systems and induced actions.
 */
#include "starp/actions.hpp"

#include "starp/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace starp {

namespace {

void require_transitive(const PermGroup &g) {
  if (!is_transitive(g))
    throw InvalidArgument("block systems require a transitive group");
}

// Checks image(a) * image(b) = image(a * b) for all generator pairs.
template <typename Act>
void verify_homomorphism(const PermGroup &g, const std::vector<Permutation> &images, Act act) {
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (act(compose(gens[i], gens[j])) != compose(images[i], images[j]))
        throw Error("induced action is not a homomorphism");
}

} // namespace

BlockSystem BlockSystem::from_ids(std::size_t degree, const std::vector<std::size_t> &block_of) {
  if (block_of.size() != degree)
    throw InvalidArgument("block id list has the wrong length");
  std::map<std::size_t, std::vector<Point>> groups;
  for (Point x = 0; x < degree; ++x)
    groups[block_of[x]].push_back(x);
  BlockSystem b;
  b.degree = degree;
  for (auto &[id, pts] : groups)
    b.blocks.push_back(std::move(pts));
  std::sort(b.blocks.begin(), b.blocks.end());
  b.block_of.assign(degree, 0);
  for (std::size_t i = 0; i < b.blocks.size(); ++i)
    for (Point x : b.blocks[i])
      b.block_of[x] = i;
  b.block_count = b.blocks.size();
  b.block_size = b.blocks.front().size();
  for (const auto &blk : b.blocks)
    if (blk.size() != b.block_size)
      throw InvalidArgument("blocks of a block system must have equal size");
  return b;
}

bool is_invariant(const PermGroup &g, const BlockSystem &b) {
  for (const auto &s : g.generators())
    for (const auto &blk : b.blocks) {
      std::size_t target = b.block_of[s(blk.front())];
      for (Point x : blk)
        if (b.block_of[s(x)] != target)
          return false;
    }
  return true;
}

BlockSystem minimal_block_system(const PermGroup &g, Point alpha, Point beta) {
  if (alpha == beta)
    throw InvalidArgument("minimal_block_system needs two distinct points");
  return minimal_block_system(g, std::vector<Point>{alpha, beta});
}

BlockSystem minimal_block_system(const PermGroup &g, const std::vector<Point> &seed) {
  require_transitive(g);
  for (Point x : seed)
    if (x >= g.degree())
      throw InvalidArgument("seed point out of range");
  return BlockSystem::from_ids(g.degree(), minimal_block_partition(g.degree(), g.generators(), seed));
}

std::vector<BlockSystem> all_minimal_block_systems(const PermGroup &g) {
  require_transitive(g);
  std::vector<BlockSystem> out;
  std::set<std::vector<std::size_t>> seen;
  for (Point beta = 1; beta < g.degree(); ++beta) {
    BlockSystem b = minimal_block_system(g, 0, beta);
    if (b.block_count == 1 || !seen.insert(b.block_of).second)
      continue;
    out.push_back(std::move(b));
  }
  return out;
}

InducedAction action_on_blocks(const PermGroup &g, const BlockSystem &b) {
  if (b.degree != g.degree() || !is_invariant(g, b))
    throw InvalidArgument("partition is not invariant under the group");
  ActionHom f = block_hom(g, b.block_of, b.block_count);
  InducedAction a{g, f.image(), LabelKind::block, b.blocks, f.kernel_order()};
  return a;
}

InducedAction block_restriction(const PermGroup &g, const BlockSystem &b, std::size_t index) {
  if (index >= b.block_count)
    throw InvalidArgument("block index out of range");
  if (b.degree != g.degree() || !is_invariant(g, b))
    throw InvalidArgument("partition is not invariant under the group");
  ActionHom f = block_hom(g, b.block_of, b.block_count);
  PermGroup setwise = f.preimage(point_stabilizer(f.image(), static_cast<Point>(index)));
  ActionHom r = restriction_hom(setwise, b.blocks[index]);
  std::vector<std::vector<Point>> labels;
  for (Point x : b.blocks[index])
    labels.push_back({x});
  return InducedAction{g, r.image(), LabelKind::point, labels, setwise.order() / r.image().order()};
}

InducedAction tuple_action(const PermGroup &g, const std::vector<Point> &seed, const Limits &limits) {
  if (seed.empty())
    throw InvalidArgument("tuple_action needs a non-empty seed");
  std::set<Point> distinct(seed.begin(), seed.end());
  if (distinct.size() != seed.size() || *distinct.rbegin() >= g.degree())
    throw InvalidArgument("seed entries must be distinct points of the domain");
  auto apply = [](const Permutation &s, const std::vector<Point> &t) {
    std::vector<Point> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      out[i] = s(t[i]);
    return out;
  };
  std::set<std::vector<Point>> found{seed};
  std::vector<std::vector<Point>> queue{seed};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto &s : g.generators()) {
      auto t = apply(s, queue[k]);
      if (found.insert(t).second) {
        if (found.size() > limits.max_degree)
          throw ResourceLimit("tuple orbit exceeds the induced-action cap");
        queue.push_back(std::move(t));
      }
    }
  std::vector<std::vector<Point>> labels(found.begin(), found.end());
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    index[labels[i]] = static_cast<Point>(i);
  auto act = [&](const Permutation &s) {
    std::vector<Point> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      img[i] = index.at(apply(s, labels[i]));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> images;
  for (const auto &s : g.generators())
    images.push_back(act(s));
  verify_homomorphism(g, images, act);
  ActionHom f(g, labels.size(), std::move(images));
  return InducedAction{g, f.image(), LabelKind::tuple, labels, f.kernel_order()};
}

BlockSystem tuple_to_set_blocks(const InducedAction &a) {
  if (a.kind != LabelKind::tuple)
    throw InvalidArgument("tuple_to_set_blocks needs a tuple-labelled action");
  std::map<std::vector<Point>, std::size_t> ids;
  std::vector<std::size_t> block_of;
  for (const auto &t : a.labels) {
    std::vector<Point> key(t);
    std::sort(key.begin(), key.end());
    auto [it, inserted] = ids.emplace(key, ids.size());
    block_of.push_back(it->second);
  }
  BlockSystem b = BlockSystem::from_ids(a.target.degree(), block_of);
  if (!is_invariant(a.target, b))
    throw Error("underlying-set partition is not invariant");
  return b;
}

nlohmann::json label_annotation(const InducedAction &a) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto &l : a.labels) {
    nlohmann::json item = nlohmann::json::array();
    for (Point x : l)
      item.push_back(x + 1);
    items.push_back(std::move(item));
  }
  const char *kind = a.kind == LabelKind::tuple ? "tuple" : a.kind == LabelKind::block ? "block" : "point";
  return {{"kind", kind}, {"items", std::move(items)}, {"kernel_order", to_string(a.kernel_order)}};
}

} // namespace starp

namespace starp {

PermGroup coset_action(const PermGroup &g, const PermGroup &s, const Limits &limits) {
  if (!is_subgroup(s, g))
    throw InvalidArgument("coset_action needs a subgroup");
  std::vector<Permutation> elems = elements(g, limits.max_enum);
  std::sort(elems.begin(), elems.end());
  std::vector<Permutation> sub = elements(s, limits.max_enum);
  std::map<Permutation, std::size_t> coset_of;
  std::vector<Permutation> reps;
  for (const auto &x : elems) {
    if (coset_of.count(x))
      continue;
    for (const auto &h : sub)
      coset_of.emplace(compose(h, x), reps.size());
    reps.push_back(x);
  }
  std::vector<Permutation> gens;
  for (const auto &y : g.generators()) {
    std::vector<Point> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      img[i] = static_cast<Point>(coset_of.at(compose(reps[i], y)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(reps.size(), std::move(gens));
}

} // namespace starp
