/** @file homomorphism.cc
 *  Action homomorphisms and their kernels.
 */
#include "starp/homomorphism.hpp"

namespace starp {

namespace {

Permutation head(const Permutation &g, std::size_t n) {
  return Permutation::unchecked(std::vector<Point>(g.images().begin(),
                                                   g.images().begin() + static_cast<std::ptrdiff_t>(n)));
}

} // namespace

ActionHom::ActionHom(const PermGroup &source, std::size_t target_degree,
                     std::vector<Permutation> images)
    : source_(source), n_(source.degree()), m_(target_degree) {
  if (images.size() != source.generators().size())
    throw InvalidArgument("one image per generator is required");
  std::vector<Permutation> graph_gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != m_)
      throw InvalidArgument("image degree mismatch");
    std::vector<Point> img(source.generators()[i].images());
    for (Point x : images[i].images())
      img.push_back(static_cast<Point>(n_ + x));
    graph_gens.push_back(Permutation::unchecked(std::move(img)));
  }
  StabChain::Options options;
  for (std::size_t x = 0; x < m_; ++x)
    options.base_prefix.push_back(static_cast<Point>(n_ + x));
  options.known_order = source.order();
  graph_ = StabChain::build(n_ + m_, graph_gens, options);
  Count image_order = 1;
  for (std::size_t l = 0; l < m_; ++l)
    image_order = checked_mul(image_order, graph_.level(l).orbit.size());
  StabChain::Options image_options;
  image_options.known_order = image_order;
  StabChain image_chain = StabChain::build(m_, images, image_options);
  image_ = PermGroup(m_, std::move(images), std::move(image_chain));
}

PermGroup ActionHom::kernel() const {
  std::vector<Permutation> gens;
  if (graph_.length() > m_)
    for (const auto &g : graph_.level(m_).generators)
      gens.push_back(head(g, n_));
  StabChain::Options options;
  options.known_order = kernel_order();
  StabChain chain = StabChain::build(n_, gens, options);
  return PermGroup(n_, std::move(gens), std::move(chain));
}

Permutation ActionHom::lift(const Permutation &t) const {
  if (t.degree() != m_)
    throw InvalidArgument("lift: degree mismatch");
  std::vector<Point> img(n_ + m_);
  for (std::size_t x = 0; x < n_; ++x)
    img[x] = static_cast<Point>(x);
  for (std::size_t x = 0; x < m_; ++x)
    img[n_ + x] = static_cast<Point>(n_ + t(static_cast<Point>(x)));
  Permutation h = Permutation::unchecked(std::move(img));
  for (std::size_t l = 0; l < m_; ++l) {
    const ChainLevel &level = graph_.level(l);
    Point y = h(level.base);
    if (!level.in_orbit(y))
      throw InvalidArgument("lift: element is not in the image");
    h = compose(h, level.rep_inverse(y));
  }
  return head(h, n_).inverse();
}

PermGroup ActionHom::preimage(const PermGroup &t) const {
  PermGroup k = kernel();
  std::vector<Permutation> gens = k.generators();
  for (const auto &x : t.generators())
    gens.push_back(lift(x));
  StabChain::Options options;
  options.known_order = checked_mul(t.order(), k.order());
  StabChain chain = StabChain::build(n_, gens, options);
  return PermGroup(n_, std::move(gens), std::move(chain));
}

ActionHom restriction_hom(const PermGroup &g, const std::vector<Point> &points) {
  std::vector<std::int64_t> label(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i)
    label[points[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> images;
  for (const auto &s : g.generators()) {
    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::int64_t y = label[s(points[i])];
      if (y < 0)
        throw InvalidArgument("restriction to a non-invariant point set");
      img[i] = static_cast<Point>(y);
    }
    images.push_back(Permutation(std::move(img)));
  }
  return ActionHom(g, points.size(), std::move(images));
}

ActionHom block_hom(const PermGroup &g, const std::vector<std::size_t> &block_of,
                    std::size_t block_count) {
  std::vector<Point> rep(block_count, 0);
  std::vector<bool> has(block_count, false);
  for (Point x = 0; x < g.degree(); ++x)
    if (!has[block_of[x]]) {
      has[block_of[x]] = true;
      rep[block_of[x]] = x;
    }
  std::vector<Permutation> images;
  for (const auto &s : g.generators()) {
    std::vector<Point> img(block_count);
    for (Point x = 0; x < g.degree(); ++x) {
      std::size_t b = block_of[x];
      Point target = static_cast<Point>(block_of[s(x)]);
      if (x != rep[b] && img[b] != target)
        throw InvalidArgument("partition is not invariant under the group");
      img[b] = target;
    }
    images.push_back(Permutation(std::move(img)));
  }
  return ActionHom(g, block_count, std::move(images));
}

} // namespace starp
