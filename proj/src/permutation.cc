/** @file permutation.cc
 *  Permutations and cycle notation.
 */
#include "starp/permutation.hpp"

#include <cctype>
#include <numeric>

namespace starp {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image table is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x) + " out of range");
      if (used[x])
        throw InvalidArgument("point " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
      result.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

Permutation Permutation::parse_cycles(std::size_t degree, const std::string &text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  if (pos == text.size())
    throw ParseError("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in permutation: " + text);
    ++pos;
    std::vector<Point> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos)
        throw ParseError("expected a point in permutation: " + text);
      unsigned long value = std::stoul(text.substr(start, pos - start));
      if (value == 0 || value > degree)
        throw ParseError("point " + std::to_string(value) + " out of range in: " + text);
      cycle.push_back(static_cast<Point>(value - 1));
      skip_space();
      if (pos < text.size() && text[pos] == ',')
        ++pos;
    }
    if (pos == text.size())
      throw ParseError("unterminated cycle in: " + text);
    ++pos;
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const InvalidArgument &e) {
    throw ParseError(std::string(e.what()) + " in: " + text);
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(images_.size());
  while (e > 0) {
    if (e & 1ULL)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Count Permutation::order() const {
  Count result = 1;
  for (const auto &cycle : cycles()) {
    Count len = cycle.size();
    Count a = result, b = len;
    while (b != 0) {
      Count t = a % b;
      a = b;
      b = t;
    }
    result = checked_mul(result / a, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto &cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("degree mismatch in compose");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = b(a(static_cast<Point>(i)));
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(const Permutation &h, const Permutation &x) {
  // x^-1 h x maps x(i) to x(h(i)).
  std::vector<Point> images(h.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[x(static_cast<Point>(i))] = x(h(static_cast<Point>(i)));
  return Permutation::unchecked(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace starp
