/** @file constructions.cc
 *  Named group constructions and the fixture catalog.
 */
#include "starp/constructions.hpp"

#include "starp/homomorphism.hpp"
#include "starp/io.hpp"
#include "starp/numth.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <unordered_map>

namespace starp {

namespace detail {
extern const char *const kFixturesJson;
}

namespace {

using Elt = Field::Elt;

Field field_of_order(std::uint64_t q, const Limits &limits) {
  std::uint64_t r = 0, k = 0;
  if (!prime_power(q, &r, &k))
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return Field::make(r, k, limits);
}

template <typename Map>
Permutation line_map(std::uint64_t q, Map f) {
  std::vector<Point> img(q + 1);
  for (std::uint64_t x = 0; x <= q; ++x)
    img[x] = static_cast<Point>(f(x));
  return Permutation(std::move(img));
}

Count gcd(Count a, Count b) {
  while (b != 0) {
    Count t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Plane {
  const Field &f;
  std::uint64_t q;

  std::size_t count() const { return q * q + q + 1; }

  std::array<Elt, 3> coords(std::size_t index) const {
    if (index < q * q)
      return {1, static_cast<Elt>(index / q), static_cast<Elt>(index % q)};
    if (index < q * q + q)
      return {0, 1, static_cast<Elt>(index - q * q)};
    return {0, 0, 1};
  }

  std::size_t index(std::array<Elt, 3> v) const {
    std::size_t lead = v[0] != 0 ? 0 : v[1] != 0 ? 1 : 2;
    Elt s = f.inv(v[lead]);
    for (auto &c : v)
      c = f.mul(c, s);
    if (lead == 0)
      return v[1] * q + v[2];
    if (lead == 1)
      return q * q + v[2];
    return q * q + q;
  }
};

// Symmetric square of the 2x2 matrix [[a,b],[c,d]] in characteristic 2.
std::array<std::array<Elt, 3>, 3> sym_square(const Field &f, Elt a, Elt b, Elt c, Elt d) {
  return {{{f.mul(a, a), f.mul(a, b), f.mul(b, b)},
           {0, f.add(f.mul(a, d), f.mul(b, c)), 0},
           {f.mul(c, c), f.mul(c, d), f.mul(d, d)}}};
}


} // namespace

Psl2Variant parse_psl2_variant(const std::string &name) {
  if (name == "PSL")
    return Psl2Variant::PSL;
  if (name == "PGL")
    return Psl2Variant::PGL;
  if (name == "PGammaL" || name == "PGaL")
    return Psl2Variant::PGammaL;
  if (name == "SL")
    return Psl2Variant::SL;
  throw InvalidArgument("unknown variant " + name);
}

PermGroup psl2_action(std::uint64_t q, Psl2Variant variant, const Limits &limits) {
  if (q < 2)
    throw InvalidArgument("psl2_action needs q >= 2");
  Field f = field_of_order(q, limits);
  bool even = f.characteristic() == 2;
  if (variant == Psl2Variant::SL) {
    if (!even)
      throw InvalidArgument("SL(2,q) for odd q is not a permutation group on the projective line");
    variant = Psl2Variant::PSL;
  }
  const std::uint64_t inf = q;
  auto translate = line_map(q, [&](std::uint64_t x) { return x == inf ? inf : f.add(static_cast<Elt>(x), 1); });
  auto scale = [&](Elt lambda) {
    return line_map(q, [&, lambda](std::uint64_t x) { return x == inf ? inf : f.mul(lambda, static_cast<Elt>(x)); });
  };
  auto invert = [&](Elt sign) {
    return line_map(q, [&, sign](std::uint64_t x) -> std::uint64_t {
      if (x == inf)
        return 0;
      if (x == 0)
        return inf;
      return f.mul(sign, f.inv(static_cast<Elt>(x)));
    });
  };
  Elt lambda = f.primitive();
  std::vector<Permutation> gens;
  Count base_order = static_cast<Count>(q) * (static_cast<Count>(q) * q - 1);
  Count order = base_order;
  std::string name;
  if (variant == Psl2Variant::PSL && !even) {
    gens = {translate, scale(f.mul(lambda, lambda)), invert(f.neg(1))};
    order = base_order / gcd(2, q - 1);
    name = "PSL(2," + std::to_string(q) + ")";
  } else {
    gens = {translate, scale(lambda), invert(1)};
    name = (variant == Psl2Variant::PSL ? "PSL(2," : "PGL(2,") + std::to_string(q) + ")";
  }
  if (variant == Psl2Variant::PGammaL) {
    if (f.degree() > 1)
      gens.push_back(line_map(q, [&](std::uint64_t x) {
        return x == inf ? inf : f.pow(static_cast<Elt>(x), f.characteristic());
      }));
    order *= f.degree();
    name = "PGammaL(2," + std::to_string(q) + ")";
  }
  PermGroup g(q + 1, std::move(gens), name);
  if (g.order() != order)
    throw Error(name + ": order " + to_string(g.order()) + " differs from " + to_string(order));
  return g;
}

ExternalLines external_lines(std::uint64_t q, Psl2Variant variant, const Limits &limits) {
  if (q % 2 != 0 || q < 4)
    throw InvalidArgument("external lines need q even and q >= 4");
  if (variant == Psl2Variant::SL || variant == Psl2Variant::PGL)
    variant = Psl2Variant::PSL;
  Field f = field_of_order(q, limits);
  Plane plane{f, q};
  std::size_t npts = plane.count();

  std::vector<bool> on_conic(npts, false);
  for (Elt t = 0; t < q; ++t)
    on_conic[plane.index({1, t, f.mul(t, t)})] = true;
  on_conic[plane.index({0, 0, 1})] = true;

  std::map<std::vector<Point>, std::size_t> external_index;
  ExternalLines out;
  for (std::size_t u = 0; u < npts; ++u) {
    auto c = plane.coords(u);
    std::vector<Point> pts;
    for (std::size_t x = 0; x < npts; ++x) {
      auto v = plane.coords(x);
      Elt s = f.add(f.add(f.mul(c[0], v[0]), f.mul(c[1], v[1])), f.mul(c[2], v[2]));
      if (s == 0)
        pts.push_back(static_cast<Point>(x));
    }
    std::size_t meet = static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [&](Point x) { return on_conic[x]; }));
    if (meet == 0)
      out.lines.push_back(std::move(pts));
    else if (meet == 1)
      ++out.tangents;
    else if (meet == 2)
      ++out.secants;
    else
      throw Error("line meets the conic in more than two points");
  }
  out.externals = out.lines.size();
  if (out.tangents != q + 1 || out.secants != q * (q + 1) / 2 || out.externals != q * (q - 1) / 2)
    throw Error("line classification counts are wrong");
  std::sort(out.lines.begin(), out.lines.end());
  for (std::size_t i = 0; i < out.lines.size(); ++i)
    external_index[out.lines[i]] = i;

  auto act = [&](auto point_map) {
    std::vector<Point> img(out.lines.size());
    for (std::size_t i = 0; i < out.lines.size(); ++i) {
      std::vector<Point> image;
      for (Point x : out.lines[i])
        image.push_back(static_cast<Point>(point_map(x)));
      std::sort(image.begin(), image.end());
      auto it = external_index.find(image);
      if (it == external_index.end())
        throw Error("generator does not preserve the external lines");
      img[i] = static_cast<Point>(it->second);
    }
    return Permutation(std::move(img));
  };
  auto matrix_map = [&](std::array<std::array<Elt, 3>, 3> s) {
    return [&, s](Point x) {
      auto v = plane.coords(x);
      std::array<Elt, 3> w{0, 0, 0};
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
          w[j] = f.add(w[j], f.mul(v[i], s[i][j]));
      return plane.index(w);
    };
  };
  Elt lambda = f.primitive();
  std::vector<Permutation> gens{act(matrix_map(sym_square(f, 1, 1, 0, 1))),
                                act(matrix_map(sym_square(f, 1, 0, 0, lambda))),
                                act(matrix_map(sym_square(f, 0, 1, 1, 0)))};
  Count order = static_cast<Count>(q) * (static_cast<Count>(q) * q - 1);
  std::string name = "PSL(2," + std::to_string(q) + ") on external lines";
  if (variant == Psl2Variant::PGammaL) {
    gens.push_back(act([&](Point x) {
      auto v = plane.coords(x);
      for (auto &c : v)
        c = f.mul(c, c);
      return plane.index(v);
    }));
    order *= f.degree();
    name = "PGammaL(2," + std::to_string(q) + ") on external lines";
  }
  out.group = PermGroup(out.lines.size(), std::move(gens), name);
  if (out.group.order() != order)
    throw Error(name + ": unexpected order " + to_string(out.group.order()));
  return out;
}

PdivisibleExample pgl2_pdivisible_example(std::uint64_t q, const Limits &limits) {
  std::uint64_t p = 0;
  if (!prime_power(q, &p, nullptr))
    throw InvalidArgument(std::to_string(q) + " is not a prime power");
  PermGroup natural = psl2_action(q, Psl2Variant::PGL, limits);
  std::vector<Point> seed;
  for (Point x = 0; x < p; ++x)
    seed.push_back(x);
  InducedAction tuples = tuple_action(natural, seed, limits);
  BlockSystem blocks = tuple_to_set_blocks(tuples);
  if (blocks.block_size % p != 0)
    throw Error("block size is not divisible by p");
  InducedAction quotient = action_on_blocks(tuples.target, blocks);
  return {p, natural, tuples, blocks, quotient};
}

GammaL1 gammal1_sylow(std::uint64_t r, std::uint64_t d, std::uint64_t f, std::uint64_t p,
                      const Limits &limits) {
  if (!is_prime(r) || !is_prime(p))
    throw InvalidArgument("r and p must be prime");
  if (d < 2 || f < 1)
    throw InvalidArgument("gammal1_sylow needs d >= 2 and f >= 1");
  if (f % p != 0)
    throw InvalidArgument("p must divide f");
  if (d % p == 0)
    throw InvalidArgument("gcd(d, p) must be 1");
  Count q = checked_pow(r, d * f);
  if (q > limits.field_cap)
    throw ResourceLimit("field order exceeds the cap");
  std::uint64_t n = static_cast<std::uint64_t>(q) - 1;
  if (n % p != 0)
    throw InvalidArgument("p must divide r^(df) - 1");
  GammaL1 out;
  out.r = r;
  out.d = d;
  out.f = f;
  out.p = p;
  out.field = Field::make(r, d * f, limits);
  const Field &fld = out.field;
  std::uint64_t np = static_cast<std::uint64_t>(p_part_value(n, p));
  std::uint64_t fp = static_cast<std::uint64_t>(p_part_value(f, p));
  Elt xi = fld.pow(fld.primitive(), n / np);
  std::uint64_t frob_exp = static_cast<std::uint64_t>(checked_pow(r, d * f / fp));
  auto on_units = [&](auto map) {
    std::vector<Point> img(n);
    for (std::uint64_t e = 1; e <= n; ++e)
      img[e - 1] = static_cast<Point>(map(static_cast<Elt>(e)) - 1);
    return Permutation(std::move(img));
  };
  out.xi_hat = on_units([&](Elt x) { return fld.mul(xi, x); });
  out.phi = on_units([&](Elt x) { return fld.pow(x, frob_exp); });
  out.sigma = out.phi.pow(static_cast<long long>(fp / p));
  out.x = PermGroup(n, {out.xi_hat, out.phi}, "X");
  out.y = PermGroup(n, {out.xi_hat}, "Y");
  if (out.x.order() != static_cast<Count>(np) * fp || out.y.order() != np)
    throw Error("semilinear Sylow subgroup has an unexpected order");
  return out;
}

std::size_t count_fixed_subspaces(const Permutation &sigma, const Field &field, std::uint64_t r,
                                  std::uint64_t f) {
  std::uint64_t n = field.order() - 1;
  std::uint64_t sub = static_cast<std::uint64_t>(checked_pow(r, f)) - 1;
  if (sub == 0 || n % sub != 0 || sigma.degree() != n)
    throw InvalidArgument("GF(r^f) is not a subfield of the given field");
  // Multiplicative cosets of GF(r^f)* are the residues of the logarithm mod n/sub.
  std::uint64_t count = n / sub;
  std::size_t fixed = 0;
  for (std::uint64_t l = 0; l < count; ++l) {
    Elt a = field.exp(l);
    Elt image = static_cast<Elt>(sigma(a - 1) + 1);
    if (field.log(image) % count == l)
      ++fixed;
  }
  return fixed;
}

PermGroup diagonal_action(const PermGroup &t, const Limits &limits) {
  std::vector<Permutation> elems = elements(t, limits.max_enum);
  std::sort(elems.begin(), elems.end());
  std::unordered_map<Permutation, Point, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<Point>(i));
  auto act = [&](const Permutation &a, const Permutation &b) {
    Permutation ainv = a.inverse();
    std::vector<Point> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      img[i] = index.at(compose(compose(ainv, elems[i]), b));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  Permutation id(t.degree());
  for (const auto &a : t.generators())
    gens.push_back(act(a, id));
  for (const auto &b : t.generators())
    gens.push_back(act(id, b));
  return PermGroup(elems.size(), std::move(gens),
                   t.name().empty() ? "diagonal action" : t.name() + " x " + t.name() + " diagonal");
}

PermGroup frobenius_group(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p) || k == 0 || (p - 1) % k != 0)
    throw InvalidArgument("frobenius_group needs a prime p and k dividing p - 1");
  Field f = Field::make(p, 1);
  Elt w = f.pow(f.primitive(), (p - 1) / k);
  std::vector<Point> shift(p), mult(p);
  for (Elt x = 0; x < p; ++x) {
    shift[x] = f.add(x, 1);
    mult[x] = f.mul(w, x);
  }
  std::vector<Permutation> gens{Permutation(shift)};
  if (k > 1)
    gens.emplace_back(mult);
  return PermGroup(p, std::move(gens), std::to_string(p) + ":" + std::to_string(k));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  const nlohmann::json catalog = nlohmann::json::parse(detail::kFixturesJson);
  for (const auto &doc : catalog.at("fixtures"))
    names.push_back(doc.at("name").get<std::string>());
  return names;
}

PermGroup fixture(const std::string &name) {
  const nlohmann::json catalog = nlohmann::json::parse(detail::kFixturesJson);
  for (const auto &doc : catalog.at("fixtures")) {
    if (doc.at("name").get<std::string>() != name)
      continue;
    GroupDocument parsed = parse_group_json(doc);
    PermGroup g = parsed.group;
    const auto &expect = doc.at("expect");
    if (g.order() != parse_count(expect.at("order").get<std::string>()))
      throw Error("fixture " + name + ": order " + to_string(g.order()) + " differs from catalog");
    if (is_transitive(g) != expect.at("transitive").get<bool>())
      throw Error("fixture " + name + ": transitivity differs from catalog");
    if (is_2_transitive(g) != expect.at("2transitive").get<bool>())
      throw Error("fixture " + name + ": 2-transitivity differs from catalog");
    return g;
  }
  throw InvalidArgument("unknown fixture " + name);
}

namespace {

class StructureParser {
public:
  StructureParser(const std::string &text, const Limits &limits) : text_(text), limits_(limits) {}

  Structure parse() {
    Structure s = expression();
    skip();
    if (pos_ != text_.size())
      fail("unexpected trailing text");
    return s;
  }

private:
  Structure expression() {
    Structure left = term();
    while (true) {
      skip();
      if (text_.compare(pos_, 2, "Wr") != 0)
        return left;
      pos_ += 2;
      Structure right = term();
      WreathProduct w = wreath_imprimitive(left.group, right.group);
      w.group.set_name(left.group.name() + " Wr " + right.group.name());
      left = Structure{w.group, w};
    }
  }

  Structure term() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Structure inner = expression();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        fail("missing ')'");
      ++pos_;
      inner.group.set_name("(" + inner.group.name() + ")");
      return inner;
    }
    return Structure{atom(), std::nullopt};
  }

  PermGroup atom() {
    skip();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t a = number();
      if (pos_ < text_.size() && text_[pos_] == ':') {
        ++pos_;
        return frobenius_group(a, number());
      }
      PermGroup c = PermGroup::cyclic(a);
      c.set_name(std::to_string(a));
      return c;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string word = text_.substr(start, pos_ - start);
    if (word == "S" || word == "A" || word == "C") {
      std::uint64_t n = number();
      PermGroup g = word == "S" ? PermGroup::symmetric(n) : word == "A" ? PermGroup::alternating(n) : PermGroup::cyclic(n);
      g.set_name(word + std::to_string(n));
      return g;
    }
    if (word == "PSL" || word == "PGL" || word == "PGammaL") {
      expect('(');
      if (number() != 2)
        fail("only dimension 2 is supported");
      expect(',');
      std::uint64_t q = number();
      expect(')');
      PermGroup g = psl2_action(q, parse_psl2_variant(word), limits_);
      g.set_name(word + "(2," + std::to_string(q) + ")");
      return g;
    }
    fail("unknown group name '" + word + "'");
  }

  std::uint64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    return std::stoull(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("structure \"" + text_ + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  const std::string &text_;
  const Limits &limits_;
  std::size_t pos_ = 0;
};

} // namespace

Structure build_structure(const std::string &expression, const Limits &limits) {
  return StructureParser(expression, limits).parse();
}

} // namespace starp
