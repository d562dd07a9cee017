/** @file suites.cc
 *  Self-checking suites for the CLI.
 */
#include "starp/suites.hpp"

#include "starp/centralizer.hpp"
#include "starp/constructions.hpp"
#include "starp/numth.hpp"
#include "starp/tables.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace starp {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.pass; });
}

std::string SuiteResult::format() const {
  std::ostringstream out;
  for (const auto &c : checks)
    out << (c.pass ? "PASS " : "FAIL ") << suite << ": " << c.name
        << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
  out << suite << ": " << std::count_if(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.pass; })
      << "/" << checks.size() << " checks passed\n";
  return out.str();
}

namespace {

using Multiset = std::vector<std::size_t>;

class Recorder {
public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  void check(std::string name, bool pass, std::string detail = {}) {
    result_.checks.push_back({std::move(name), pass, std::move(detail)});
  }

  /// Runs body, turning an exception into a failed check.
  void guarded(const std::string &name, const std::function<void()> &body) {
    try {
      body();
    } catch (const std::exception &e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }

  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

PermGroup small(std::size_t degree, std::initializer_list<const char *> gens, const std::string &name) {
  std::vector<Permutation> perms;
  for (const char *g : gens)
    perms.push_back(Permutation::parse_cycles(degree, g));
  return PermGroup(degree, std::move(perms), name);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

bool star(const PermGroup &g, std::uint64_t p, const Limits &limits) {
  return has_star_p(g, p, {}, limits).verdict;
}

Multiset sylow_orbits(const PermGroup &g, std::uint64_t p, const Limits &limits) {
  return orbit_lengths(sylow_subgroup(g, p, limits).subgroup);
}

SuiteResult suite_numth(const SuiteOptions &) {
  Recorder r("numth");
  std::size_t cases = 0, bad = 0;
  std::string first_bad;
  for (std::uint64_t q = 2; q <= 16; ++q) {
    if (!prime_power(q))
      continue;
    for (std::uint64_t m = 1; m <= 12; ++m) {
      std::uint64_t n = static_cast<std::uint64_t>(checked_pow(q, m)) - 1;
      for (std::uint64_t p : prime_divisors(n)) {
        ++cases;
        if (ppd_p_part(q, m, p) != p_part_value(n, p)) {
          ++bad;
          if (first_bad.empty())
            first_bad = std::to_string(q) + "^" + std::to_string(m) + "-1 at " + std::to_string(p);
        }
      }
    }
  }
  r.check("closed-form p-part of q^m-1 matches direct p-part (q<=16, m<=12)", bad == 0 && cases > 0,
          std::to_string(cases) + " cases" + (first_bad.empty() ? "" : ", first mismatch " + first_bad));

  std::size_t boxed = 0;
  std::vector<std::string> equalities;
  bool violated = false;
  for (std::uint64_t rr = 2; rr <= 13; ++rr) {
    if (!is_prime(rr))
      continue;
    for (std::uint64_t p = 3; p <= 11; p += 2) {
      if (!is_prime(p))
        continue;
      for (std::uint64_t f = 3; f <= 12; ++f) {
        if (f % p != 0 || (checked_pow(rr, f) + 1) % p != 0)
          continue;
        ++boxed;
        Morenum m = morenum_holds(rr, p, f);
        if (m == Morenum::violated)
          violated = true;
        if (m == Morenum::equality)
          equalities.push_back("(" + std::to_string(rr) + "," + std::to_string(p) + "," + std::to_string(f) + ")");
      }
    }
  }
  std::string eq;
  for (const auto &e : equalities)
    eq += e;
  r.check("(r^f+1)/p >= r^(2f/p)-1 over r<=13, p<=11, f<=12", !violated && boxed > 0,
          std::to_string(boxed) + " admissible triples");
  r.check("equality exactly at (2,3,3)", equalities == std::vector<std::string>{"(2,3,3)"}, "equality at " + eq);
  r.check("examples: (2,3,9) and (5,3,3) strict",
          morenum_holds(2, 3, 9) == Morenum::strict && morenum_holds(5, 3, 3) == Morenum::strict);
  r.check("p-part examples: 12->4 (p=2), 12->3, 63->9 (p=3)",
          p_part_value(12, 2) == 4 && p_part_value(12, 3) == 3 && p_part_value(63, 3) == 9);
  r.check("multiplicative orders: o(2 mod 3)=2, o(2 mod 7)=3, o(3 mod 2)=1",
          mult_order(2, 3) == 2 && mult_order(2, 7) == 3 && mult_order(3, 2) == 1);
  return r.take();
}

SuiteResult suite_gammal1(const SuiteOptions &o) {
  Recorder r("gammal1");
  for (auto [rr, d, f, p] : std::vector<std::array<std::uint64_t, 4>>{{2, 2, 3, 3}, {2, 4, 3, 3}}) {
    std::string tag = "(r,d,f,p)=(" + std::to_string(rr) + "," + std::to_string(d) + "," + std::to_string(f) +
                      "," + std::to_string(p) + ")";
    r.guarded(tag, [&] {
      GammaL1 g = gammal1_sylow(rr, d, f, p, o.limits);
      std::uint64_t n = static_cast<std::uint64_t>(checked_pow(rr, d * f)) - 1;
      Count np = p_part_value(n, p);
      std::uint64_t bound = static_cast<std::uint64_t>(checked_pow(rr, d * f / p)) - 1;
      r.check(tag + " p divides r^(df/p)-1", bound % p == 0, std::to_string(bound));

      std::vector<Permutation> xs = elements(g.x, o.limits.max_enum);
      std::set<std::vector<Permutation>> subgroups;
      for (const auto &x : xs) {
        if (x.is_identity() || x.order() != p || g.y.contains(x))
          continue;
        std::vector<Permutation> s;
        for (std::uint64_t i = 0; i < p; ++i)
          s.push_back(x.pow(static_cast<long long>(i)));
        std::sort(s.begin(), s.end());
        subgroups.insert(s);
      }
      std::vector<Permutation> sigma_sub;
      for (std::uint64_t i = 0; i < p; ++i)
        sigma_sub.push_back(g.sigma.pow(static_cast<long long>(i)));
      std::sort(sigma_sub.begin(), sigma_sub.end());
      bool all_conjugate = std::all_of(subgroups.begin(), subgroups.end(), [&](const std::vector<Permutation> &s) {
        return std::any_of(xs.begin(), xs.end(), [&](const Permutation &x) {
          std::vector<Permutation> c;
          for (const auto &e : sigma_sub)
            c.push_back(conjugate(e, x));
          std::sort(c.begin(), c.end());
          return c == s;
        });
      });
      r.check(tag + " X has exactly p subgroups of order p meeting Y trivially",
              subgroups.size() == p, std::to_string(subgroups.size()) + " found");
      r.check(tag + " each is conjugate to <sigma>", all_conjugate && subgroups.count(sigma_sub) == 1);

      std::size_t centralizing = 0;
      for (const auto &y : elements(g.y, o.limits.max_enum))
        if (compose(y, g.sigma) == compose(g.sigma, y))
          ++centralizing;
      Count cy = centralizer(g.y, g.sigma).order();
      r.check(tag + " |C_Y(sigma)| = (r^(df)-1)_p/p", centralizing == np / p && cy == np / p,
              std::to_string(centralizing) + " by enumeration, " + to_string(cy) + " by backtrack");

      std::size_t fixed = count_fixed_subspaces(g.sigma, g.field, rr, f);
      r.check(tag + " sigma fixes at most r^(df/p)-1 one-dimensional GF(r^f)-subspaces", fixed <= bound,
              std::to_string(fixed) + " <= " + std::to_string(bound));
      std::uint64_t all = n / (static_cast<std::uint64_t>(checked_pow(rr, f)) - 1);
      r.check(tag + " identity fixes every one-dimensional subspace",
              count_fixed_subspaces(Permutation(n), g.field, rr, f) == all, std::to_string(all));

      // X acts on the cosets of <sigma>; generators xi, phi, sigma keep their order.
      PermGroup act = coset_action(PermGroup(n, {g.xi_hat, g.phi, g.sigma}), PermGroup(n, {g.sigma}), o.limits);
      PermGroup y_image(act.degree(), {act.generators()[0]});
      const Permutation &sigma_act = act.generators()[2];
      Multiset x_orbits = orbit_lengths(act), y_orbits = orbit_lengths(y_image);
      auto all_np = [&](const Multiset &m) {
        return std::all_of(m.begin(), m.end(), [&](std::size_t l) { return l == np; });
      };
      bool y_semiregular = y_image.order() == np && all_np(y_orbits);
      std::size_t fixed_points = 0;
      for (Point x = 0; x < sigma_act.degree(); ++x)
        fixed_points += sigma_act(x) == x;
      r.check(tag + " on the cosets of <sigma>: X-orbits of length (r^(df)-1)_p, Y semiregular",
              all_np(x_orbits) && y_semiregular, "degree " + std::to_string(act.degree()));
      r.check(tag + " sigma has |Omega|/p fixed points there", fixed_points * p == act.degree(),
              std::to_string(fixed_points) + " fixed");
    });
  }
  bool rejected = false;
  try {
    gammal1_sylow(2, 2, 2, 2);
  } catch (const InvalidArgument &) {
    rejected = true;
  }
  r.check("(2,2,2,2) rejected since gcd(d,p) != 1", rejected);
  return r.take();
}

struct SporadicRow {
  const char *fixture;
  std::uint64_t p;
  Multiset orbits;
};

SuiteResult suite_sporadic(const SuiteOptions &o) {
  Recorder r("sporadic");
  const std::vector<SporadicRow> rows{
      {"M11-deg12", 2, {4, 8}},        {"M11-deg12", 3, {3, 3, 3, 3}},
      {"M12-deg12", 2, {4, 8}},        {"M12-deg12", 3, {3, 9}},
      {"A7-deg15", 3, {3, 3, 9}},      {"M22-deg22", 2, {2, 4, 16}},
      {"M22.2-deg22", 2, {2, 4, 16}},  {"M24", 2, {8, 16}},
      {"M24", 3, {3, 3, 9, 9}},        {"PGammaL2(8)-deg28", 2, {4, 4, 4, 4, 4, 4, 4}},
  };
  for (const auto &row : rows) {
    std::string name = std::string(row.fixture) + " p=" + std::to_string(row.p);
    r.guarded(name, [&] {
      auto t0 = std::chrono::steady_clock::now();
      Multiset got = sylow_orbits(fixture(row.fixture), row.p, o.limits);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::ostringstream detail;
      detail << "orbits " << format_multiset(got) << ", " << secs << " s";
      r.check(name + " Sylow orbit lengths " + format_multiset(row.orbits), got == row.orbits && secs <= 60,
              detail.str());
    });
  }
  return r.take();
}

SuiteResult suite_two_transitive(const SuiteOptions &o) {
  Recorder r("two-transitive");
  auto spot = [&](const std::string &name, const std::function<PermGroup()> &make, std::uint64_t p, bool expect) {
    r.guarded(name, [&] {
      PermGroup g = make();
      StarReport rep = has_star_p(g, p, {}, o.limits);
      r.check(name + " (*)_" + std::to_string(p) + " is " + yesno(expect), rep.verdict == expect, rep.machine());
    });
  };
  spot("A5 = PSL(2,5) on 6 points", [&] { return psl2_action(5, Psl2Variant::PSL, o.limits); }, 2, true);
  spot("A5 = PSL(2,4) on 6 external lines", [&] { return external_lines(4, Psl2Variant::PSL, o.limits).group; }, 2,
       true);
  spot("M11 on 12 points", [] { return fixture("M11-deg12"); }, 3, true);
  spot("PGammaL(2,8) on 28 points (catalog)", [] { return fixture("PGammaL2(8)-deg28"); }, 2, true);
  spot("PGammaL(2,8) on 28 external lines", [&] { return external_lines(8, Psl2Variant::PGammaL, o.limits).group; },
       2, true);
  spot("PSL(2,8) on 28 external lines", [&] { return external_lines(8, Psl2Variant::PSL, o.limits).group; }, 2, true);
  spot("M12 on 12 points", [] { return fixture("M12-deg12"); }, 3, false);
  r.guarded("PSL(2,8) <= PGammaL(2,8) monotonicity", [&] {
    PermGroup big = external_lines(8, Psl2Variant::PGammaL, o.limits).group;
    PermGroup sub = external_lines(8, Psl2Variant::PSL, o.limits).group;
    r.check("PSL(2,8) <= PGammaL(2,8) monotonicity", subgroup_monotonicity_check(big, sub, 2, o.limits));
  });
  return r.take();
}

SuiteResult suite_external_lines(const SuiteOptions &o) {
  Recorder r("external-lines");
  for (std::uint64_t q : {4, 8, 16, 32}) {
    std::string tag = "q=" + std::to_string(q);
    r.guarded(tag, [&] {
      ExternalLines e = external_lines(q, Psl2Variant::PSL, o.limits);
      std::size_t n = e.group.degree();
      r.check(tag + " line counts q+1, q(q+1)/2, q(q-1)/2",
              e.tangents == q + 1 && e.secants == q * (q + 1) / 2 && e.externals == q * (q - 1) / 2,
              std::to_string(e.tangents) + "," + std::to_string(e.secants) + "," + std::to_string(e.externals));
      StarOptions full;
      full.shortcuts = false;
      StarReport rep = has_star_p(e.group, 2, full, o.limits);
      Multiset orbits = rep.orbit_multiset();
      bool half = !orbits.empty() && std::all_of(orbits.begin(), orbits.end(), [&](std::size_t l) { return l == q / 2; });
      r.check(tag + " (*)_2 with every Sylow 2-orbit of length q/2", rep.verdict && half, rep.machine());
      Count n2 = p_part_value(n, 2);
      r.check(tag + " 2*n_2 < n", 2 * n2 < n, "n=" + std::to_string(n) + " n_2=" + to_string(n2));
      Count stab = point_stabilizer(e.group, 0).order();
      r.check(tag + " point stabilizer has order 2(q+1)", stab == 2 * (q + 1) && stab % 2 == 0, to_string(stab));
    });
  }
  return r.take();
}

SuiteResult suite_tuple_blocks(const SuiteOptions &o) {
  Recorder r("tuple-blocks");
  for (auto [q, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{4, 2}, {8, 2}, {9, 3}}) {
    std::string tag = "PGL(2," + std::to_string(q) + ") p=" + std::to_string(p);
    r.guarded(tag, [&] {
      PdivisibleExample ex = pgl2_pdivisible_example(q, o.limits);
      StarReport y = has_star_p(ex.tuples.target, p, {}, o.limits);
      StarReport gb = has_star_p(ex.quotient.target, p, {}, o.limits);
      r.check(tag + " tuple action is faithful with (*)_p", ex.tuples.faithful() && y.verdict, y.machine());
      r.check(tag + " block size divisible by p", ex.blocks.block_size % p == 0,
              "block size " + std::to_string(ex.blocks.block_size));
      r.check(tag + " induced action on blocks fails (*)_p", !gb.verdict, gb.machine());
    });
  }
  r.guarded("A5 on ordered pairs", [&] {
    PermGroup a5 = psl2_action(4, Psl2Variant::PSL, o.limits);
    InducedAction pairs = tuple_action(a5, {0, 1}, o.limits);
    BlockSystem b = tuple_to_set_blocks(pairs);
    InducedAction quotient = action_on_blocks(pairs.target, b);
    StarReport y = has_star_p(pairs.target, 2, {}, o.limits);
    Multiset gb = sylow_orbits(quotient.target, 2, o.limits);
    r.check("A5 on 20 ordered pairs has (*)_2", pairs.target.degree() == 20 && y.verdict, y.machine());
    r.check("10 blocks of size 2", b.block_count == 10 && b.block_size == 2);
    r.check("Sylow 2-orbits on the blocks are 2,2,2,4", gb == Multiset{2, 2, 2, 4}, format_multiset(gb));
  });
  r.guarded("A5 on ordered triples", [&] {
    InducedAction triples = tuple_action(PermGroup::alternating(5), {0, 1, 2}, o.limits);
    BlockSystem b = tuple_to_set_blocks(triples);
    InducedAction quotient = action_on_blocks(triples.target, b);
    r.check("A5 on 60 ordered triples has (*)_3, blocks of size 3! = 6, quotient fails (*)_3",
            triples.target.degree() == 60 && b.block_size == 6 && star(triples.target, 3, o.limits) &&
                !star(quotient.target, 3, o.limits));
  });
  return r.take();
}

SuiteResult suite_regular_d12(const SuiteOptions &o) {
  Recorder r("regular-d12");
  r.guarded("D12", [&] {
    PermGroup g = fixture("D12-regular");
    StarReport rep = has_star_p(g, 2, {}, o.limits);
    r.check("D12 regular has (*)_2", rep.verdict, rep.machine());
    // A block of size 4 through the identity is a subgroup of order 4; D12 has
    // no element of order 4, so it is seeded by 1, r^3 and s.
    BlockSystem b = minimal_block_system(g, std::vector<Point>{0, 3, 6});
    InducedAction q = action_on_blocks(g, b);
    StarReport qr = has_star_p(q.target, 2, {}, o.limits);
    r.check("blocks of size 4", b.block_size == 4 && b.block_count == 3);
    r.check("quotient is a group of order 6 on 3 points", q.target.degree() == 3 && q.target.order() == 6);
    r.check("quotient fails (*)_2", !qr.verdict, qr.machine());
  });
  return r.take();
}

struct NamedGroup {
  std::string name;
  PermGroup g;
};

std::vector<NamedGroup> wreath_tops() {
  return {{"C2", PermGroup::cyclic(2)}, {"C3", PermGroup::cyclic(3)}, {"S3", PermGroup::symmetric(3)}};
}

std::vector<NamedGroup> wreath_bases() {
  return {{"C2", PermGroup::cyclic(2)},
          {"C3", PermGroup::cyclic(3)},
          {"S3", PermGroup::symmetric(3)},
          {"C4", PermGroup::cyclic(4)},
          {"D4", small(4, {"(1,2,3,4)", "(1,3)"}, "D4")},
          {"A4", PermGroup::alternating(4)},
          {"S4", PermGroup::symmetric(4)},
          {"D5", small(5, {"(1,2,3,4,5)", "(2,5)(3,4)"}, "D5")},
          {"A5", PermGroup::alternating(5)}};
}

SuiteResult suite_wreath(const SuiteOptions &o) {
  Recorder r("wreath");
  for (WreathMode mode : {WreathMode::imprimitive, WreathMode::product}) {
    std::string mname = mode == WreathMode::imprimitive ? "imprimitive" : "product";
    std::size_t pairs = 0, agree = 0, generic_agree = 0;
    std::string failures;
    for (const auto &h : wreath_bases()) {
      for (const auto &k : wreath_tops()) {
        WreathProduct w = mode == WreathMode::imprimitive ? wreath_imprimitive(h.g, k.g)
                                                           : wreath_product_action(h.g, k.g, o.limits);
        ++pairs;
        bool pair_ok = true, generic_ok = true;
        for (std::uint64_t p : {2, 3}) {
          StarOptions so;
          so.sylow = sylow_structural(w, p, o.limits);
          bool got = has_star_p(w.group, p, so, o.limits).verdict;
          bool expect;
          if (mode == WreathMode::imprimitive)
            expect = star(h.g, p, o.limits) && star(k.g, p, o.limits);
          else if (k.g.order() % p != 0)
            expect = star(h.g, p, o.limits);
          else
            expect = p_part_value(h.g.degree(), p) == h.g.degree();
          pair_ok = pair_ok && got == expect;
          generic_ok = generic_ok && star(w.group, p, o.limits) == got;
          if (got != expect)
            failures += " " + h.name + "," + k.name + ",p=" + std::to_string(p);
        }
        agree += pair_ok;
        generic_agree += generic_ok;
      }
    }
    std::string law = mode == WreathMode::imprimitive
                          ? "H Wr K has (*)_p iff H and K do"
                          : "H PWr K has (*)_p iff H does (p not dividing |K|) or |Delta| is a p-power (p dividing |K|)";
    r.check(mname + ": " + law, agree == pairs && pairs >= 12,
            std::to_string(agree) + "/" + std::to_string(pairs) + " pairs" + failures);
    r.check(mname + ": structural and generic Sylow subgroups give the same verdicts", generic_agree == pairs);
  }
  struct Witness {
    std::string name;
    PermGroup h, k;
    std::uint64_t p;
    bool expect;
  };
  std::vector<Witness> witnesses{
      {"S3 PWr C2 (degree 9), p=2", PermGroup::symmetric(3), PermGroup::cyclic(2), 2, false},
      {"S4 PWr C2 (degree 16), p=2", PermGroup::symmetric(4), PermGroup::cyclic(2), 2, true},
      {"S3 PWr C3 (degree 27), p=3", PermGroup::symmetric(3), PermGroup::cyclic(3), 3, true},
      {"A5 PWr C2 (degree 25), p=2", PermGroup::alternating(5), PermGroup::cyclic(2), 2, false},
      {"A5 PWr C2 (degree 25), p=5", PermGroup::alternating(5), PermGroup::cyclic(2), 5, true},
  };
  for (const auto &w : witnesses) {
    r.guarded(w.name, [&] {
      WreathProduct wp = wreath_product_action(w.h, w.k, o.limits);
      StarReport rep = has_star_p(wp.group, w.p, {}, o.limits);
      r.check(w.name + " is " + yesno(w.expect), rep.verdict == w.expect, rep.machine());
    });
  }
  r.guarded("orders", [&] {
    bool ok = wreath_imprimitive(PermGroup::cyclic(3), PermGroup::cyclic(2)).group.order() == 18 &&
              wreath_product_action(PermGroup::symmetric(3), PermGroup::cyclic(2), o.limits).group.order() == 72 &&
              wreath_product_action(PermGroup::symmetric(4), PermGroup::cyclic(2), o.limits).group.order() == 1152;
    r.check("orders: C3 Wr C2 = 18, S3 PWr C2 = 72, S4 PWr C2 = 1152", ok);
  });
  return r.take();
}

SuiteResult suite_diagonal(const SuiteOptions &o) {
  Recorder r("diagonal");
  r.guarded("A5 x A5 diagonal", [&] {
    PermGroup g = diagonal_action(PermGroup::alternating(5), o.limits);
    r.check("degree 60, order 3600, transitive", g.degree() == 60 && g.order() == 3600 && is_transitive(g));
    for (std::uint64_t p : {2, 3, 5}) {
      StarReport rep = has_star_p(g, p, {}, o.limits);
      r.check("fails (*)_" + std::to_string(p), !rep.verdict, rep.machine());
    }
  });
  return r.take();
}

SuiteResult suite_sylow_methods(const SuiteOptions &o) {
  Recorder r("sylow-methods");
  for (const auto &name : fixture_names()) {
    r.guarded(name, [&] {
      PermGroup g = fixture(name);
      bool orders = true, small_agree = true, minimal = true;
      for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        Count want = p_part_value(g.order(), p);
        SylowResult s = sylow_subgroup(g, p, o.limits);
        orders = orders && s.order == want && s.subgroup.order() == want && is_subgroup(s.subgroup, g);
        if (g.order() <= 10000) {
          Count a = sylow_subgroup(g, p, SylowMethod::ascent, o.limits).subgroup.order();
          Count b = sylow_subgroup(g, p, SylowMethod::oracle, o.limits).subgroup.order();
          small_agree = small_agree && a == want && b == want;
        }
        Multiset lengths = orbit_lengths(s.subgroup);
        minimal = minimal && lengths.front() == p_part_value(g.degree(), p);
      }
      r.check(name + ": Sylow order equals the p-part of |G| for p <= 11", orders);
      if (g.order() <= 10000)
        r.check(name + ": ascent and oracle methods agree", small_agree);
      r.check(name + ": shortest Sylow orbit has length n_p", minimal);
    });
  }
  return r.take();
}

struct CountRow {
  std::size_t n, total, star2, star3;
};

const std::vector<CountRow> &published_counts() {
  static const std::vector<CountRow> rows{
      {2, 1, 1, 1},       {3, 2, 1, 2},         {4, 5, 5, 3},       {5, 5, 1, 3},       {6, 16, 6, 16},
      {7, 7, 2, 2},       {8, 50, 50, 27},      {9, 34, 5, 34},     {10, 45, 5, 24},    {11, 8, 2, 4},
      {12, 301, 96, 243}, {13, 9, 2, 3},        {14, 63, 16, 14},   {15, 104, 5, 66},   {16, 1954, 1954, 1438},
      {17, 10, 1, 5},     {18, 983, 115, 983},  {19, 8, 3, 2},      {20, 1117, 116, 657}, {21, 164, 17, 43},
      {22, 59, 12, 32},   {23, 7, 2, 4},
  };
  return rows;
}

SuiteResult suite_counts(const SuiteOptions &o) {
  Recorder r("counts");
  if (o.db_path.empty()) {
    r.check("database given", false, "pass --db FILE");
    return r.take();
  }
  r.guarded("counts", [&] {
    auto db = parse_db(o.db_path, {false, o.counts_first, o.counts_last});
    auto rows = table_counts(db, o.counts_first, o.counts_last, {2, 3}, {}, o.limits);
    for (const auto &row : rows) {
      auto it = std::find_if(published_counts().begin(), published_counts().end(),
                             [&](const CountRow &c) { return c.n == row.degree; });
      if (it == published_counts().end())
        continue;
      std::ostringstream got;
      got << row.total << " " << row.counts.at(2) << " " << row.counts.at(3);
      r.check("degree " + std::to_string(row.degree) + ": " + std::to_string(it->total) + " " +
                  std::to_string(it->star2) + " " + std::to_string(it->star3),
              row.total == it->total && row.counts.at(2) == it->star2 && row.counts.at(3) == it->star3,
              "computed " + got.str());
    }
  });
  return r.take();
}

SuiteResult suite_maximal(const SuiteOptions &o) {
  Recorder r("maximal");
  std::vector<TransitiveDbEntry> db;
  if (!o.db_path.empty())
    db = parse_db(o.db_path, {false, 20, 20});
  for (const auto &row : maximal_table_check(20, o.db_path.empty() ? nullptr : &db, o.limits))
    r.check(row.entry.structure + " (degree " + std::to_string(row.entry.degree) + ") has (*)_2", row.ok(),
            row.error.empty() ? "order " + to_string(row.order) : row.error);
  return r.take();
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"numth",        "gammal1",     "sporadic",      "two-transitive",
                                              "external-lines", "tuple-blocks", "regular-d12", "wreath",
                                              "diagonal",     "sylow-methods", "counts",       "maximal"};
  return names;
}

SuiteResult run_suite(const std::string &name, const SuiteOptions &options) {
  static const std::map<std::string, SuiteResult (*)(const SuiteOptions &)> table{
      {"numth", suite_numth},
      {"gammal1", suite_gammal1},
      {"sporadic", suite_sporadic},
      {"two-transitive", suite_two_transitive},
      {"external-lines", suite_external_lines},
      {"tuple-blocks", suite_tuple_blocks},
      {"regular-d12", suite_regular_d12},
      {"wreath", suite_wreath},
      {"diagonal", suite_diagonal},
      {"sylow-methods", suite_sylow_methods},
      {"counts", suite_counts},
      {"maximal", suite_maximal},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw InvalidArgument("unknown suite " + name);
  return it->second(options);
}

} // namespace starp
