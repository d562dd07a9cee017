/** @file star.cc
 *  The (*)_p decision procedure.
 */
#include "starp/star.hpp"

#include "starp/homomorphism.hpp"
#include "starp/numth.hpp"

#include <algorithm>
#include <sstream>

namespace starp {

const char *to_string(StarRule r) {
  switch (r) {
  case StarRule::shortcut_pnp:
    return "shortcut-pnp";
  case StarRule::shortcut_stab_coprime:
    return "shortcut-stab-coprime";
  case StarRule::shortcut_prime_power_degree:
    return "shortcut-prime-power-degree";
  case StarRule::orbit_length_test:
    return "orbit-length-test";
  case StarRule::per_orbit_aggregate:
    return "per-orbit-aggregate";
  }
  return "?";
}

std::vector<std::size_t> StarReport::orbit_multiset() const {
  std::vector<std::size_t> all;
  for (const auto &c : constituents)
    if (c.sylow_orbits)
      all.insert(all.end(), c.sylow_orbits->begin(), c.sylow_orbits->end());
  std::sort(all.begin(), all.end());
  return all;
}

std::string StarReport::machine() const {
  std::ostringstream out;
  out << "degree=" << degree << " p=" << p << " verdict=" << (verdict ? "true" : "false")
      << " rule=" << to_string(decided_by) << " orbits=" << format_multiset(orbit_multiset());
  return out.str();
}

std::string StarReport::human() const {
  std::ostringstream out;
  out << "Property (*)_" << p << " on " << degree << " points: " << (verdict ? "holds" : "fails")
      << " (" << to_string(decided_by) << ")\n";
  if (sylow_method)
    out << "Sylow " << p << "-subgroup method: " << to_string(*sylow_method) << "\n";
  for (std::size_t i = 0; i < constituents.size(); ++i) {
    const auto &c = constituents[i];
    out << "  orbit " << i + 1 << " from point " << c.points.front() + 1 << ": n=" << c.n
        << " n_p=" << to_string(c.n_p) << " |G^O|=" << to_string(c.order) << " "
        << (c.verdict ? "holds" : "fails") << " by " << to_string(c.rule);
    if (c.sylow_orbits)
      out << ", Sylow orbit lengths " << format_multiset(*c.sylow_orbits);
    out << "\n";
  }
  return out.str();
}

StarReport has_star_p(const PermGroup &g, std::uint64_t p, const StarOptions &options,
                      const Limits &limits) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  StarReport report;
  report.degree = g.degree();
  report.p = p;

  OrbitPartition parts = orbits(g);
  bool transitive = parts.orbits.size() == 1;
  Count group_p = p_part_value(g.order(), p);

  std::vector<std::size_t> pending;
  for (auto &orb : parts.orbits) {
    Constituent c;
    c.points = orb;
    std::sort(c.points.begin(), c.points.end());
    c.n = c.points.size();
    c.n_p = p_part_value(c.n, p);
    c.order = transitive ? g.order() : restriction_hom(g, c.points).image().order();
    Count constituent_p = p_part_value(c.order, p);
    bool decided = false;
    if (options.shortcuts) {
      decided = true;
      if (group_p == 1 || constituent_p == c.n_p)
        c.rule = StarRule::shortcut_stab_coprime;
      else if (c.n_p == c.n)
        c.rule = StarRule::shortcut_prime_power_degree;
      else if (c.n_p * p > c.n)
        c.rule = StarRule::shortcut_pnp;
      else
        decided = false;
    }
    if (!decided) {
      c.rule = StarRule::orbit_length_test;
      pending.push_back(report.constituents.size());
    }
    report.constituents.push_back(std::move(c));
  }

  if (!pending.empty()) {
    PermGroup sylow;
    if (options.sylow) {
      const PermGroup &given = options.sylow->subgroup;
      if (options.sylow->p != p || given.order() != group_p || !is_subgroup(given, g))
        throw InvalidArgument("supplied subgroup is not a Sylow " + std::to_string(p) + "-subgroup");
      sylow = given;
      report.sylow_method = options.sylow->method;
    } else {
      SylowResult s = sylow_subgroup(g, p, options.method, limits);
      report.sylow_method = s.method;
      sylow = std::move(s.subgroup);
    }
    OrbitPartition sylow_parts = orbits(sylow);
    for (std::size_t idx : pending) {
      Constituent &c = report.constituents[idx];
      std::vector<std::size_t> lengths;
      for (const auto &o : sylow_parts.orbits)
        if (std::binary_search(c.points.begin(), c.points.end(), o.front()))
          lengths.push_back(o.size());
      std::sort(lengths.begin(), lengths.end());
      c.verdict = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t l) { return l == c.n_p; });
      c.sylow_orbits = std::move(lengths);
    }
  }

  report.verdict = std::all_of(report.constituents.begin(), report.constituents.end(),
                               [](const Constituent &c) { return c.verdict; });
  if (transitive)
    report.decided_by = report.constituents.front().rule;
  else if (options.shortcuts && group_p == 1)
    report.decided_by = StarRule::shortcut_stab_coprime;
  else
    report.decided_by = StarRule::per_orbit_aggregate;
  return report;
}

bool subgroup_monotonicity_check(const PermGroup &g, const PermGroup &h, std::uint64_t p,
                                 const Limits &limits) {
  if (h.degree() != g.degree() || !is_subgroup(h, g))
    throw InvalidArgument("h is not a subgroup of g");
  if (!is_transitive(h))
    throw InvalidArgument("h is not transitive");
  return !has_star_p(g, p, {}, limits).verdict || has_star_p(h, p, {}, limits).verdict;
}

} // namespace starp
