/** @file starp.cc
 *  Command-line front end: group files in, orders, (*)_p reports, Sylow
 *  subgroups, block systems, wreath products, constructions and tables out.
 */
#include "starp/constructions.hpp"
#include "starp/io.hpp"
#include "starp/star.hpp"
#include "starp/suites.hpp"
#include "starp/tables.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace starp;

namespace {

void emit(const std::string &out, const PermGroup &g, const nlohmann::json &annotations = nlohmann::json::object()) {
  if (out == "-")
    std::cout << group_to_json(g, annotations).dump(1) << "\n";
  else
    write_group_file(out, g, annotations);
}

std::vector<Point> parse_points(const std::string &text, std::size_t degree) {
  std::vector<Point> pts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos != item.size() || v < 1 || v > degree)
      throw InvalidArgument("bad point '" + item + "' (points are 1.." + std::to_string(degree) + ")");
    pts.push_back(static_cast<Point>(v - 1));
  }
  return pts;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string &text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception &) {
    throw InvalidArgument("bad degree range '" + text + "', expected A..B");
  }
}

std::string format_blocks(const BlockSystem &b) {
  std::ostringstream out;
  out << "blocks=" << b.block_count << " size=" << b.block_size << " :";
  for (const auto &block : b.blocks) {
    out << " {";
    for (std::size_t i = 0; i < block.size(); ++i)
      out << (i ? "," : "") << block[i] + 1;
    out << "}";
  }
  return out.str();
}

SylowMethod parse_method(const std::string &m) {
  for (SylowMethod s : {SylowMethod::reduction, SylowMethod::ascent, SylowMethod::oracle})
    if (m == to_string(s))
      return s;
  throw InvalidArgument("unknown Sylow method " + m);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"starp: Sylow orbit property (*)_p of permutation groups"};
  app.require_subcommand(1);
  Limits limits;
  app.add_option("--max-enum", limits.max_enum, "element enumeration cap")->capture_default_str();
  app.add_option("--seed", limits.seed, "random seed")->capture_default_str();
  app.add_option("--max-degree-cap", limits.max_degree, "cap on induced-action degrees")->capture_default_str();

  std::string file, out = "-", report = "machine", method = "reduction", through, mode = "imprimitive";
  std::uint64_t p = 2;
  bool no_shortcuts = false, show_orbits = false;

  auto *order = app.add_subcommand("order", "print the group order");
  order->add_option("FILE", file)->required();

  auto *star_cmd = app.add_subcommand("star", "decide Property (*)_p");
  star_cmd->add_option("FILE", file)->required();
  star_cmd->add_option("--p", p, "prime")->required();
  star_cmd->add_flag("--no-shortcuts", no_shortcuts, "always run the orbit-length test");
  star_cmd->add_option("--report", report)->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
  star_cmd->add_option("--method", method, "Sylow method")->capture_default_str();

  auto *sylow_cmd = app.add_subcommand("sylow", "compute a Sylow p-subgroup");
  sylow_cmd->add_option("FILE", file)->required();
  sylow_cmd->add_option("--p", p, "prime")->required();
  sylow_cmd->add_flag("--orbits", show_orbits, "print its orbit lengths");
  sylow_cmd->add_option("--method", method)->check(CLI::IsMember({"reduction", "ascent", "oracle"}))->capture_default_str();
  std::string sylow_out;
  sylow_cmd->add_option("--out", sylow_out, "write the subgroup to FILE");

  auto *blocks_cmd = app.add_subcommand("blocks", "block systems of a transitive group");
  blocks_cmd->add_option("FILE", file)->required();
  blocks_cmd->add_option("--through", through, "finest system with these points in one block, e.g. 1,4");
  std::string quotient_out;
  blocks_cmd->add_option("--quotient", quotient_out, "with --through, write the action on blocks to FILE");

  std::string h_file, k_file;
  auto *wreath_cmd = app.add_subcommand("wreath", "wreath product of two group files");
  wreath_cmd->add_option("--mode", mode)->check(CLI::IsMember({"imprimitive", "product"}))->capture_default_str();
  wreath_cmd->add_option("H", h_file)->required();
  wreath_cmd->add_option("K", k_file)->required();
  wreath_cmd->add_option("--out", out)->capture_default_str();

  std::string cname, variant = "PSL", expr, part = "tuples", fixture_name;
  std::uint64_t q = 0, r = 0, d = 0, f = 0, k = 0;
  auto *construct = app.add_subcommand("construct", "build a named group");
  construct->add_option("NAME", cname, "psl2 | external-lines | pgl2-tuples | gammal1 | diagonal | frobenius | structure | fixture")
      ->required()
      ->check(CLI::IsMember({"psl2", "external-lines", "pgl2-tuples", "gammal1", "diagonal", "frobenius", "structure",
                             "fixture"}));
  construct->add_option("--q", q, "field order");
  construct->add_option("--variant", variant, "PSL | PGL | PGammaL | SL")->capture_default_str();
  construct->add_option("--part", part, "pgl2-tuples: tuples | quotient")
      ->check(CLI::IsMember({"tuples", "quotient"}))
      ->capture_default_str();
  construct->add_option("--r", r);
  construct->add_option("--d", d);
  construct->add_option("--f", f);
  construct->add_option("--p", p);
  construct->add_option("--k", k);
  construct->add_option("--expr", expr, "structure expression, e.g. \"(3 Wr 2) Wr 2\"");
  construct->add_option("--name", fixture_name, "fixture name");
  construct->add_option("--group", file, "diagonal: group file for T");
  construct->add_option("--out", out)->capture_default_str();

  std::string db, degrees = "2..16", primes = "2,3";
  bool maximal = false;
  auto *table = app.add_subcommand("table", "count transitive groups with (*)_p");
  table->add_option("--db", db, "transitive groups database")->required();
  table->add_option("--degrees", degrees)->capture_default_str();
  table->add_option("--p", primes, "comma-separated primes")->capture_default_str();
  table->add_flag("--no-shortcuts", no_shortcuts);
  table->add_flag("--maximal", maximal, "check the maximal (*)_2 groups of degree <= 20 instead");

  std::string suite = "all";
  std::string suite_db = STARP_DEFAULT_DB;
  auto *verify = app.add_subcommand("verify-lemmas", "run self-checking suites");
  verify->add_option("--suite", suite, "suite name or all")->capture_default_str();
  verify->add_option("--db", suite_db, "database for the counts and maximal suites")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*order) {
      PermGroup g = read_group_file(file).group;
      std::cout << to_string(g.order()) << "\n";
    } else if (*star_cmd) {
      PermGroup g = read_group_file(file).group;
      StarOptions so;
      so.shortcuts = !no_shortcuts;
      so.method = parse_method(method);
      StarReport rep = has_star_p(g, p, so, limits);
      std::cout << (report == "human" ? rep.human() : rep.machine() + "\n");
    } else if (*sylow_cmd) {
      PermGroup g = read_group_file(file).group;
      SylowResult s = sylow_subgroup(g, p, parse_method(method), limits);
      std::cout << "order=" << to_string(s.order) << " method=" << to_string(s.method) << "\n";
      if (show_orbits)
        std::cout << "orbits=" << format_multiset(orbit_lengths(s.subgroup)) << "\n";
      if (!sylow_out.empty())
        emit(sylow_out, s.subgroup);
    } else if (*blocks_cmd) {
      PermGroup g = read_group_file(file).group;
      if (!through.empty()) {
        BlockSystem b = minimal_block_system(g, parse_points(through, g.degree()));
        std::cout << format_blocks(b) << "\n";
        if (!quotient_out.empty()) {
          InducedAction a = action_on_blocks(g, b);
          emit(quotient_out, a.target, {{"labels", label_annotation(a)}});
        }
      } else {
        auto systems = all_minimal_block_systems(g);
        if (systems.empty())
          std::cout << "primitive\n";
        for (const auto &b : systems)
          std::cout << format_blocks(b) << "\n";
      }
    } else if (*wreath_cmd) {
      PermGroup h = read_group_file(h_file).group, kk = read_group_file(k_file).group;
      WreathProduct w = mode == "product" ? wreath_product_action(h, kk, limits) : wreath_imprimitive(h, kk);
      emit(out, w.group, {{"encoding", w.encoding()}});
    } else if (*construct) {
      if (cname == "psl2") {
        emit(out, psl2_action(q, parse_psl2_variant(variant), limits));
      } else if (cname == "external-lines") {
        emit(out, external_lines(q, parse_psl2_variant(variant), limits).group);
      } else if (cname == "pgl2-tuples") {
        PdivisibleExample ex = pgl2_pdivisible_example(q, limits);
        const InducedAction &a = part == "tuples" ? ex.tuples : ex.quotient;
        emit(out, a.target, {{"labels", label_annotation(a)}});
      } else if (cname == "gammal1") {
        GammaL1 g = gammal1_sylow(r, d, f, p, limits);
        emit(out, g.x, {{"sigma", g.sigma.to_string()}, {"xi_hat", g.xi_hat.to_string()}, {"phi", g.phi.to_string()}});
      } else if (cname == "diagonal") {
        if (file.empty())
          throw InvalidArgument("diagonal needs --group FILE");
        emit(out, diagonal_action(read_group_file(file).group, limits));
      } else if (cname == "frobenius") {
        emit(out, frobenius_group(p, k));
      } else if (cname == "structure") {
        Structure s = build_structure(expr, limits);
        nlohmann::json ann = nlohmann::json::object();
        if (s.wreath)
          ann["encoding"] = s.wreath->encoding();
        emit(out, s.group, ann);
      } else {
        emit(out, fixture(fixture_name));
      }
    } else if (*table) {
      auto [first, last] = parse_range(degrees);
      auto entries = parse_db(db, {false, first, last});
      if (maximal) {
        bool ok = true;
        for (const auto &row : maximal_table_check(last, &entries, limits)) {
          ok = ok && row.ok();
          std::cout << row.entry.degree << " " << row.entry.structure << " order=" << to_string(row.order)
                    << " star2=" << (row.star2 ? "true" : "false") << (row.error.empty() ? "" : " error=" + row.error)
                    << "\n";
        }
        return ok ? 0 : 1;
      }
      std::vector<std::uint64_t> ps;
      std::stringstream in(primes);
      std::string item;
      while (std::getline(in, item, ','))
        ps.push_back(std::stoull(item));
      TableOptions to;
      to.star.shortcuts = !no_shortcuts;
      std::cout << format_table(table_counts(entries, first, last, ps, to, limits), ps);
    } else if (*verify) {
      SuiteOptions so;
      so.limits = limits;
      so.db_path = suite_db;
      bool ok = true;
      for (const auto &name : suite == "all" ? suite_names() : std::vector<std::string>{suite}) {
        SuiteResult res = run_suite(name, so);
        std::cout << res.format();
        ok = ok && res.pass();
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "starp: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
