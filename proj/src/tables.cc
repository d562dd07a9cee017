/** @file tables.cc
 *  Counts table and maximal-structure checks.
 */
#include "starp/tables.hpp"

#include "starp/constructions.hpp"

#include <set>
#include <sstream>

namespace starp {

std::vector<TableRow> table_counts(const std::vector<TransitiveDbEntry> &db, std::size_t first,
                                   std::size_t last, const std::vector<std::uint64_t> &primes,
                                   const TableOptions &options, const Limits &limits) {
  std::map<std::size_t, TableRow> rows;
  for (std::size_t n = first; n <= last; ++n)
    rows[n].degree = n;
  for (const auto &e : db) {
    if (e.degree < first || e.degree > last)
      continue;
    TableRow &row = rows[e.degree];
    ++row.total;
    for (std::uint64_t p : primes) {
      StarReport r = has_star_p(e.group, p, options.star, limits);
      if (r.verdict)
        ++row.counts[p];
      ++row.rules[std::to_string(p) + ":" + to_string(r.decided_by)];
    }
    if (options.progress)
      options.progress(e);
  }
  std::vector<TableRow> out;
  for (auto &[n, row] : rows) {
    if (row.total == 0)
      throw InvalidArgument("database has no groups of degree " + std::to_string(n));
    for (std::uint64_t p : primes)
      row.counts.try_emplace(p, 0);
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_table(const std::vector<TableRow> &rows, const std::vector<std::uint64_t> &primes) {
  std::ostringstream out;
  out << "degree total";
  for (std::uint64_t p : primes)
    out << " star" << p;
  out << "\n";
  for (const auto &row : rows) {
    out << row.degree << " " << row.total;
    for (std::uint64_t p : primes)
      out << " " << row.counts.at(p);
    out << "\n";
  }
  return out.str();
}

const std::vector<MaximalEntry> &maximal_entries() {
  static const std::vector<MaximalEntry> entries{
      {2, "2"},
      {3, "3"},
      {4, "S4"},
      {5, "5"},
      {6, "3 Wr 2"},
      {6, "2 Wr 3"},
      {6, "PSL(2,5)"},
      {7, "7:3"},
      {8, "S8"},
      {9, "3 Wr 3"},
      {10, "5 Wr 2"},
      {10, "2 Wr 5"},
      {11, "11:5"},
      {12, "PSL(2,11)"},
      {12, "2 Wr (3 Wr 2)"},
      {12, "2 Wr PSL(2,5)"},
      {12, "3 Wr S4"},
      {12, "PSL(2,5) Wr 2"},
      {12, "S4 Wr 3"},
      {12, "(3 Wr 2) Wr 2", false},
      {13, "13:3"},
      {14, "(7:3) Wr 2"},
      {14, "2 Wr (7:3)"},
      {15, "5 Wr 3"},
      {15, "3 Wr 5"},
      {16, "S16"},
      {17, "17"},
      {18, "3 Wr 3 Wr 2"},
      {18, "3 Wr 2 Wr 3"},
      {18, "2 Wr 3 Wr 3"},
      {18, "3 Wr PSL(2,5)"},
      {18, "PSL(2,5) Wr 3"},
      {19, "19:9"},
      {20, "20_89"},
      {20, "PSL(2,19)"},
      {20, "5 Wr S4"},
      {20, "2 Wr 5 Wr 2"},
      {20, "S4 Wr 5"},
  };
  return entries;
}

std::vector<MaximalCheckRow> maximal_table_check(std::size_t max_degree,
                                                 const std::vector<TransitiveDbEntry> *db,
                                                 const Limits &limits) {
  std::vector<MaximalCheckRow> out;
  for (const auto &entry : maximal_entries()) {
    if (entry.degree > max_degree)
      continue;
    MaximalCheckRow row;
    row.entry = entry;
    try {
      PermGroup g;
      if (auto us = entry.structure.find('_'); us != std::string::npos) {
        std::size_t index = std::stoul(entry.structure.substr(us + 1));
        const TransitiveDbEntry *found = nullptr;
        if (db)
          for (const auto &e : *db)
            if (e.degree == entry.degree && e.index == index)
              found = &e;
        if (!found)
          throw InvalidArgument("database group " + entry.structure + " is not available");
        g = found->group;
      } else {
        Structure s = build_structure(entry.structure, limits);
        row.wreath = s.wreath.has_value();
        g = s.group;
      }
      if (g.degree() != entry.degree || !is_transitive(g))
        throw Error(entry.structure + " is not transitive of degree " + std::to_string(entry.degree));
      row.constructed = true;
      row.order = g.order();
      row.star2 = has_star_p(g, 2, {}, limits).verdict;
    } catch (const Error &e) {
      row.error = e.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace starp
