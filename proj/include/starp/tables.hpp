/** @file tables.hpp
 *  Counts of transitive groups with (*)_p by degree, and the membership check
 *  for the maximal (*)_2 groups of small degree.
 */
#pragma once

#include "starp/star.hpp"
#include "starp/transdb.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace starp {

struct TableRow {
  std::size_t degree = 0;
  std::size_t total = 0;
  std::map<std::uint64_t, std::size_t> counts;  ///< p -> groups with (*)_p
  std::map<std::string, std::size_t> rules;     ///< "p:rule" -> how often it decided
};

struct TableOptions {
  StarOptions star;
  /// Called after each entry; useful for progress output.
  std::function<void(const TransitiveDbEntry &)> progress;
};

std::vector<TableRow> table_counts(const std::vector<TransitiveDbEntry> &db, std::size_t first,
                                   std::size_t last, const std::vector<std::uint64_t> &primes,
                                   const TableOptions &options = {}, const Limits &limits = {});

/// Columns: degree, total, then one count per prime.
std::string format_table(const std::vector<TableRow> &rows, const std::vector<std::uint64_t> &primes);

struct MaximalEntry {
  std::size_t degree = 0;
  std::string structure;  ///< expression for build_structure, or "n_i" for a database group
  bool maximal = true;    ///< false for the non-maximal (3 Wr 2) Wr 2
};

/// Entries of degree at most 20.
const std::vector<MaximalEntry> &maximal_entries();

struct MaximalCheckRow {
  MaximalEntry entry;
  bool constructed = false;
  bool wreath = false;
  Count order = 0;
  bool star2 = false;
  std::string error;

  bool ok() const { return constructed && star2; }
};

/// Constructs each entry up to max_degree and tests (*)_2. Database entries are
/// looked up in db when it is given and reported as errors otherwise.
std::vector<MaximalCheckRow> maximal_table_check(std::size_t max_degree,
                                                 const std::vector<TransitiveDbEntry> *db = nullptr,
                                                 const Limits &limits = {});

} // namespace starp
