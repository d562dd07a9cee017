/** @file transdb.hpp
 *  Text database of transitive groups, one group per line:
 *
 *      n i : (1,2,3)(4,5) ; (1,4)   # optional comment, "order=N" is checked
 *
 *  Points are 1-based; generators are separated by ';'.
 */
#pragma once

#include "starp/perm_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starp {

struct TransitiveDbEntry {
  std::size_t degree = 0;
  std::size_t index = 0;
  std::vector<std::string> generators;
  PermGroup group;
  std::optional<Count> order;  ///< from an "order=N" comment
  std::string comment;
  std::size_t line = 0;
};

struct DbOptions {
  bool check_orders = false;  ///< compare computed orders with "order=N" comments
  std::size_t min_degree = 0;
  std::size_t max_degree = static_cast<std::size_t>(-1);
};

std::vector<TransitiveDbEntry> parse_db_text(const std::string &text, const DbOptions &options = {});
std::vector<TransitiveDbEntry> parse_db(const std::string &path, const DbOptions &options = {});

} // namespace starp
