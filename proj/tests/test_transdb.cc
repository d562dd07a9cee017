/** @file test_transdb.cc
 *  Tests for the database parser and tables.
 */
#include "doctest.h"

#include "starp/tables.hpp"
#include "starp/transdb.hpp"

using namespace starp;

namespace {

const std::vector<TransitiveDbEntry> &db_to_12() {
  static const auto db = parse_db(STARP_DATA_DIR "/transitive_2_23.db", {true, 2, 12});
  return db;
}

} // namespace

TEST_CASE("database text format") {
  auto one = parse_db_text("# header\n2 1 : (1,2)   # order=2 S2\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].degree == 2);
  CHECK(one[0].index == 1);
  CHECK(one[0].group.order() == 2);
  CHECK(one[0].order == Count(2));
  CHECK(one[0].line == 2);

  auto two = parse_db_text("4 1 : (1,2,3,4)\n4 2 : (1,2)(3,4) ; (1,3)(2,4)\n", {false, 4, 4});
  CHECK(two.size() == 2);
  CHECK(two[1].group.order() == 4);
  CHECK(parse_db_text("4 1 : (1,2,3,4)\n5 1 : (1,2,3,4,5)\n", {false, 5, 5}).size() == 1);

  auto message = [](const std::string &text, DbOptions o = {}) {
    try {
      parse_db_text(text, o);
    } catch (const ParseError &e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("2 1 : (1,2)\n2 1 : (1,2)\n").rfind("line 2:", 0) == 0);
  CHECK(message("3 1 : (1,2)\n").rfind("line 1:", 0) == 0);
  CHECK(message("\n3 1 (1,2,3)\n").rfind("line 2:", 0) == 0);
  CHECK(message("3 1 : (1,2,4)\n").rfind("line 1:", 0) == 0);
  CHECK(message("3 1 : (1,2,3)  # order=6\n", {true}).rfind("line 1:", 0) == 0);
  CHECK(message("3 1 : (1,2,3)  # order=6\n", {false}) == "no error");
  CHECK(message("2 1 : (1,2)\n2 1 : (1,2)\n", {false, 3, 5}).rfind("line 2:", 0) == 0);
}

TEST_CASE("shipped database sizes and orders") {
  const auto &db = db_to_12();
  std::map<std::size_t, std::size_t> per_degree;
  for (const auto &e : db)
    ++per_degree[e.degree];
  const std::map<std::size_t, std::size_t> known{{2, 1},  {3, 2},  {4, 5},  {5, 5},  {6, 16}, {7, 7},
                                                 {8, 50}, {9, 34}, {10, 45}, {11, 8}, {12, 301}};
  CHECK(per_degree == known);
  for (const auto &e : db) {
    CHECK(is_transitive(e.group));
    if (e.order)
      CHECK(*e.order == e.group.order());
  }
}

TEST_CASE("counts of groups with the property") {
  const auto &db = db_to_12();
  auto rows = table_counts(db, 6, 6, {2, 3});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].total == 16);
  CHECK(rows[0].counts.at(2) == 6);
  auto twelve = table_counts(db, 12, 12, {2});
  CHECK(twelve[0].counts.at(2) == 96);
  CHECK(table_counts(db, 10, 10, {3})[0].counts.at(3) == 24);
  TableOptions plain;
  plain.star.shortcuts = false;
  auto slow = table_counts(db, 2, 9, {2, 3}, plain);
  auto fast = table_counts(db, 2, 9, {2, 3});
  for (std::size_t i = 0; i < slow.size(); ++i)
    CHECK(slow[i].counts == fast[i].counts);
  CHECK_THROWS_AS(table_counts(db, 13, 13, {2}), InvalidArgument);
  std::string text = format_table(rows, {2, 3});
  CHECK(text.find("degree") != std::string::npos);
  CHECK(text.find("16") != std::string::npos);
}

TEST_CASE("maximal groups of small degree") {
  const auto &entries = maximal_entries();
  CHECK(entries.size() == 38);
  std::size_t deg6 = 0;
  for (const auto &e : entries)
    deg6 += e.degree == 6;
  CHECK(deg6 == 3);
  auto rows = maximal_table_check(12, &db_to_12());
  for (const auto &r : rows) {
    INFO(r.entry.structure);
    CHECK(r.ok());
    CHECK(r.error.empty());
  }
  bool saw_nonmaximal = false;
  for (const auto &r : rows)
    if (r.entry.structure == "(3 Wr 2) Wr 2") {
      saw_nonmaximal = true;
      CHECK_FALSE(r.entry.maximal);
      CHECK(r.order == 648);
    }
  CHECK(saw_nonmaximal);
}
