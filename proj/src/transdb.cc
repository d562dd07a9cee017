/** @file transdb.cc
 *  Transitive group database parser.
 */
#include "starp/transdb.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace starp {

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

} // namespace

std::vector<TransitiveDbEntry> parse_db_text(const std::string &text, const DbOptions &options) {
  std::vector<TransitiveDbEntry> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string comment;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      comment = trim(raw.substr(hash + 1));
      raw.resize(hash);
    }
    std::string line = trim(raw);
    if (line.empty())
      continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(lineno, "expected 'n i : generators'");
    TransitiveDbEntry e;
    e.line = lineno;
    e.comment = comment;
    {
      std::istringstream head(line.substr(0, colon));
      std::string extra;
      if (!(head >> e.degree >> e.index) || (head >> extra))
        fail(lineno, "expected a degree and an index before ':'");
    }
    if (e.degree < 1 || e.index < 1)
      fail(lineno, "degree and index must be positive");
    if (!seen.emplace(e.degree, e.index).second)
      fail(lineno, "duplicate entry " + std::to_string(e.degree) + " " + std::to_string(e.index));
    if (e.degree < options.min_degree || e.degree > options.max_degree)
      continue;

    std::vector<Permutation> gens;
    std::istringstream body(line.substr(colon + 1));
    std::string part;
    while (std::getline(body, part, ';')) {
      part = trim(part);
      if (part.empty())
        fail(lineno, "empty generator");
      try {
        gens.push_back(Permutation::parse_cycles(e.degree, part));
      } catch (const Error &err) {
        fail(lineno, err.what());
      }
      e.generators.push_back(part);
    }
    if (gens.empty())
      fail(lineno, "no generators");
    e.group = PermGroup(e.degree, std::move(gens),
                        std::to_string(e.degree) + "_" + std::to_string(e.index));
    if (!is_transitive(e.group))
      fail(lineno, "group " + e.group.name() + " is not transitive");
    if (auto pos = comment.find("order="); pos != std::string::npos) {
      std::istringstream num(comment.substr(pos + 6));
      std::string digits;
      num >> digits;
      try {
        e.order = parse_count(digits);
      } catch (const Error &) {
        fail(lineno, "bad order annotation");
      }
      if (options.check_orders && e.group.order() != *e.order)
        fail(lineno, "computed order " + to_string(e.group.order()) + " differs from annotation");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TransitiveDbEntry> parse_db(const std::string &path, const DbOptions &options) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_db_text(buf.str(), options);
}

} // namespace starp
