/** @file io.cc
 *  Group file reading and writing.
 */
#include "starp/io.hpp"

#include <fstream>
#include <sstream>

namespace starp {

GroupDocument parse_group_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw ParseError("group JSON needs \"degree\" and \"generators\"");
  if (!doc["degree"].is_number_unsigned() || doc["degree"].get<std::uint64_t>() == 0)
    throw ParseError("\"degree\" must be a positive integer");
  std::size_t n = doc["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto &g : doc["generators"]) {
    if (g.is_string()) {
      gens.push_back(Permutation::parse_cycles(n, g.get<std::string>()));
      continue;
    }
    if (!g.is_array() || g.size() != n)
      throw ParseError("each generator must list " + std::to_string(n) + " images");
    std::vector<Point> img;
    for (const auto &v : g) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > n)
        throw ParseError("generator image out of range");
      img.push_back(static_cast<Point>(v.get<std::uint64_t>() - 1));
    }
    try {
      gens.emplace_back(std::move(img));
    } catch (const InvalidArgument &) {
      throw ParseError("generator is not a permutation");
    }
  }
  GroupDocument out{PermGroup(n, std::move(gens), doc.value("name", std::string())), nlohmann::json::object()};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "degree" && it.key() != "name" && it.key() != "generators")
      out.annotations[it.key()] = it.value();
  return out;
}

PermGroup parse_group_text(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (n == 0) {
      std::istringstream head(line);
      std::string word;
      head >> word >> n;
      if (word != "degree" || n == 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected \"degree n\"");
      continue;
    }
    try {
      gens.push_back(Permutation::parse_cycles(n, line));
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (n == 0)
    throw ParseError("missing \"degree n\" line");
  return PermGroup(n, std::move(gens));
}

GroupDocument read_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(path + ": " + e.what());
    }
    return parse_group_json(doc);
  }
  return {parse_group_text(text), nlohmann::json::object()};
}

nlohmann::json group_to_json(const PermGroup &g, const nlohmann::json &annotations) {
  nlohmann::json doc = nlohmann::json::object();
  doc["degree"] = g.degree();
  if (!g.name().empty())
    doc["name"] = g.name();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &s : g.generators()) {
    nlohmann::json img = nlohmann::json::array();
    for (Point x : s.images())
      img.push_back(x + 1);
    gens.push_back(std::move(img));
  }
  if (gens.empty()) {
    nlohmann::json img = nlohmann::json::array();
    for (std::size_t x = 1; x <= g.degree(); ++x)
      img.push_back(x);
    gens.push_back(std::move(img));
  }
  doc["generators"] = std::move(gens);
  for (auto it = annotations.begin(); it != annotations.end(); ++it)
    doc[it.key()] = it.value();
  return doc;
}

void write_group_file(const std::string &path, const PermGroup &g, const nlohmann::json &annotations) {
  std::ofstream out(path);
  if (!out)
    throw InvalidArgument("cannot write " + path);
  out << group_to_json(g, annotations).dump(1) << '\n';
}

} // namespace starp
