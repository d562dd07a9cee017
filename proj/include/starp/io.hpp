/** @file io.hpp
 *  Group file formats.
 *
 *  JSON: {"degree": n, "name": "...", "generators": [[1-based images], ...]}
 *  (generators may also be cycle strings). Extra keys are kept as annotations.
 *  Text: first line "degree n", then one generator per line in cycle notation.
 */
#pragma once

#include "starp/perm_group.hpp"

#include "json.hpp"

#include <string>

namespace starp {

struct GroupDocument {
  PermGroup group;
  nlohmann::json annotations = nlohmann::json::object();  ///< keys other than degree/name/generators
};

GroupDocument parse_group_json(const nlohmann::json &doc);
PermGroup parse_group_text(const std::string &text);

/// Reads either format, choosing by the first non-blank character.
GroupDocument read_group_file(const std::string &path);

nlohmann::json group_to_json(const PermGroup &g,
                             const nlohmann::json &annotations = nlohmann::json::object());
void write_group_file(const std::string &path, const PermGroup &g,
                      const nlohmann::json &annotations = nlohmann::json::object());

} // namespace starp
