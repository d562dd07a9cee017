/** @file wreath.hpp
 *  Wreath products H Wr K in imprimitive and product action.
 *
 *  Encodings: imprimitive point (omega, delta) is delta * m + omega; product
 *  action point (d_1, ..., d_k) is its base-m digit string with d_1 most
 *  significant. K permutes coordinates by (d_1, ..., d_k)^s = (d_{1 s^-1}, ...).
 */
#pragma once

#include "starp/actions.hpp"
#include "starp/sylow.hpp"

#include "json.hpp"

#include <optional>

namespace starp {

enum class WreathMode { imprimitive, product };

struct WreathProduct {
  PermGroup h;
  PermGroup k;
  WreathMode mode = WreathMode::imprimitive;
  PermGroup group;
  std::optional<BlockSystem> blocks;  ///< the k blocks of size m (imprimitive mode)

  nlohmann::json encoding() const;
};

WreathProduct wreath_imprimitive(const PermGroup &h, const PermGroup &k);
WreathProduct wreath_product_action(const PermGroup &h, const PermGroup &k, const Limits &limits = {});

/// P^k x| Q from Sylow subgroups P of H and Q of K.
SylowResult sylow_structural(const WreathProduct &w, std::uint64_t p, const Limits &limits = {});

} // namespace starp
