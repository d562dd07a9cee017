/** @file types.cc
 *  Decimal formatting of counts.
 */
#include "starp/types.hpp"

#include <algorithm>

namespace starp {

std::string to_string(Count value) {
  if (value == 0)
    return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Count parse_count(const std::string &text) {
  if (text.empty())
    throw ParseError("empty integer");
  Count value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("not an unsigned integer: " + text);
    value = checked_mul(value, 10);
    Count digit = static_cast<Count>(c - '0');
    if (value + digit < value)
      throw ResourceLimit("integer overflow: " + text);
    value += digit;
  }
  return value;
}

Count checked_mul(Count a, Count b) {
  if (a != 0 && b > kCountMax / a)
    throw ResourceLimit("128-bit overflow in multiplication");
  return a * b;
}

} // namespace starp
