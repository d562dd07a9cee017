/** @file types.hpp
 *  Basic scalar types, configuration limits and the exception hierarchy.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace starp {

using Point = std::uint32_t;

/// Group orders and other counts; 128 bits hold |S_n| for n <= 34.
using Count = unsigned __int128;

/// Resource limits shared by every algorithm that can blow up.
struct Limits {
  std::uint64_t max_enum = 1'000'000;    ///< element enumeration cap
  std::uint64_t max_degree = 1'000'000;  ///< cap on induced-action degrees
  std::uint64_t field_cap = 1u << 20;    ///< largest field order
  std::uint64_t seed = 0;                ///< seed for all randomized steps
  unsigned retry_budget = 512;           ///< random p-element attempts per ascent round
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition or argument check failed.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A configured cap was exceeded; the computation is beyond desk scale.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// Malformed input text.
class ParseError : public Error {
public:
  using Error::Error;
};

std::string to_string(Count value);
Count parse_count(const std::string &text);

inline constexpr Count kCountMax = ~Count(0);

/// Multiplication that throws on 128-bit overflow.
Count checked_mul(Count a, Count b);

inline std::uint64_t to_u64(Count value) {
  if (value > std::numeric_limits<std::uint64_t>::max())
    throw ResourceLimit("value does not fit in 64 bits: " + to_string(value));
  return static_cast<std::uint64_t>(value);
}

} // namespace starp
