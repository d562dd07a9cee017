/** @file suites.hpp
 *  Self-checking suites behind `starp verify-lemmas`. Each suite runs a set of
 *  named checks and records pass/fail with a short detail line.
 */
#pragma once

#include "starp/types.hpp"

#include <string>
#include <vector>

namespace starp {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool pass() const;
  std::string format() const;
};

struct SuiteOptions {
  Limits limits;
  std::string db_path;             ///< transitive-groups database for "counts" and "maximal"
  std::size_t counts_first = 2;
  std::size_t counts_last = 23;
};

/// numth, gammal1, sporadic, two-transitive, external-lines, tuple-blocks,
/// regular-d12, wreath, diagonal, sylow-methods, counts, maximal.
const std::vector<std::string> &suite_names();

SuiteResult run_suite(const std::string &name, const SuiteOptions &options = {});

} // namespace starp
