#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hym/shape.hpp"

namespace hym::verify {

/// Seeded law-verification suites over exact rationals.
///
/// `dims` is a size budget. For "group" it names the signature (n, mids...),
/// default (2, 2). For every other suite it is (max_dim, max_mid_volume),
/// default (4, 4).
struct Options {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Dims dims;
};

struct Report {
  std::string suite;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::uint64_t seed = 0;
  /// First failing trial: its index, the operands and what disagreed.
  std::optional<nlohmann::json> counterexample;
  /// Suite-specific extras (the group suite attaches its axiom report).
  nlohmann::json details;

  bool ok() const { return failed == 0 && passed == trials; }
  nlohmann::json to_json() const;
};

const std::vector<std::string_view>& suite_names();

/// Runs the named suite; throws Error(UnknownSuite) for an unknown name.
Report run_suite(std::string_view name, const Options& options);

}  // namespace hym::verify
