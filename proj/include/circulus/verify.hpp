#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circulus/verdict.hpp"

namespace circulus {

struct CheckResult {
  std::string id;  // stable test id, e.g. "POLY-2"
  std::string name;
  Truth truth;
  std::string detail;
};

/// Every invariant and property of the library modules, checked with
/// `samples` random draws per sampled property from a generator seeded with
/// rng_seed. Deterministic for fixed arguments.
std::vector<CheckResult> run_verify_suite(std::uint64_t rng_seed, int samples);

/// holds if all hold, violated if any is violated, else indeterminate.
Truth overall(const std::vector<CheckResult>& results);

}  // namespace circulus
