#pragma once

// Property suites behind `lagrel verify`. Each suite is deterministic for a
// given seed and reports per-property check and failure counts.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lagrel/wgrs.hpp"

namespace lagrel {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool ok() const;
};

std::vector<std::string> suite_names();

/// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

using CatalogEntry = std::pair<std::string, std::vector<int>>;

/// gl(m|n) with m, n >= 1 and m + n <= max_rank, then osp(1|2), osp(2|2), osp(3|2).
std::vector<CatalogEntry> catalog_entries(int max_rank, bool with_osp = true);
std::string entry_name(const CatalogEntry& e);

/// The relation {Delta, E_{Cv}} for an isotropic v of the hyperbolic plane.
LagrangianEquivalenceRelation baby_relation();

}  // namespace lagrel
