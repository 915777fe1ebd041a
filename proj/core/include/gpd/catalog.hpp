// Runnable catalog of worked instances: each entry builds its groupoids or
// actions, runs the relevant checks and compares against pinned expected
// results. Deterministic across runs.

#pragma once

#include <string>
#include <vector>

namespace gpd {

struct CatalogResult {
  bool pass = false;
  std::vector<std::string> lines;  // human-readable findings
  std::string json;                // report.v1-style payload
};

struct CatalogEntry {
  std::string name;
  std::string notes;
  CatalogResult (*run)();
};

std::vector<CatalogEntry> const &catalog_entries();
CatalogEntry const *find_catalog_entry(std::string const &name);

}  // namespace gpd
