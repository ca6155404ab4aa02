#pragma once

#include <string>
#include <vector>

#include "bcr/seifert.hpp"

namespace bcr {

// A named, built-in Seifert dataset together with a short human description.
struct CatalogEntry {
  std::string name;
  std::string description;
  SeifertData data;
};

// All built-in datasets, in display order.
const std::vector<CatalogEntry>& catalog_entries();

// Looks up an entry by exact name; throws bcr::validation_error if absent.
const CatalogEntry& catalog_lookup(const std::string& name);

// The trivial dataset with empty pairing matrices in every degree 1..n.
// Throws bcr::validation_error for n = 0.
SeifertData unknot_data(unsigned n);

}  // namespace bcr
