#pragma once

#include "hombax/bundle.hpp"

namespace hombax {

// Built-in instance with a human-readable origin note. Every instance is
// re-checked against its declared contract each time it is materialized;
// n2-nonassoc is the deliberate negative fixture whose contract is that
// the base product fails the hom-associativity check at (a, a, a).
struct CatalogInstance {
  std::string name;
  StructureBundle bundle;
  std::string provenance;
};

const std::vector<std::string>& catalog_names();

// UnknownName for anything not in catalog_names().
CatalogInstance catalog(const std::string& name);

}  // namespace hombax
