#pragma once

// Built-in algebras, their endomorphisms and their twisted tables, stored
// as transcribed data.

#include <string>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg::catalog {

struct NamedMap {
    std::string name;
    LinMap map;
};

/// A statement the entry is known to satisfy (or violate). With
/// `alpha_identity` the check runs with alpha replaced by id.
struct Expectation {
    std::string identity;
    bool holds = true;
    bool alpha_identity = false;
    std::string source;
};

/// A place where the transcribed table departs from the printed one.
struct Erratum {
    std::string location;
    std::string printed;
    std::string stored;
    std::string reason;
};

struct CatalogEntry {
    std::string key;
    AlgebraSpec algebra;
    std::vector<NamedMap> maps;
    std::string provenance;
    std::vector<Expectation> expected;
    std::vector<Erratum> errata;

    /// Throws UnknownKey.
    const LinMap& map(const std::string& name) const;
};

/// Keys in catalog order.
std::vector<std::string> list();
/// Throws UnknownKey.
const CatalogEntry& get(const std::string& key);
const std::vector<CatalogEntry>& entries();

}  // namespace homalg::catalog
