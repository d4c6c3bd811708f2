#pragma once

// JSON algebra files and verification reports.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homalg/algebra.hpp"
#include "homalg/catalog.hpp"

namespace homalg::io {

using Json = nlohmann::ordered_json;

/// An algebra together with the named maps stored next to it. The map
/// named "alpha" in a file is the twisting map.
struct AlgebraFile {
    AlgebraSpec algebra;
    std::vector<catalog::NamedMap> maps;

    /// "alpha" resolves to the twisting map. Throws UnknownKey.
    const LinMap& map(const std::string& name) const;
};

/// Throws ParseError (malformed JSON or scalar text) or Validation.
AlgebraFile from_json(const Json& doc);
AlgebraFile parse_text(std::string_view text);
Json to_json(const AlgebraFile& file);
std::string to_text(const AlgebraFile& file);

/// Throws Io when the file cannot be read or written.
AlgebraFile load(const std::string& path);
void save(const AlgebraFile& file, const std::string& path);

AlgebraFile from_entry(const catalog::CatalogEntry& entry);

struct CheckRecord {
    std::string identity;
    std::string strategy;
    CheckReport report;
    double elapsed_ms = 0;
};

Json witness_json(const AlgebraSpec& a, const Witness& w);
Json record_json(const AlgebraSpec& a, const CheckRecord& record, bool timing);
Json report_json(const AlgebraSpec& a, const std::vector<CheckRecord>& records, bool timing);
std::string report_text(const AlgebraSpec& a, const std::vector<CheckRecord>& records, bool timing);

}  // namespace homalg::io
