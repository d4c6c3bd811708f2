#include "homalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "homalg/error.hpp"
#include "homalg/parser.hpp"

namespace homalg::io {

const LinMap& AlgebraFile::map(const std::string& name) const {
    if (name == "alpha" && algebra.alpha()) return *algebra.alpha();
    for (const auto& m : maps)
        if (m.name == name) return m.map;
    throw Error(ErrorKind::UnknownKey, "no map named '" + name + "'");
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const Json& field(const Json& doc, const char* key) {
    if (!doc.contains(key)) invalid(std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::string string_of(const Json& value, const std::string& where) {
    if (!value.is_string()) invalid(where + " must be a string");
    return value.get<std::string>();
}

Scalar scalar_of(const Json& value, const AlgebraSpec& a, const std::string& where) {
    std::string text;
    if (value.is_number_integer()) {
        text = value.dump();
    } else {
        text = string_of(value, where);
    }
    try {
        return parse_scalar_expr(text, a.params());
    } catch (const ParseError& e) {
        if (e.kind() == ErrorKind::UndeclaredParameter)
            invalid(where + ": undeclared parameter '" + e.found() + "'");
        throw ParseError(e.kind(), e.position(), e.expected() + " (in " + where + ")", e.found());
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.what());
    }
}

SourcePosition position_of(std::string_view text, std::size_t byte) {
    SourcePosition pos;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t k = 0; k < end; ++k) {
        if (text[k] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    pos.offset = end;
    return pos;
}

}  // namespace

AlgebraFile from_json(const Json& doc) {
    if (!doc.is_object()) invalid("algebra file must be a JSON object");
    const std::string name = doc.contains("name") ? string_of(doc.at("name"), "name") : std::string("algebra");

    std::vector<std::string> basis;
    const Json& basis_json = field(doc, "basis");
    if (!basis_json.is_array() || basis_json.empty()) invalid("basis must be a non-empty list of labels");
    std::set<std::string> seen;
    for (const auto& label : basis_json) {
        basis.push_back(string_of(label, "basis label"));
        if (!seen.insert(basis.back()).second) invalid("duplicate basis label '" + basis.back() + "'");
    }
    if (doc.contains("dim")) {
        const Json& dim = doc.at("dim");
        if (!dim.is_number_unsigned() || dim.get<std::size_t>() != basis.size())
            invalid("dim does not match the number of basis labels");
    }

    std::vector<Parameter> params;
    if (doc.contains("params")) {
        std::set<std::string> names;
        for (const auto& p : doc.at("params")) {
            Parameter param;
            if (p.is_string()) {
                param.name = p.get<std::string>();
            } else {
                param.name = string_of(field(p, "name"), "parameter name");
                if (p.contains("nonzero")) {
                    if (!p.at("nonzero").is_boolean()) invalid("parameter 'nonzero' must be a boolean");
                    param.nonzero = p.at("nonzero").get<bool>();
                }
            }
            if (param.name.empty() || param.name == "al" || param.name == "mu")
                invalid("invalid parameter name '" + param.name + "'");
            if (!names.insert(param.name).second) invalid("duplicate parameter '" + param.name + "'");
            params.push_back(param);
        }
    }

    AlgebraFile file{AlgebraSpec(name, basis, params), {}};
    AlgebraSpec& a = file.algebra;

    if (doc.contains("mu")) {
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        std::size_t index = 0;
        for (const auto& entry : doc.at("mu")) {
            const std::string where = "mu[" + std::to_string(index++) + "]";
            const std::size_t i = a.index_of(string_of(field(entry, "i"), where + ".i"));
            const std::size_t j = a.index_of(string_of(field(entry, "j"), where + ".j"));
            if (!pairs.insert({i, j}).second)
                invalid(where + ": duplicate product (" + basis[i] + ", " + basis[j] + ")");
            const Json& value = field(entry, "value");
            if (!value.is_object()) invalid(where + ".value must map basis labels to scalars");
            Vector v(a.dim());
            for (const auto& [label, coefficient] : value.items())
                v[a.index_of(label)] = scalar_of(coefficient, a, where + ".value." + label);
            a.set_product(i, j, std::move(v));
        }
    }

    if (doc.contains("maps")) {
        const Json& maps = doc.at("maps");
        if (!maps.is_object()) invalid("maps must be an object of named matrices");
        for (const auto& [map_name, rows] : maps.items()) {
            const std::string where = "maps." + map_name;
            if (!rows.is_array() || rows.size() != a.dim()) invalid(where + " must have " + std::to_string(a.dim()) + " rows");
            LinMap f(a.dim());
            for (std::size_t r = 0; r < a.dim(); ++r) {
                if (!rows[r].is_array() || rows[r].size() != a.dim())
                    invalid(where + " row " + std::to_string(r) + " must have " + std::to_string(a.dim()) + " entries");
                for (std::size_t c = 0; c < a.dim(); ++c)
                    f.at(r, c) = scalar_of(rows[r][c], a, where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            }
            if (map_name == "alpha") {
                a.set_alpha(f);
            } else {
                file.maps.push_back({map_name, std::move(f)});
            }
        }
    }

    if (doc.contains("unit") && !doc.at("unit").is_null()) a.set_unit(a.index_of(string_of(doc.at("unit"), "unit")));
    return file;
}

AlgebraFile parse_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        const std::string found = byte < text.size() ? std::string(1, text[byte]) : std::string();
        throw ParseError(ErrorKind::Parse, position_of(text, byte), "valid JSON", found);
    }
    return from_json(doc);
}

Json to_json(const AlgebraFile& file) {
    const AlgebraSpec& a = file.algebra;
    Json doc;
    doc["name"] = a.name();
    doc["dim"] = a.dim();
    doc["basis"] = a.basis();
    Json params = Json::array();
    for (const auto& p : a.params()) params.push_back({{"name", p.name}, {"nonzero", p.nonzero}});
    doc["params"] = params;
    Json mu = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!a.has_product(i, j)) continue;
            Json value = Json::object();
            const Vector& v = a.product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!v[k].is_zero()) value[a.basis()[k]] = v[k].to_string();
            mu.push_back({{"i", a.basis()[i]}, {"j", a.basis()[j]}, {"value", value}});
        }
    }
    doc["mu"] = mu;
    Json maps = Json::object();
    auto matrix = [&](const LinMap& f) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < f.dim(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < f.dim(); ++c) row.push_back(f.at(r, c).to_string());
            rows.push_back(row);
        }
        return rows;
    };
    if (a.alpha()) maps["alpha"] = matrix(*a.alpha());
    for (const auto& m : file.maps)
        if (m.name != "alpha") maps[m.name] = matrix(m.map);
    doc["maps"] = maps;
    if (a.unit()) doc["unit"] = a.basis()[*a.unit()];
    return doc;
}

std::string to_text(const AlgebraFile& file) { return to_json(file).dump(2) + "\n"; }

AlgebraFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.position(), e.expected() + " in " + path, e.found());
    }
}

void save(const AlgebraFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
    out << to_text(file);
    if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

AlgebraFile from_entry(const catalog::CatalogEntry& entry) {
    AlgebraFile file{entry.algebra, {}};
    for (const auto& m : entry.maps)
        if (!(entry.algebra.alpha() && m.name == "alpha")) file.maps.push_back(m);
    return file;
}

// --------------------------------------------------------------------------
// reports

Json witness_json(const AlgebraSpec& a, const Witness& w) {
    Json out = Json::object();
    if (!w.basis_tuple.empty()) {
        Json tuple = Json::array();
        for (auto i : w.basis_tuple) tuple.push_back(a.basis().at(i));
        out["basis_tuple"] = tuple;
    }
    if (w.coordinate) out["coordinate"] = a.basis().at(*w.coordinate);
    if (w.residual.dim() == a.dim()) {
        Json residual = Json::object();
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (!w.residual[k].is_zero()) residual[a.basis()[k]] = w.residual[k].to_string();
        out["residual"] = residual;
    }
    if (!w.counterexample.empty()) {
        Json point = Json::object();
        for (const auto& [var, coords] : w.counterexample) {
            Json v = Json::object();
            for (std::size_t k = 0; k < coords.size() && k < a.dim(); ++k) v[a.basis()[k]] = rational_to_string(coords[k]);
            point[var] = v;
        }
        out["counterexample"] = point;
    }
    if (!w.note.empty()) out["note"] = w.note;
    return out;
}

Json record_json(const AlgebraSpec& a, const CheckRecord& record, bool timing) {
    Json out;
    out["identity"] = record.identity;
    out["strategy"] = record.strategy;
    out["verdict"] = to_string(record.report.verdict);
    out["witness"] = record.report.witness ? witness_json(a, *record.report.witness) : Json(nullptr);
    out["assumptions"] = record.report.assumptions;
    out["notes"] = record.report.notes;
    if (timing) out["elapsed_ms"] = record.elapsed_ms;
    return out;
}

Json report_json(const AlgebraSpec& a, const std::vector<CheckRecord>& records, bool timing) {
    Json out;
    out["algebra"] = a.name();
    Json checks = Json::array();
    std::size_t failed = 0;
    for (const auto& r : records) {
        checks.push_back(record_json(a, r, timing));
        if (!r.report.ok()) ++failed;
    }
    out["checks"] = checks;
    out["summary"] = {{"total", records.size()}, {"failed", failed}};
    return out;
}

std::string report_text(const AlgebraSpec& a, const std::vector<CheckRecord>& records, bool timing) {
    std::ostringstream out;
    out << "algebra " << a.name() << "\n";
    std::size_t failed = 0;
    for (const auto& r : records) {
        out << "  " << r.identity;
        if (!r.strategy.empty()) out << " [" << r.strategy << "]";
        out << ": " << to_string(r.report.verdict);
        if (timing) out << " (" << r.elapsed_ms << " ms)";
        out << "\n";
        if (!r.report.assumptions.empty()) {
            out << "    assumptions:";
            for (const auto& s : r.report.assumptions) out << " " << s << ";";
            out << "\n";
        }
        if (r.report.witness) {
            const Witness& w = *r.report.witness;
            if (!w.note.empty()) {
                constexpr std::size_t kShown = 240;
                out << "    witness: " << w.note.substr(0, kShown) << (w.note.size() > kShown ? " ..." : "") << "\n";
            }
            for (const auto& [var, coords] : w.counterexample) {
                Vector v(a.dim());
                for (std::size_t k = 0; k < coords.size() && k < a.dim(); ++k) v[k] = Scalar(coords[k]);
                out << "    " << var << " = " << format_vector(a, v) << "\n";
            }
        }
        for (const auto& note : r.report.notes) out << "    note: " << note << "\n";
        if (!r.report.ok()) ++failed;
    }
    out << (failed == 0 ? "all " + std::to_string(records.size()) + " checks hold"
                        : std::to_string(failed) + " of " + std::to_string(records.size()) + " checks fail")
        << "\n";
    return out.str();
}

}  // namespace homalg::io
