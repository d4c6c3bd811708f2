#include "homalg/catalog.hpp"

#include <sstream>

#include "homalg/error.hpp"
#include "homalg/parser.hpp"

namespace homalg::catalog {

namespace {

using Image = std::vector<std::pair<std::string, std::string>>;  // basis label -> scalar text

struct Product {
    std::string i;
    std::string j;
    Image value;
};

Vector vector_of(const AlgebraSpec& a, const Image& image) {
    Vector v(a.dim());
    for (const auto& [label, text] : image) v[a.index_of(label)] = v[a.index_of(label)] + parse_scalar_expr(text, a.params());
    return v;
}

AlgebraSpec make_algebra(std::string name, std::vector<std::string> basis, std::vector<Parameter> params,
                         const std::vector<Product>& table) {
    AlgebraSpec a(std::move(name), std::move(basis), std::move(params));
    for (const auto& p : table) a.set_product(a.index_of(p.i), a.index_of(p.j), vector_of(a, p.value));
    return a;
}

// Columns given as the images of the basis vectors, in basis order.
LinMap map_of(const AlgebraSpec& a, const std::vector<Image>& images) {
    std::vector<Vector> columns;
    for (const auto& image : images) columns.push_back(vector_of(a, image));
    return LinMap::from_columns(columns);
}

// Multiplication table rows; each cell is [-][coefficient.]label.
AlgebraSpec table_algebra(std::string name, std::vector<std::string> basis, std::vector<Parameter> params,
                          const std::vector<std::string>& rows) {
    AlgebraSpec a(std::move(name), std::move(basis), std::move(params));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::istringstream in(rows[i]);
        std::string cell;
        for (std::size_t j = 0; in >> cell; ++j) {
            Scalar sign(1);
            if (cell.front() == '-') {
                sign = Scalar(-1);
                cell.erase(0, 1);
            }
            Scalar coefficient(1);
            const auto dot = cell.rfind('.');
            if (dot != std::string::npos) {
                coefficient = parse_scalar_expr(cell.substr(0, dot), a.params());
                cell.erase(0, dot + 1);
            }
            a.set_constant(i, j, a.index_of(cell), sign * coefficient);
        }
    }
    return a;
}

std::vector<Parameter> params_a(int count, std::initializer_list<int> nonzero) {
    std::vector<Parameter> out;
    for (int k = 1; k <= count; ++k) {
        bool nz = false;
        for (int n : nonzero) nz = nz || n == k;
        out.push_back({"a" + std::to_string(k), nz});
    }
    return out;
}

const std::vector<std::string> basis3 = {"e1", "e2", "e3"};
const std::vector<std::string> basis4 = {"e0", "e1", "e2", "e3"};
const std::vector<std::string> basis8 = {"u", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};

const Erratum x1_label{"mu(e3, x1)", "mu(e3, x1) = b e3", "mu(e3, e1) = b e3",
                       "x1 is not a basis label; read as e1 by symmetry with mu(e1, e3)"};

const Image alpha1_e0 = {{"e0", "1"}, {"e1", "a1"}, {"e2", "a2"}, {"e3", "a3"}};
const Image alpha1_e2 = {{"e2", "a4"}, {"e3", "a4*a3/a2"}};
const Image alpha1_e3 = {{"e2", "a5"}, {"e3", "a5*a3/a2"}};
const Image alpha2_e2 = {{"e2", "-a4*a2/a5"}, {"e3", "-a4*a3/a5"}};
const Image alpha2_e3 = {{"e1", "a5"}, {"e2", "a6"}, {"e3", "(a6*a3 - a5)/a2"}};

std::vector<NamedMap> alt4_maps(const AlgebraSpec& a) {
    return {
        {"alpha1", map_of(a, {alpha1_e0, {}, alpha1_e2, alpha1_e3})},
        {"alpha2", map_of(a, {alpha1_e0, {{"e1", "a4"}}, alpha2_e2, alpha2_e3})},
    };
}

CatalogEntry hom_assoc_3d() {
    CatalogEntry e;
    e.key = "hom_assoc_3d";
    e.algebra = make_algebra(e.key, basis3, {{"a", false}, {"b", false}},
                             {{"e1", "e1", {{"e1", "a"}}},
                              {"e1", "e2", {{"e2", "a"}}},
                              {"e2", "e1", {{"e2", "a"}}},
                              {"e1", "e3", {{"e3", "b"}}},
                              {"e3", "e1", {{"e3", "b"}}},
                              {"e2", "e2", {{"e2", "a"}}},
                              {"e2", "e3", {{"e3", "b"}}}});
    const LinMap alpha = map_of(e.algebra, {{{"e1", "a"}}, {{"e2", "a"}}, {{"e3", "b"}}});
    e.algebra.set_alpha(alpha);
    e.maps = {{"alpha", alpha}};
    e.provenance = "3-dimensional Hom-associative algebra with alpha = diag(a, a, b); not associative when a != b, b != 0";
    e.expected = {{"hom_associative", true, false, "defined as a Hom-associative algebra"},
                  {"hom_associative", false, true, "mu(mu(e1,e1),e3) - mu(e1,mu(e1,e3)) = (a-b)b e3"}};
    e.errata = {x1_label};
    return e;
}

CatalogEntry alt4(const std::string& key, const std::vector<Product>& table, const std::string& provenance) {
    CatalogEntry e;
    e.key = key;
    e.algebra = make_algebra(key, basis4, params_a(6, {2, 5}), table);
    e.maps = alt4_maps(e.algebra);
    e.provenance = provenance;
    e.expected = {{"left_hom_alternative", true, true, "alternative algebra"},
                  {"right_hom_alternative", true, true, "alternative algebra"},
                  {"hom_associative", false, true, "alternative but not associative"}};
    return e;
}

CatalogEntry alt4_mu1() {
    return alt4("alt4_mu1",
                {{"e0", "e0", {{"e0", "1"}}},
                 {"e0", "e1", {{"e1", "1"}}},
                 {"e2", "e0", {{"e2", "1"}}},
                 {"e2", "e3", {{"e1", "1"}}},
                 {"e3", "e0", {{"e3", "1"}}},
                 {"e3", "e2", {{"e1", "-1"}}}},
                "4-dimensional alternative, non-associative algebra (first of the two)");
}

CatalogEntry alt4_mu2() {
    return alt4("alt4_mu2",
                {{"e0", "e0", {{"e0", "1"}}},
                 {"e0", "e2", {{"e2", "1"}}},
                 {"e0", "e3", {{"e3", "1"}}},
                 {"e1", "e0", {{"e1", "1"}}},
                 {"e2", "e3", {{"e1", "1"}}},
                 {"e3", "e2", {{"e1", "-1"}}}},
                "4-dimensional alternative, non-associative algebra (second of the two)");
}

CatalogEntry alt4_twist(const std::string& key, const std::string& map_name, int param_count,
                        std::initializer_list<int> nonzero, const std::vector<Product>& table,
                        const std::string& provenance) {
    CatalogEntry e;
    e.key = key;
    e.algebra = make_algebra(key, basis4, params_a(param_count, nonzero), table);
    // Maps are read against the full a1..a6 parameter list, then restricted.
    const AlgebraSpec scratch("scratch", basis4, params_a(6, {2, 5}));
    for (auto& m : alt4_maps(scratch))
        if (m.name == map_name) e.maps.push_back(m);
    e.algebra.set_alpha(e.maps.front().map);
    e.provenance = provenance;
    e.expected = {{"left_hom_alternative", true, false, "twist of an alternative algebra by an endomorphism"},
                  {"right_hom_alternative", true, false, "twist of an alternative algebra by an endomorphism"}};
    return e;
}

CatalogEntry alt4_mu1_twist_alpha1() {
    return alt4_twist("alt4_mu1_twist_alpha1", "alpha1", 5, {2},
                      {{"e0", "e0", alpha1_e0}, {"e2", "e0", alpha1_e2}, {"e3", "e0", alpha1_e3}},
                      "alpha1 o mu1 with twisting map alpha1");
}

CatalogEntry alt4_mu2_twist_alpha1() {
    return alt4_twist("alt4_mu2_twist_alpha1", "alpha1", 5, {2},
                      {{"e0", "e0", alpha1_e0}, {"e0", "e2", alpha1_e2}, {"e0", "e3", alpha1_e3}},
                      "alpha1 o mu2 with twisting map alpha1");
}

CatalogEntry alt4_mu1_twist_alpha2() {
    CatalogEntry e = alt4_twist("alt4_mu1_twist_alpha2", "alpha2", 6, {2, 5},
                                {{"e0", "e0", alpha1_e0},
                                 {"e0", "e1", {{"e1", "a4"}}},
                                 {"e2", "e0", alpha2_e2},
                                 {"e2", "e3", {{"e1", "a4"}}},
                                 {"e3", "e0", alpha2_e3},
                                 {"e3", "e2", {{"e1", "-a4"}}}},
                                "alpha2 o mu1 with twisting map alpha2");
    e.errata.push_back({"mu(e3, e0)", "e3", "a5 e1 + a6 e2 + ((a6 a3 - a5)/a2) e3",
                        "mu1(e3, e0) = e3, so the twisted product is alpha2(e3)"});
    return e;
}

CatalogEntry alt4_mu2_twist_alpha2() {
    CatalogEntry e = alt4_twist("alt4_mu2_twist_alpha2", "alpha2", 6, {2, 5},
                                {{"e0", "e0", alpha1_e0},
                                 {"e0", "e2", alpha2_e2},
                                 {"e0", "e3", alpha2_e3},
                                 {"e1", "e0", {{"e1", "a4"}}},
                                 {"e2", "e3", {{"e1", "a4"}}},
                                 {"e3", "e2", {{"e1", "-a4"}}}},
                                "alpha2 o mu2 with twisting map alpha2");
    return e;
}

const std::vector<std::string> octonion_rows = {
    "u e1 e2 e3 e4 e5 e6 e7",
    "e1 -u e4 e7 -e2 e6 -e5 -e3",
    "e2 -e4 -u e5 e1 -e3 e7 -e6",
    "e3 -e7 -e5 -u e6 e2 -e4 e1",
    "e4 e2 -e1 -e6 -u e7 e3 -e5",
    "e5 -e6 e3 -e2 -e7 -u e1 e4",
    "e6 e5 -e7 e4 -e3 -e1 -u e2",
    "e7 e3 e6 -e1 e5 -e4 -e2 -u",
};

const std::vector<std::string> twisted_octonion_rows = {
    "u a.e1 b.e2 c.e3 a*b.e4 b*c.e5 a*b*c.e6 a*c.e7",
    "a.e1 -u a*b.e4 a*c.e7 -b.e2 a*b*c.e6 -b*c.e5 -c.e3",
    "b.e2 -a*b.e4 -u b*c.e5 a.e1 -c.e3 a*c.e7 -a*b*c.e6",
    "c.e3 -a*c.e7 -b*c.e5 -u a*b*c.e6 b.e2 -a*b.e4 a.e1",
    "a*b.e4 b.e2 -a.e1 -a*b*c.e6 -u a*c.e7 c.e3 -b*c.e5",
    "b*c.e5 -a*b*c.e6 c.e3 -b.e2 -a*c.e7 -u a.e1 a*b.e4",
    "a*b*c.e6 b*c.e5 -a*c.e7 a*b.e4 -c.e3 -a.e1 -u b.e2",
    "a*c.e7 c.e3 a*b*c.e6 -a.e1 b*c.e5 -a*b.e4 -b.e2 -u",
};

LinMap oct_diag(const AlgebraSpec& a) {
    return map_of(a, {{{"u", "1"}},
                      {{"e1", "a"}},
                      {{"e2", "b"}},
                      {{"e3", "c"}},
                      {{"e4", "a*b"}},
                      {{"e5", "b*c"}},
                      {{"e6", "a*b*c"}},
                      {{"e7", "a*c"}}});
}

const std::vector<Parameter> abc = {{"a", false}, {"b", false}, {"c", false}};

CatalogEntry octonions() {
    CatalogEntry e;
    e.key = "octonions";
    e.algebra = table_algebra(e.key, basis8, abc, octonion_rows);
    e.algebra.set_unit(0);
    e.maps = {{"oct_diag", oct_diag(e.algebra)}};
    e.provenance = "octonions on the basis u, e1..e7 with unit u; oct_diag is the diagonal map diag(1, a, b, c, ab, bc, abc, ac)";
    e.expected = {{"left_hom_alternative", true, true, "octonions are alternative"},
                  {"right_hom_alternative", true, true, "octonions are alternative"}};
    return e;
}

CatalogEntry octonions_twist_diag() {
    CatalogEntry e;
    e.key = "octonions_twist_diag";
    e.algebra = table_algebra(e.key, basis8, abc, twisted_octonion_rows);
    e.maps = {{"oct_diag", oct_diag(e.algebra)}};
    e.algebra.set_alpha(e.maps.front().map);
    e.provenance = "octonions twisted by the diagonal map oct_diag";
    e.expected = {{"left_hom_alternative", true, false, "twist of an alternative algebra by an endomorphism"},
                  {"right_hom_alternative", true, false, "twist of an alternative algebra by an endomorphism"},
                  {"left_hom_alternative", false, true, "mu(u,mu(u,e1)) - mu(mu(u,u),e1) = (a^2-a) e1"}};
    return e;
}

CatalogEntry hom_jordan_3d() {
    CatalogEntry e;
    e.key = "hom_jordan_3d";
    e.algebra = make_algebra(e.key, basis3, {{"a", false}, {"b", false}},
                             {{"e1", "e1", {{"e1", "a"}}},
                              {"e1", "e2", {{"e2", "a"}}},
                              {"e2", "e1", {{"e2", "a"}}},
                              {"e1", "e3", {{"e3", "b"}}},
                              {"e3", "e1", {{"e3", "b"}}},
                              {"e2", "e2", {{"e2", "a"}}},
                              {"e2", "e3", {{"e3", "1/2*b"}}},
                              {"e3", "e2", {{"e3", "1/2*b"}}}});
    const LinMap alpha = map_of(e.algebra, {{{"e1", "a"}}, {{"e2", "a"}}, {{"e3", "b"}}});
    e.algebra.set_alpha(alpha);
    e.maps = {{"alpha", alpha}};
    e.provenance = "commutative 3-dimensional Hom-Jordan algebra obtained by symmetrizing hom_assoc_3d";
    e.expected = {{"commutative", true, false, "Hom-Jordan products are commutative"},
                  {"hom_jordan", true, false, "polarization of a Hom-associative algebra"},
                  {"hom_jordan", true, true, "stated to define a Jordan algebra"}};
    e.errata = {x1_label,
                {"mu(e3, e2)", "0", "1/2 b e3",
                 "the table must be commutative and equal the symmetrization of hom_assoc_3d, "
                 "whose (e2, e3) and (e3, e2) entries are b e3 and 0"}};
    return e;
}

std::vector<CatalogEntry> build() {
    return {hom_assoc_3d(),          alt4_mu1(),           alt4_mu2(),
            alt4_mu1_twist_alpha1(), alt4_mu2_twist_alpha1(), alt4_mu1_twist_alpha2(),
            alt4_mu2_twist_alpha2(), octonions(),          octonions_twist_diag(),
            hom_jordan_3d()};
}

}  // namespace

const LinMap& CatalogEntry::map(const std::string& name) const {
    for (const auto& m : maps)
        if (m.name == name) return m.map;
    throw Error(ErrorKind::UnknownKey, "entry '" + key + "' has no map '" + name + "'");
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = build();
    return all;
}

std::vector<std::string> list() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.key);
    return out;
}

const CatalogEntry& get(const std::string& key) {
    for (const auto& e : entries())
        if (e.key == key) return e;
    throw Error(ErrorKind::UnknownKey, "unknown catalog key '" + key + "'");
}

}  // namespace homalg::catalog
