#include "homalg/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "homalg/error.hpp"

namespace homalg {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        std::ostringstream os;
        os << what << ": dimension " << got << " does not match " << expected;
        throw Error(ErrorKind::DimensionMismatch, os.str());
    }
}

std::string pair_label(const AlgebraSpec& a, std::size_t i, std::size_t j) {
    return "(" + a.basis()[i] + "," + a.basis()[j] + ")";
}

}  // namespace

// --------------------------------------------------------------------------
// Vector

Vector Vector::basis(std::size_t dim, std::size_t index) {
    Vector v(dim);
    v.coords_.at(index) = Scalar(1);
    return v;
}

bool Vector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<std::size_t> Vector::first_nonzero() const noexcept {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return i;
    return std::nullopt;
}

Vector Vector::operator-() const {
    Vector out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

Vector& Vector::operator+=(const Vector& rhs) {
    require_dim(dim(), rhs.dim(), "vector addition");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!rhs.coords_[i].is_zero()) coords_[i] += rhs.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    require_dim(dim(), rhs.dim(), "vector subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!rhs.coords_[i].is_zero()) coords_[i] -= rhs.coords_[i];
    return *this;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector out(v.dim());
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) out[i] = s * v[i];
    return out;
}

// --------------------------------------------------------------------------
// LinMap

LinMap LinMap::identity(std::size_t dim) {
    LinMap f(dim);
    for (std::size_t i = 0; i < dim; ++i) f.at(i, i) = Scalar(1);
    return f;
}

LinMap LinMap::diagonal(const std::vector<Scalar>& diag) {
    LinMap f(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) f.at(i, i) = diag[i];
    return f;
}

LinMap LinMap::from_columns(const std::vector<Vector>& columns) {
    LinMap f(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require_dim(columns.size(), columns[j].dim(), "LinMap column");
        for (std::size_t i = 0; i < columns.size(); ++i) f.at(i, j) = columns[j][i];
    }
    return f;
}

Vector LinMap::column(std::size_t col) const {
    Vector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = at(i, col);
    return v;
}

Vector apply_map(const LinMap& f, const Vector& v) {
    require_dim(f.dim(), v.dim(), "apply_map");
    Vector out(f.dim());
    for (std::size_t j = 0; j < f.dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < f.dim(); ++i) {
            const Scalar& fij = f.at(i, j);
            if (!fij.is_zero()) out[i] += fij * v[j];
        }
    }
    return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
    require_dim(f.dim(), g.dim(), "compose");
    LinMap out(f.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        const Vector col = apply_map(f, g.column(j));
        for (std::size_t i = 0; i < f.dim(); ++i) out.at(i, j) = col[i];
    }
    return out;
}

LinMap power(const LinMap& f, unsigned k) {
    LinMap out = LinMap::identity(f.dim());
    for (unsigned i = 0; i < k; ++i) out = compose(f, out);
    return out;
}

namespace {

// Gauss-Jordan on [f | id]; returns the inverse and accumulates the
// determinant. Throws SingularMap.
LinMap gauss_jordan(const LinMap& f, Scalar* det_out) {
    const std::size_t n = f.dim();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = f.at(i, j);
        m[i][n + i] = Scalar(1);
    }
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) {
            if (det_out) {
                *det_out = Scalar(0);
                return LinMap(n);
            }
            throw Error(ErrorKind::SingularMap, "linear map is singular (determinant is zero)");
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        const Scalar p = m[col][col];
        det = det * p;
        for (std::size_t j = col; j < 2 * n; ++j)
            if (!m[col][j].is_zero()) m[col][j] = m[col][j] / p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col];
            for (std::size_t j = col; j < 2 * n; ++j)
                if (!m[col][j].is_zero()) m[r][j] -= factor * m[col][j];
        }
    }
    if (det_out) *det_out = det;
    LinMap inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = m[i][n + j];
    return inv;
}

}  // namespace

LinMap invert(const LinMap& f) { return gauss_jordan(f, nullptr); }

Scalar determinant(const LinMap& f) {
    Scalar det;
    gauss_jordan(f, &det);
    return det;
}

// --------------------------------------------------------------------------
// AlgebraSpec

AlgebraSpec::AlgebraSpec(std::string name, std::vector<std::string> basis, std::vector<Parameter> params)
    : name_(std::move(name)), basis_(std::move(basis)), params_(std::move(params)) {
    if (basis_.empty()) throw Error(ErrorKind::Validation, "algebra dimension must be positive");
    table_.assign(dim() * dim(), Vector(dim()));
}

std::size_t AlgebraSpec::index_of(const std::string& label) const {
    auto it = std::find(basis_.begin(), basis_.end(), label);
    if (it == basis_.end()) throw Error(ErrorKind::Validation, "unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - basis_.begin());
}

void AlgebraSpec::mark_nonzero(const std::string& param) {
    for (auto& p : params_)
        if (p.name == param) p.nonzero = true;
}

const Vector& AlgebraSpec::product(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

void AlgebraSpec::set_product(std::size_t i, std::size_t j, Vector value) {
    require_dim(dim(), value.dim(), "set_product");
    table_.at(i * dim() + j) = std::move(value);
}

void AlgebraSpec::set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
    table_.at(i * dim() + j)[k] = std::move(value);
}

std::vector<StructureConstant> AlgebraSpec::structure_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) {
                const Scalar& c = product(i, j)[k];
                if (!c.is_zero()) out.push_back({i, j, k, c});
            }
    return out;
}

void AlgebraSpec::set_alpha(std::optional<LinMap> alpha) {
    if (alpha) require_dim(dim(), alpha->dim(), "twisting map");
    alpha_ = std::move(alpha);
}

AlgebraSpec AlgebraSpec::with_alpha(const LinMap& alpha) const {
    AlgebraSpec out = *this;
    out.set_alpha(alpha);
    return out;
}

AlgebraSpec AlgebraSpec::with_default_alpha() const {
    if (alpha_) return *this;
    return with_alpha(LinMap::identity(dim()));
}

// --------------------------------------------------------------------------
// reports

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::holds_under_assumptions: return "holds-under-assumptions";
        case Verdict::fails: return "fails";
    }
    return "?";
}

std::vector<std::string> denominator_assumptions(const std::vector<Scalar>& scalars) {
    std::set<std::string, VariableLess> single;
    std::set<std::string> composite;
    for (const auto& s : scalars) {
        if (s.den().is_constant()) continue;
        if (s.den().is_monomial()) {
            for (const auto& [name, e] : s.den().leading_monomial().powers()) single.insert(name);
        } else {
            composite.insert("(" + s.den().to_string() + ") != 0");
        }
    }
    std::vector<std::string> out;
    for (const auto& v : single) out.push_back(v + " != 0");
    out.insert(out.end(), composite.begin(), composite.end());
    return out;
}

std::vector<std::string> algebra_assumptions(const AlgebraSpec& a) {
    std::vector<Scalar> scalars;
    for (const auto& c : a.structure_constants()) scalars.push_back(c.value);
    auto out = denominator_assumptions(scalars);
    if (a.alpha()) out = merge_assumptions(out, map_assumptions(*a.alpha()));
    return out;
}

std::vector<std::string> map_assumptions(const LinMap& f) {
    std::vector<Scalar> scalars;
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < f.dim(); ++j)
            if (!f.at(i, j).is_polynomial()) scalars.push_back(f.at(i, j));
    return denominator_assumptions(scalars);
}

std::vector<std::string> merge_assumptions(std::vector<std::string> lhs, const std::vector<std::string>& rhs) {
    for (const auto& r : rhs)
        if (std::find(lhs.begin(), lhs.end(), r) == lhs.end()) lhs.push_back(r);
    std::sort(lhs.begin(), lhs.end(), [](const std::string& x, const std::string& y) { return variable_less(x, y); });
    return lhs;
}

CheckReport finish_report(CheckReport report) {
    if (report.verdict == Verdict::holds && !report.assumptions.empty()) report.verdict = Verdict::holds_under_assumptions;
    return report;
}

std::string format_vector(const std::vector<std::string>& labels, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        std::string coefficient = v[i].to_string();
        bool negative = false;
        const bool simple = coefficient.find(' ') == std::string::npos;
        if (simple && coefficient[0] == '-') {
            negative = true;
            coefficient.erase(0, 1);
        }
        std::string term;
        if (coefficient == "1") {
            term = labels[i];
        } else if (simple) {
            term = coefficient + "*" + labels[i];
        } else {
            term = "(" + coefficient + ")*" + labels[i];
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

std::string format_vector(const AlgebraSpec& a, const Vector& v) { return format_vector(a.basis(), v); }

// --------------------------------------------------------------------------
// operations

Vector mul(const AlgebraSpec& a, const Vector& u, const Vector& v) {
    require_dim(a.dim(), u.dim(), "mul (left)");
    require_dim(a.dim(), v.dim(), "mul (right)");
    const std::size_t n = a.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero() || !a.has_product(i, j)) continue;
            const Scalar coefficient = u[i] * v[j];
            const Vector& p = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!p[k].is_zero()) out[k] += coefficient * p[k];
        }
    }
    return out;
}

CheckReport is_endomorphism(const AlgebraSpec& a, const LinMap& f) {
    require_dim(a.dim(), f.dim(), "is_endomorphism");
    CheckReport report;
    report.assumptions = merge_assumptions(algebra_assumptions(a), map_assumptions(f));
    std::vector<Vector> images;
    for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(f.column(i));
    for (std::size_t i = 0; i < a.dim() && report.ok(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector residual = apply_map(f, a.product(i, j)) - mul(a, images[i], images[j]);
            if (!residual.is_zero()) {
                report.verdict = Verdict::fails;
                Witness w;
                w.basis_tuple = {i, j};
                w.coordinate = residual.first_nonzero();
                w.residual = std::move(residual);
                w.note = "f(mu" + pair_label(a, i, j) + ") - mu(f, f) = " + format_vector(a, w.residual);
                report.witness = std::move(w);
                break;
            }
        }
    }
    return finish_report(std::move(report));
}

AlgebraSpec yau_twist(const AlgebraSpec& a, const LinMap& f, TwistMode mode) {
    require_dim(a.dim(), f.dim(), "yau_twist");
    if (mode == TwistMode::checked) {
        const CheckReport endo = is_endomorphism(a, f);
        if (!endo.ok()) {
            throw Error(ErrorKind::NotEndomorphism,
                        "map is not an endomorphism of '" + a.name() + "': " + endo.witness->note);
        }
    }
    AlgebraSpec out = a;
    out.set_name(a.name() + "_twist");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.has_product(i, j)) out.set_product(i, j, apply_map(f, a.product(i, j)));
    out.set_alpha(f);
    return out;
}

AlgebraSpec untwist(const AlgebraSpec& a) {
    if (!a.alpha()) throw Error(ErrorKind::MissingTwistMap, "algebra '" + a.name() + "' has no twisting map");
    const Scalar det = determinant(*a.alpha());
    if (det.is_zero()) throw Error(ErrorKind::SingularMap, "twisting map of '" + a.name() + "' is not invertible");
    const LinMap inverse = invert(*a.alpha());
    AlgebraSpec out = a;
    const std::string suffix = "_twist";
    std::string name = a.name();
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        name.erase(name.size() - suffix.size());
    } else {
        name += "_untwist";
    }
    out.set_name(name);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.has_product(i, j)) out.set_product(i, j, apply_map(inverse, a.product(i, j)));
    out.set_alpha(std::nullopt);
    // det != 0 is now an assumption of the result; record monomial factors.
    if (det.num().is_monomial())
        for (const auto& [name_, e] : det.num().leading_monomial().powers()) out.mark_nonzero(name_);
    return out;
}

AlgebraSpec opposite(const AlgebraSpec& a) {
    AlgebraSpec out = a;
    out.set_name(a.name() + "_op");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, a.product(j, i));
    return out;
}

AlgebraSpec polarize(const AlgebraSpec& a) {
    AlgebraSpec out = a;
    out.set_name(a.name() + "_polarized");
    const Scalar half = Scalar(Rational(1, 2));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, half * (a.product(i, j) + a.product(j, i)));
    return out;
}

CheckReport is_morphism(const AlgebraSpec& a, const AlgebraSpec& b, const LinMap& f) {
    require_dim(a.dim(), b.dim(), "is_morphism");
    require_dim(a.dim(), f.dim(), "is_morphism");
    CheckReport report;
    report.assumptions =
        merge_assumptions(merge_assumptions(algebra_assumptions(a), algebra_assumptions(b)), map_assumptions(f));
    std::vector<Vector> images;
    for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(f.column(i));
    for (std::size_t i = 0; i < a.dim() && report.ok(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector residual = apply_map(f, a.product(i, j)) - mul(b, images[i], images[j]);
            if (!residual.is_zero()) {
                report.verdict = Verdict::fails;
                Witness w;
                w.basis_tuple = {i, j};
                w.coordinate = residual.first_nonzero();
                w.residual = std::move(residual);
                w.note = "f(mu_A" + pair_label(a, i, j) + ") - mu_B(f, f) = " + format_vector(b, w.residual);
                report.witness = std::move(w);
                break;
            }
        }
    }
    if (report.ok() && a.alpha() && b.alpha()) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector residual = apply_map(f, a.alpha()->column(j)) - apply_map(*b.alpha(), images[j]);
            if (!residual.is_zero()) {
                report.verdict = Verdict::fails;
                Witness w;
                w.basis_tuple = {j};
                w.coordinate = residual.first_nonzero();
                w.residual = std::move(residual);
                w.note = "f(alpha_A(" + a.basis()[j] + ")) - alpha_B(f(" + a.basis()[j] + ")) = " +
                         format_vector(b, w.residual);
                report.witness = std::move(w);
                break;
            }
        }
    } else if (report.ok()) {
        report.notes.push_back("twisting maps not compared (absent on at least one side)");
    }
    return finish_report(std::move(report));
}

namespace {

// Echelon rows kept fully reduced: each row vanishes at every other row's pivot.
struct Echelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    std::vector<Scalar> pivot_values;

    Vector reduce(Vector v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Scalar& c = v[pivots[r]];
            if (c.is_zero()) continue;
            v = pivot_values[r] * v - c * rows[r];
        }
        return v;
    }

    bool insert(const Vector& v) {
        Vector reduced = reduce(v);
        const auto p = reduced.first_nonzero();
        if (!p) return false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Scalar c = rows[r][*p];
            if (c.is_zero()) continue;
            rows[r] = reduced[*p] * rows[r] - c * reduced;
            pivot_values[r] = rows[r][pivots[r]];
        }
        rows.push_back(reduced);
        pivots.push_back(*p);
        pivot_values.push_back(reduced[*p]);
        return true;
    }
};

}  // namespace

std::vector<Vector> span_basis(const std::vector<Vector>& vectors) {
    Echelon e;
    for (const auto& v : vectors) e.insert(v);
    return e.rows;
}

CheckReport is_subalgebra(const AlgebraSpec& a, const std::vector<Vector>& gens) {
    for (const auto& g : gens) require_dim(a.dim(), g.dim(), "is_subalgebra");
    Echelon e;
    for (const auto& g : gens) e.insert(g);
    CheckReport report;
    report.assumptions = merge_assumptions(algebra_assumptions(a), denominator_assumptions(e.pivot_values));
    for (const auto& p : e.pivot_values)
        if (!p.is_constant()) report.assumptions = merge_assumptions(report.assumptions, {"(" + p.to_string() + ") != 0"});

    auto fail = [&](std::vector<std::size_t> tuple, Vector image, std::string note) {
        report.verdict = Verdict::fails;
        Witness w;
        w.basis_tuple = std::move(tuple);
        w.coordinate = image.first_nonzero();
        w.residual = std::move(image);
        w.note = std::move(note);
        report.witness = std::move(w);
    };

    const auto& rows = e.rows;
    for (std::size_t s = 0; s < rows.size() && report.ok(); ++s) {
        for (std::size_t t = 0; t < rows.size(); ++t) {
            Vector product = mul(a, rows[s], rows[t]);
            if (!e.reduce(product).is_zero()) {
                fail({s, t}, product,
                     "(" + format_vector(a, rows[s]) + ")*(" + format_vector(a, rows[t]) +
                         ") = " + format_vector(a, product) + " lies outside the span");
                break;
            }
        }
    }
    if (report.ok() && a.alpha()) {
        for (std::size_t s = 0; s < rows.size(); ++s) {
            Vector image = apply_map(*a.alpha(), rows[s]);
            if (!e.reduce(image).is_zero()) {
                fail({s}, image,
                     "alpha(" + format_vector(a, rows[s]) + ") = " + format_vector(a, image) +
                         " lies outside the span");
                break;
            }
        }
    }
    return finish_report(std::move(report));
}

CheckReport check_unit(const AlgebraSpec& a, const Vector& u) {
    require_dim(a.dim(), u.dim(), "check_unit");
    CheckReport report;
    report.assumptions = algebra_assumptions(a);
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vector bj = a.basis_vector(j);
        for (int side = 0; side < 2; ++side) {
            Vector residual = (side == 0 ? mul(a, u, bj) : mul(a, bj, u)) - bj;
            if (!residual.is_zero()) {
                report.verdict = Verdict::fails;
                Witness w;
                w.basis_tuple = {j};
                w.coordinate = residual.first_nonzero();
                w.residual = std::move(residual);
                w.note = (side == 0 ? "u*" + a.basis()[j] : a.basis()[j] + "*u") + " - " + a.basis()[j] + " = " +
                         format_vector(a, w.residual);
                report.witness = std::move(w);
                return finish_report(std::move(report));
            }
        }
    }
    return finish_report(std::move(report));
}

}  // namespace homalg
