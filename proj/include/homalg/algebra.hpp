#pragma once

// Finite-dimensional algebras given by structure constants, linear maps
// between them, and the constructive operations on Hom-algebras.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

class Vector {
   public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
    static Vector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    /// Index of the first nonzero coordinate.
    std::optional<std::size_t> first_nonzero() const noexcept;

    Vector operator-() const;
    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
    friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
    friend Vector operator*(const Scalar& s, const Vector& v);
    friend bool operator==(const Vector&, const Vector&) = default;

   private:
    std::vector<Scalar> coords_;
};

/// Square matrix acting on column vectors; column j is the image of b_j.
class LinMap {
   public:
    LinMap() = default;
    explicit LinMap(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    static LinMap identity(std::size_t dim);
    static LinMap diagonal(const std::vector<Scalar>& diag);
    static LinMap from_columns(const std::vector<Vector>& columns);

    std::size_t dim() const noexcept { return dim_; }
    const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Scalar& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    Vector column(std::size_t col) const;

    friend bool operator==(const LinMap&, const LinMap&) = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Scalar> entries_;  // row-major
};

/// Throws DimensionMismatch.
Vector apply_map(const LinMap& f, const Vector& v);
/// (f ∘ g)(v) = f(g(v)).
LinMap compose(const LinMap& f, const LinMap& g);
LinMap power(const LinMap& f, unsigned k);
/// Throws SingularMap when the determinant is the zero scalar.
LinMap invert(const LinMap& f);
Scalar determinant(const LinMap& f);

struct Parameter {
    std::string name;
    bool nonzero = false;
    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct StructureConstant {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar value;
};

/// An algebra (V, mu, alpha) over Q(params). Products of basis vectors
/// that were never set are zero.
class AlgebraSpec {
   public:
    AlgebraSpec() = default;
    AlgebraSpec(std::string name, std::vector<std::string> basis, std::vector<Parameter> params = {});

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis() const noexcept { return basis_; }
    /// Throws Validation for an unknown label.
    std::size_t index_of(const std::string& label) const;

    const std::vector<Parameter>& params() const noexcept { return params_; }
    void set_params(std::vector<Parameter> params) { params_ = std::move(params); }
    void mark_nonzero(const std::string& param);

    /// mu(b_i, b_j) as a coordinate vector.
    const Vector& product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, Vector value);
    void set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value);
    /// Nonzero structure constants in (i, j, k) order.
    std::vector<StructureConstant> structure_constants() const;
    bool has_product(std::size_t i, std::size_t j) const { return !table_[i * dim() + j].is_zero(); }

    const std::optional<LinMap>& alpha() const noexcept { return alpha_; }
    void set_alpha(std::optional<LinMap> alpha);

    const std::optional<std::size_t>& unit() const noexcept { return unit_; }
    void set_unit(std::optional<std::size_t> unit) { unit_ = unit; }

    Vector basis_vector(std::size_t i) const { return Vector::basis(dim(), i); }

    /// Same algebra with the twisting map replaced.
    AlgebraSpec with_alpha(const LinMap& alpha) const;
    /// Same algebra with alpha = id when no twisting map is present.
    AlgebraSpec with_default_alpha() const;

   private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Parameter> params_;
    std::vector<Vector> table_;  // dim*dim, row-major in (i, j)
    std::optional<LinMap> alpha_;
    std::optional<std::size_t> unit_;
};

enum class Verdict { holds, holds_under_assumptions, fails };
const char* to_string(Verdict v) noexcept;

struct Witness {
    /// Basis indices of the offending tuple (pair for bilinear checks, one
    /// index for unit/alpha checks); empty for generic failures.
    std::vector<std::size_t> basis_tuple;
    /// Coordinate index of the first nonzero residual entry.
    std::optional<std::size_t> coordinate;
    Vector residual;
    /// Concrete rational values for generic coordinates exhibiting the
    /// failure, keyed by identity variable.
    std::vector<std::pair<std::string, std::vector<Rational>>> counterexample;
    std::string note;
};

struct CheckReport {
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;

    bool ok() const noexcept { return verdict != Verdict::fails; }
};

/// Nonzero constraints implied by the denominators of the given scalars,
/// e.g. `a2 != 0`; sorted and deduplicated.
std::vector<std::string> denominator_assumptions(const std::vector<Scalar>& scalars);
std::vector<std::string> algebra_assumptions(const AlgebraSpec& a);
std::vector<std::string> map_assumptions(const LinMap& f);
std::vector<std::string> merge_assumptions(std::vector<std::string> lhs, const std::vector<std::string>& rhs);
/// holds -> holds_under_assumptions when assumptions are present.
CheckReport finish_report(CheckReport report);

/// Renders a vector as a linear combination of basis labels.
std::string format_vector(const AlgebraSpec& a, const Vector& v);
std::string format_vector(const std::vector<std::string>& labels, const Vector& v);

/// Bilinear extension of mu. Throws DimensionMismatch.
Vector mul(const AlgebraSpec& a, const Vector& u, const Vector& v);

CheckReport is_endomorphism(const AlgebraSpec& a, const LinMap& f);

enum class TwistMode { checked, force };
/// mu' = f ∘ mu, alpha' = f. Throws NotEndomorphism in checked mode.
AlgebraSpec yau_twist(const AlgebraSpec& a, const LinMap& f, TwistMode mode = TwistMode::checked);
/// mu~ = alpha^{-1} ∘ mu. Throws MissingTwistMap or SingularMap.
AlgebraSpec untwist(const AlgebraSpec& a);
AlgebraSpec opposite(const AlgebraSpec& a);
AlgebraSpec polarize(const AlgebraSpec& a);

/// f: a -> b respects products and, when both are present, twisting maps.
CheckReport is_morphism(const AlgebraSpec& a, const AlgebraSpec& b, const LinMap& f);
CheckReport is_subalgebra(const AlgebraSpec& a, const std::vector<Vector>& gens);
CheckReport check_unit(const AlgebraSpec& a, const Vector& u);

/// Row echelon basis of span(vectors), computed fraction-free with
/// first-nonzero pivoting.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors);

}  // namespace homalg
