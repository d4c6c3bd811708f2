#pragma once

// Exact arithmetic in Q(p1, ..., pm): multivariate polynomials with
// arbitrary-precision rational coefficients and their reduced quotients.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homalg {

using Rational = mpq_class;

/// Parameter assignments used by specialization and substitution.
using Bindings = std::map<std::string, Rational>;

/// Total order on variable names: digit runs compare numerically, so
/// `a2 < a10` and `x[e2] < x[e10]`.
bool variable_less(std::string_view lhs, std::string_view rhs) noexcept;

struct VariableLess {
    bool operator()(const std::string& lhs, const std::string& rhs) const noexcept {
        return variable_less(lhs, rhs);
    }
};

using VariableSet = std::set<std::string, VariableLess>;

class Monomial {
   public:
    using Power = std::pair<std::string, unsigned>;

    Monomial() = default;
    static Monomial variable(std::string name, unsigned exponent = 1);

    bool is_one() const noexcept { return powers_.empty(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned exponent(std::string_view var) const noexcept;
    const std::vector<Power>& powers() const noexcept { return powers_; }

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& other) const noexcept;
    /// Requires `divisor.divides(*this)`.
    Monomial quotient(const Monomial& divisor) const;
    static Monomial gcd(const Monomial& lhs, const Monomial& rhs);

    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    std::vector<Power> powers_;  // sorted by variable_less, exponents > 0
    unsigned degree_ = 0;
};

/// Graded-lexicographic comparison; returns <0, 0, >0.
int compare_grlex(const Monomial& lhs, const Monomial& rhs) noexcept;

struct GrlexDescending {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept {
        return compare_grlex(lhs, rhs) > 0;
    }
};

class Polynomial {
   public:
    using Terms = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(long value);  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)
    Polynomial(const Monomial& m, const Rational& coefficient);
    static Polynomial variable(std::string name);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Constant term value; meaningful when is_constant().
    Rational constant_value() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    unsigned total_degree() const noexcept;

    VariableSet variables() const;
    unsigned degree_in(std::string_view var) const noexcept;
    /// Coefficient of var^k, a polynomial free of var.
    Polynomial coefficient_in(std::string_view var, unsigned k) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.terms_ == rhs.terms_; }

    /// Full evaluation; throws UnboundParameter for a missing variable.
    Rational evaluate(const Bindings& bindings) const;
    /// Partial evaluation: bound variables are replaced, others stay symbolic.
    Polynomial substitute(const Bindings& bindings) const;

    /// Divides by the leading coefficient (zero stays zero).
    Polynomial monic() const;

    std::string to_string() const;

   private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;  // no zero coefficients
};

/// Exact quotient; throws std::logic_error when `divisor` does not divide.
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& lhs, const Polynomial& rhs);

/// Element of Q(params) kept as num/den with gcd(num, den) = 1 and den
/// monic under graded-lex order, so equality is structural.
class Scalar {
   public:
    Scalar() : den_(1) {}
    Scalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(Polynomial value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

    /// Throws ZeroDenominator when den is the zero polynomial.
    static Scalar normalize(Polynomial num, Polynomial den);
    static Scalar parameter(std::string name) { return Scalar(Polynomial::variable(std::move(name))); }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    VariableSet variables() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& lhs, const Scalar& rhs);
    friend Scalar operator-(const Scalar& lhs, const Scalar& rhs);
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
    /// Throws DivisionByZero.
    friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    Scalar pow(unsigned exponent) const;

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }

    /// Throws UnboundParameter or SpecializedDenominatorZero.
    Rational specialize(const Bindings& bindings) const;
    /// Partial specialization. Throws SpecializedDenominatorZero if the
    /// denominator collapses to zero.
    Scalar substitute(const Bindings& bindings) const;

    std::string to_string() const;

   private:
    Polynomial num_;
    Polynomial den_;
};

enum class ArithKind { add, sub, mul, div };
Scalar arith(ArithKind kind, const Scalar& lhs, const Scalar& rhs);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Renders a rational the way the surface syntax reads it: `3`, `-1/2`.
std::string rational_to_string(const Rational& q);

}  // namespace homalg
