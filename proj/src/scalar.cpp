#include "homalg/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "homalg/error.hpp"

namespace homalg {

// --------------------------------------------------------------------------
// variable order

bool variable_less(std::string_view lhs, std::string_view rhs) noexcept {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        const bool ld = std::isdigit(static_cast<unsigned char>(lhs[i])) != 0;
        const bool rd = std::isdigit(static_cast<unsigned char>(rhs[j])) != 0;
        if (ld && rd) {
            std::size_t ie = i;
            std::size_t je = j;
            while (ie < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[ie]))) ++ie;
            while (je < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[je]))) ++je;
            std::size_t is = i;
            std::size_t js = j;
            while (is + 1 < ie && lhs[is] == '0') ++is;
            while (js + 1 < je && rhs[js] == '0') ++js;
            if (ie - is != je - js) return ie - is < je - js;
            const auto cmp = lhs.substr(is, ie - is).compare(rhs.substr(js, je - js));
            if (cmp != 0) return cmp < 0;
            if (ie - i != je - j) return ie - i < je - j;
            i = ie;
            j = je;
            continue;
        }
        if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
        ++i;
        ++j;
    }
    return lhs.size() - i < rhs.size() - j;
}

// --------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::string name, unsigned exponent) {
    Monomial m;
    if (exponent > 0) {
        m.powers_.emplace_back(std::move(name), exponent);
        m.degree_ = exponent;
    }
    return m;
}

unsigned Monomial::exponent(std::string_view var) const noexcept {
    for (const auto& [name, e] : powers_)
        if (name == var) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (rhs.is_one()) return *this;
    if (is_one()) return rhs;
    Monomial out;
    out.powers_.reserve(powers_.size() + rhs.powers_.size());
    auto a = powers_.begin();
    auto b = rhs.powers_.begin();
    while (a != powers_.end() && b != rhs.powers_.end()) {
        if (a->first == b->first) {
            out.powers_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (variable_less(a->first, b->first)) {
            out.powers_.push_back(*a++);
        } else {
            out.powers_.push_back(*b++);
        }
    }
    out.powers_.insert(out.powers_.end(), a, powers_.end());
    out.powers_.insert(out.powers_.end(), b, rhs.powers_.end());
    out.degree_ = degree_ + rhs.degree_;
    return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (const auto& [name, e] : powers_)
        if (other.exponent(name) < e) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial out;
    for (const auto& [name, e] : powers_) {
        const unsigned d = divisor.exponent(name);
        if (d > e) throw std::logic_error("Monomial::quotient: not divisible");
        if (e > d) {
            out.powers_.emplace_back(name, e - d);
            out.degree_ += e - d;
        }
    }
    if (out.degree_ + divisor.degree_ != degree_) throw std::logic_error("Monomial::quotient: not divisible");
    return out;
}

Monomial Monomial::gcd(const Monomial& lhs, const Monomial& rhs) {
    Monomial out;
    for (const auto& [name, e] : lhs.powers_) {
        const unsigned m = std::min(e, rhs.exponent(name));
        if (m > 0) {
            out.powers_.emplace_back(name, m);
            out.degree_ += m;
        }
    }
    return out;
}

int compare_grlex(const Monomial& lhs, const Monomial& rhs) noexcept {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree() ? -1 : 1;
    const auto& a = lhs.powers();
    const auto& b = rhs.powers();
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) {
            // The side whose next variable comes first in the order has a
            // positive exponent where the other has zero.
            return variable_less(a[i].first, b[i].first) ? 1 : -1;
        }
        if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
    }
    if (i < a.size()) return 1;
    if (i < b.size()) return -1;
    return 0;
}

// --------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long value) {
    if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Polynomial::Polynomial(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
    if (coefficient != 0) terms_.emplace(m, coefficient);
}

Polynomial Polynomial::variable(std::string name) { return Polynomial(Monomial::variable(std::move(name)), 1); }

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

VariableSet Polynomial::variables() const {
    VariableSet out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.powers()) out.insert(name);
    return out;
}

unsigned Polynomial::degree_in(std::string_view var) const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

Polynomial Polynomial::coefficient_in(std::string_view var, unsigned k) const {
    Polynomial out;
    const Monomial vk = Monomial::variable(std::string(var), k);
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) == k) out.terms_.emplace(m.quotient(vk), c);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= rhs;
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Rational Polynomial::evaluate(const Bindings& bindings) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [name, e] : m.powers()) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw Error(ErrorKind::UnboundParameter, "unbound parameter '" + name + "'");
            for (unsigned k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::substitute(const Bindings& bindings) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Rational coefficient = c;
        Monomial rest;
        for (const auto& [name, e] : m.powers()) {
            auto it = bindings.find(name);
            if (it == bindings.end()) {
                rest = rest * Monomial::variable(name, e);
            } else {
                for (unsigned k = 0; k < e; ++k) coefficient *= it->second;
            }
        }
        out.add_term(rest, coefficient);
    }
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rational lc = leading_coefficient();
    if (lc == 1) return *this;
    Polynomial out = *this;
    out *= Rational(1) / lc;
    return out;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (const auto& [name, e] : m.powers()) {
        if (!s.empty()) s += '*';
        s += name;
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += rational_to_string(magnitude);
        } else {
            if (magnitude != 1) s += rational_to_string(magnitude) + '*';
            s += monomial_to_string(m);
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// --------------------------------------------------------------------------
// division and gcd

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::logic_error("divide_exact by zero");
    if (divisor.is_constant()) return dividend * (Rational(1) / divisor.constant_value());
    Polynomial remainder = dividend;
    Polynomial quotient;
    const Monomial& lm = divisor.leading_monomial();
    const Rational& lc = divisor.leading_coefficient();
    while (!remainder.is_zero()) {
        const Monomial& rm = remainder.leading_monomial();
        if (!lm.divides(rm)) throw std::logic_error("divide_exact: not divisible");
        const Polynomial step(rm.quotient(lm), remainder.leading_coefficient() / lc);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

namespace {

Polynomial content_in(const Polynomial& p, const std::string& var);

Polynomial monomial_gcd(const Polynomial& p, const Monomial& m) {
    Monomial g = m;
    for (const auto& [term, c] : p.terms()) {
        g = Monomial::gcd(g, term);
        if (g.is_one()) break;
    }
    return Polynomial(g, 1);
}

// Pseudo-remainder of a by b with respect to var (deg_var b >= 1).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const std::string& var) {
    const unsigned db = b.degree_in(var);
    const Polynomial lb = b.coefficient_in(var, db);
    while (!a.is_zero()) {
        const unsigned da = a.degree_in(var);
        if (da < db) break;
        const Polynomial la = a.coefficient_in(var, da);
        a = lb * a - la * Polynomial(Monomial::variable(var, da - db), 1) * b;
    }
    return a;
}

Polynomial primitive_part(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return p;
    return divide_exact(p, content_in(p, var)).monic();
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
    const unsigned d = p.degree_in(var);
    Polynomial g;
    for (unsigned k = 0; k <= d; ++k) {
        Polynomial c = p.coefficient_in(var, k);
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// True when a and b (primitive in var) are certainly coprime: at an integer
// point for the other variables where neither leading coefficient in var
// vanishes, the univariate images have a constant gcd.
bool coprime_image(const Polynomial& a, const Polynomial& b, const std::string& var, const VariableSet& vars) {
    static constexpr std::array<int, 8> kValues = {2, 3, 5, 7, 11, 13, 17, 19};
    const Polynomial la = a.coefficient_in(var, a.degree_in(var));
    const Polynomial lb = b.coefficient_in(var, b.degree_in(var));
    for (std::size_t shift = 0; shift < 4; ++shift) {
        Bindings at;
        std::size_t k = shift;
        for (const auto& v : vars)
            if (v != var) at[v] = kValues[k++ % kValues.size()];
        if (la.evaluate(at) == 0 || lb.evaluate(at) == 0) continue;
        return gcd(a.substitute(at), b.substitute(at)).is_constant();
    }
    return false;
}

}  // namespace

Polynomial gcd(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero()) return rhs.monic();
    if (rhs.is_zero()) return lhs.monic();
    if (lhs.is_constant() || rhs.is_constant()) return Polynomial(1);
    if (lhs.is_monomial()) return monomial_gcd(rhs, lhs.leading_monomial());
    if (rhs.is_monomial()) return monomial_gcd(lhs, rhs.leading_monomial());
    if (lhs == rhs) return lhs.monic();

    const VariableSet vl = lhs.variables();
    const VariableSet vr = rhs.variables();
    // Pick a variable the two share; if none, only a v-free content can be common.
    for (const auto& v : vl) {
        if (!vr.count(v)) return gcd(content_in(lhs, v), rhs);
    }
    for (const auto& v : vr) {
        if (!vl.count(v)) return gcd(lhs, content_in(rhs, v));
    }
    std::string var = *vl.begin();
    for (const auto& v : vl)
        if (std::max(lhs.degree_in(v), rhs.degree_in(v)) < std::max(lhs.degree_in(var), rhs.degree_in(var))) var = v;

    const Polynomial cl = content_in(lhs, var);
    const Polynomial cr = content_in(rhs, var);
    const Polynomial c = gcd(cl, cr);
    Polynomial a = divide_exact(lhs, cl);
    Polynomial b = divide_exact(rhs, cr);
    if (vl.size() > 1 && coprime_image(a, b, var, vl)) return c.monic();
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(var) > 0) {
        Polynomial r = pseudo_remainder(a, b, var);
        a = std::move(b);
        b = primitive_part(r, var);
    }
    Polynomial g = b.is_zero() ? primitive_part(a, var) : Polynomial(1);
    return (c * g).monic();
}

// --------------------------------------------------------------------------
// Scalar

Scalar Scalar::normalize(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
    Scalar out;
    if (num.is_zero()) return out;
    if (den.is_constant()) {
        out.num_ = std::move(num) * (Rational(1) / den.constant_value());
        return out;
    }
    const Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
        num = divide_exact(num, g);
        den = divide_exact(den, g);
    }
    const Rational lc = den.leading_coefficient();
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        num *= inv;
        den *= inv;
    }
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
}

bool Scalar::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }

VariableSet Scalar::variables() const {
    VariableSet out = num_.variables();
    const VariableSet d = den_.variables();
    out.insert(d.begin(), d.end());
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar operator+(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    if (lhs.is_polynomial() && rhs.is_polynomial()) return Scalar(lhs.num_ + rhs.num_);
    if (lhs.den_ == rhs.den_) return Scalar::normalize(lhs.num_ + rhs.num_, lhs.den_);
    const Polynomial g = gcd(lhs.den_, rhs.den_);
    const Polynomial lq = divide_exact(lhs.den_, g);
    const Polynomial rq = divide_exact(rhs.den_, g);
    return Scalar::normalize(lhs.num_ * rq + rhs.num_ * lq, lq * rhs.den_);
}

Scalar operator-(const Scalar& lhs, const Scalar& rhs) { return lhs + (-rhs); }

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Scalar();
    if (lhs.is_polynomial() && rhs.is_polynomial()) return Scalar(lhs.num_ * rhs.num_);
    // Cross-cancel; operands are reduced so the result is reduced too.
    const Polynomial g1 = gcd(lhs.num_, rhs.den_);
    const Polynomial g2 = gcd(rhs.num_, lhs.den_);
    Polynomial num = divide_exact(lhs.num_, g1) * divide_exact(rhs.num_, g2);
    Polynomial den = divide_exact(lhs.den_, g2) * divide_exact(rhs.den_, g1);
    Scalar out;
    const Rational lc = den.leading_coefficient();
    if (lc != 1) {
        num *= Rational(1) / lc;
        den *= Rational(1) / lc;
    }
    if (den.is_constant()) {
        out.num_ = std::move(num);
        return out;
    }
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
    Scalar inverse;
    inverse.num_ = rhs.den_;
    inverse.den_ = rhs.num_;
    const Rational lc = inverse.den_.leading_coefficient();
    if (lc != 1) {
        inverse.num_ *= Rational(1) / lc;
        inverse.den_ *= Rational(1) / lc;
    }
    return lhs * inverse;
}

Scalar Scalar::pow(unsigned exponent) const {
    Scalar out(1);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1U) out = out * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return out;
}

Rational Scalar::specialize(const Bindings& bindings) const {
    const Rational d = den_.evaluate(bindings);
    const Rational n = num_.evaluate(bindings);
    if (d == 0)
        throw Error(ErrorKind::SpecializedDenominatorZero, "denominator " + den_.to_string() + " vanishes at the given point");
    return n / d;
}

Scalar Scalar::substitute(const Bindings& bindings) const {
    Polynomial d = den_.substitute(bindings);
    if (d.is_zero())
        throw Error(ErrorKind::SpecializedDenominatorZero, "denominator " + den_.to_string() + " vanishes at the given point");
    return normalize(num_.substitute(bindings), std::move(d));
}

std::string Scalar::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.terms().size() > 1 || (num_.is_monomial() && num_.leading_coefficient() < 0)) n = "(" + n + ")";
    if (den_.terms().size() > 1 || den_.leading_coefficient() != 1 || den_.leading_monomial().degree() > 1 ||
        den_.leading_monomial().powers().size() > 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar arith(ArithKind kind, const Scalar& lhs, const Scalar& rhs) {
    switch (kind) {
        case ArithKind::add:
            return lhs + rhs;
        case ArithKind::sub:
            return lhs - rhs;
        case ArithKind::mul:
            return lhs * rhs;
        case ArithKind::div:
            return lhs / rhs;
    }
    throw std::logic_error("unknown ArithKind");
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SpecializedDenominatorZero: return "SpecializedDenominatorZero";
        case ErrorKind::UnboundParameter: return "UnboundParameter";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::NotEndomorphism: return "NotEndomorphism";
        case ErrorKind::MissingTwistMap: return "MissingTwistMap";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::NotMultilinear: return "NotMultilinear";
        case ErrorKind::UnknownIdentity: return "UnknownIdentity";
        case ErrorKind::UnknownKey: return "UnknownKey";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::UndeclaredParameter: return "UndeclaredParameter";
        case ErrorKind::Arity: return "ArityError";
        case ErrorKind::Validation: return "ValidationError";
        case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

}  // namespace homalg
