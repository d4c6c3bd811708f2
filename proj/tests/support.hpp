#pragma once

// Shared helpers for the unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/parser.hpp"

namespace homalg::testing {

inline Scalar S(const std::string& text, const std::vector<std::string>& params = {"a", "b", "c"}) {
    return parse_scalar_expr(text, params);
}

inline Vector vec(const AlgebraSpec& a, const std::vector<std::pair<std::string, std::string>>& image) {
    std::vector<std::string> names;
    for (const auto& p : a.params()) names.push_back(p.name);
    Vector v(a.dim());
    for (const auto& [label, text] : image) v[a.index_of(label)] = parse_scalar_expr(text, names);
    return v;
}

inline Vector e(const AlgebraSpec& a, const std::string& label) { return a.basis_vector(a.index_of(label)); }

/// Small random polynomial in the given variables.
inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms = 3,
                                    unsigned max_exp = 2) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_exp);
    Polynomial p;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        for (const auto& v : vars) m = m * Monomial::variable(v, expo(rng));
        p += Polynomial(m, coef(rng));
    }
    return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937& rng, const std::vector<std::string>& vars) {
    Polynomial p;
    while (p.is_zero()) p = random_polynomial(rng, vars);
    return p;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace homalg::testing
