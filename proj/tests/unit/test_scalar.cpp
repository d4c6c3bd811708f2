#include <doctest.h>

#include <functional>

#include "homalg/error.hpp"
#include "homalg/scalar.hpp"
#include "support.hpp"

using namespace homalg;
using homalg::testing::S;

namespace {

Polynomial P(const std::string& name) { return Polynomial::variable(name); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("variable order compares digit runs numerically") {
    CHECK(variable_less("a2", "a10"));
    CHECK_FALSE(variable_less("a10", "a2"));
    CHECK(variable_less("a", "b"));
    CHECK(variable_less("x[e2]", "x[e10]"));
    CHECK_FALSE(variable_less("a1", "a1"));
}

TEST_CASE("normalize cancels common factors") {
    const Polynomial a = P("a");
    const Polynomial b = P("b");
    const Scalar s = Scalar::normalize(a * a * b, a * b);
    CHECK(s == Scalar(a));
    CHECK(s.den() == Polynomial(1));

    const Scalar t = Scalar::normalize(a - b, 1);
    CHECK(t.num() == a - b);
    CHECK(t.is_polynomial());

    const Scalar q = Scalar::normalize(P("a4") * P("a3"), P("a2"));
    CHECK(q.num() == P("a3") * P("a4"));
    CHECK(q.den() == P("a2"));

    const Scalar d = Scalar::normalize(a * a - b * b, Polynomial(2) * (a - b));
    CHECK(d == S("(a + b)/2"));

    CHECK(kind_of([&] { Scalar::normalize(a, Polynomial()); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("denominator is monic and coprime to the numerator") {
    const Scalar s = S("(2*a + 2)/(4*a*b - 6*b)");
    CHECK(s.den().leading_coefficient() == 1);
    CHECK(gcd(s.num(), s.den()) == Polynomial(1));
    CHECK(s == S("(a + 1)/(2*a*b - 3*b)"));
}

TEST_CASE("arithmetic") {
    const Scalar a = Scalar::parameter("a");
    CHECK(arith(ArithKind::add, a, -a).is_zero());
    const Scalar cube = arith(ArithKind::mul, a.pow(2), a);
    CHECK(cube == a.pow(3));
    CHECK(cube.specialize({{"a", 2}}) == 8);
    CHECK(arith(ArithKind::sub, a.pow(2), a).to_string() == "a^2 - a");
    CHECK(arith(ArithKind::div, a, a).is_one());
    CHECK(kind_of([&] { arith(ArithKind::div, a, Scalar()); }) == ErrorKind::DivisionByZero);
    CHECK(S("1/a + 1/b") == S("(a + b)/(a*b)"));
    CHECK(S("a/(a - b) - b/(a - b)").is_one());
}

TEST_CASE("specialize") {
    const Scalar defect = S("(a - b)*b");
    CHECK(defect.specialize({{"a", 1}, {"b", 1}}) == 0);
    CHECK(defect.specialize({{"a", 2}, {"b", 1}}) == 1);

    const std::vector<std::string> ps = {"a1", "a2", "a3", "a4", "a5"};
    const Scalar q = parse_scalar_expr("a4*a3/a2", ps);
    CHECK(kind_of([&] { q.specialize({{"a2", 0}, {"a3", 1}, {"a4", 1}}); }) ==
          ErrorKind::SpecializedDenominatorZero);
    CHECK(kind_of([&] { q.specialize({{"a2", 1}}); }) == ErrorKind::UnboundParameter);
    CHECK(q.specialize({{"a2", 2}, {"a3", 3}, {"a4", 5}}) == Rational(15, 2));
}

TEST_CASE("substitute keeps unbound parameters symbolic") {
    const Scalar s = S("(a*b + c)/(a - c)");
    CHECK(s.substitute({{"a", 2}}) == S("(2*b + c)/(2 - c)"));
    CHECK_THROWS_AS(s.substitute({{"a", 1}, {"c", 1}}), Error);
}

TEST_CASE("multivariate gcd") {
    const Polynomial a = P("a");
    const Polynomial b = P("b");
    const Polynomial c = P("c");
    CHECK(gcd((a - b) * (a + b), (a - b) * (a - b)) == a - b);
    CHECK(gcd(a * b * (b + c), a * a * (b + c) * (a - c)) == a * (b + c));
    CHECK(gcd(Polynomial(3) * a, Polynomial(6) * a * b) == a);
    CHECK(gcd(a + 1, b + 1) == Polynomial(1));
    CHECK(gcd(Polynomial(), a - b) == a - b);
}

TEST_CASE("scalar printing reparses") {
    for (const char* text : {"a4*a3/a2", "-a4*a2/a5", "(a6*a3 - a5)/a2", "1/2*a1", "a1^2/(a2*a3)", "(a1 + 1)/(2*a2)",
                             "-7/3", "(a1 - a2)/(a1^2 + a3)"}) {
        const std::vector<std::string> ps = {"a1", "a2", "a3", "a4", "a5", "a6"};
        const Scalar s = parse_scalar_expr(text, ps);
        CAPTURE(text);
        CHECK(parse_scalar_expr(s.to_string(), ps) == s);
    }
}

TEST_CASE("property: normalize is idempotent and cancels common factors") {
    std::mt19937 rng(7);
    const std::vector<std::string> vars = {"a", "b", "c"};
    for (int round = 0; round < 150; ++round) {
        const Polynomial n = testing::random_polynomial(rng, vars);
        const Polynomial d = testing::random_nonzero_polynomial(rng, vars);
        const Polynomial g = testing::random_nonzero_polynomial(rng, vars);
        const Scalar s = Scalar::normalize(n, d);
        CHECK(Scalar::normalize(s.num(), s.den()) == s);
        CHECK(Scalar::normalize(n * g, d * g) == s);
        CHECK((s.is_zero() || gcd(s.num(), s.den()) == Polynomial(1)));
        CHECK(s.den().leading_coefficient() == 1);
    }
}

TEST_CASE("property: equality agrees with cross multiplication and specialization") {
    std::mt19937 rng(11);
    const std::vector<std::string> vars = {"a", "b", "c"};
    int compared = 0;
    for (int round = 0; round < 100; ++round) {
        const Scalar x = Scalar::normalize(testing::random_polynomial(rng, vars),
                                           testing::random_nonzero_polynomial(rng, vars));
        const Scalar y = round % 2 == 0 ? Scalar::normalize(x.num() * (P("a") + 2), x.den() * (P("a") + 2))
                                        : Scalar::normalize(testing::random_polynomial(rng, vars),
                                                            testing::random_nonzero_polynomial(rng, vars));
        const bool cross = (x.num() * y.den() - y.num() * x.den()).is_zero();
        CHECK((x == y) == cross);
        int points = 0;
        bool all_equal = true;
        for (int tries = 0; tries < 40 && points < 3; ++tries) {
            Bindings at = {{"a", testing::random_rational(rng)},
                           {"b", testing::random_rational(rng)},
                           {"c", testing::random_rational(rng)}};
            if (x.den().evaluate(at) == 0 || y.den().evaluate(at) == 0) continue;
            all_equal = all_equal && x.specialize(at) == y.specialize(at);
            ++points;
        }
        if (points == 3) {
            ++compared;
            if (cross) CHECK(all_equal);
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("property: specialize commutes with arithmetic") {
    std::mt19937 rng(13);
    const std::vector<std::string> vars = {"a", "b", "c"};
    for (int round = 0; round < 120; ++round) {
        const Scalar x = Scalar::normalize(testing::random_polynomial(rng, vars),
                                           testing::random_nonzero_polynomial(rng, vars));
        const Scalar y = Scalar::normalize(testing::random_polynomial(rng, vars),
                                           testing::random_nonzero_polynomial(rng, vars));
        const Bindings at = {{"a", testing::random_rational(rng)},
                             {"b", testing::random_rational(rng)},
                             {"c", testing::random_rational(rng)}};
        if (x.den().evaluate(at) == 0 || y.den().evaluate(at) == 0) continue;
        const Rational xv = x.specialize(at);
        const Rational yv = y.specialize(at);
        CHECK((x + y).specialize(at) == xv + yv);
        CHECK((x - y).specialize(at) == xv - yv);
        CHECK((x * y).specialize(at) == xv * yv);
        if (!y.is_zero() && yv != 0 && y.num().evaluate(at) != 0) {
            const Scalar q = x / y;
            if (q.den().evaluate(at) != 0) CHECK(q.specialize(at) == xv / yv);
        }
    }
}

TEST_CASE("property: results do not depend on how operands were built") {
    std::mt19937 rng(17);
    const std::vector<std::string> vars = {"a", "b"};
    for (int round = 0; round < 60; ++round) {
        const Scalar x = Scalar::normalize(testing::random_polynomial(rng, vars),
                                           testing::random_nonzero_polynomial(rng, vars));
        const Scalar y = Scalar::normalize(testing::random_polynomial(rng, vars),
                                           testing::random_nonzero_polynomial(rng, vars));
        const Scalar z = Scalar::normalize(testing::random_polynomial(rng, vars),
                                           testing::random_nonzero_polynomial(rng, vars));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + z) - z == x);
    }
}

TEST_CASE("property: gcd recovers a planted common factor") {
    std::mt19937 rng(29);
    const std::vector<std::string> vars = {"a", "b", "c"};
    auto dense = [&] {
        Polynomial p;
        while (p.is_zero() || p.is_monomial()) p = testing::random_polynomial(rng, vars, 4, 2);
        return p;
    };
    for (int round = 0; round < 60; ++round) {
        const Polynomial f = dense();
        const Polynomial g = dense();
        const Polynomial h = dense();
        CHECK(gcd(f * g, f * h) == (f * gcd(g, h)).monic());
    }
}
