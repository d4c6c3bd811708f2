#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "homalg/catalog.hpp"
#include "homalg/error.hpp"
#include "homalg/identities.hpp"
#include "homalg/parser.hpp"
#include "support.hpp"

using namespace homalg;
using homalg::testing::e;
using homalg::testing::S;
using homalg::testing::vec;

namespace {

const AlgebraSpec& algebra(const std::string& key) { return catalog::get(key).algebra; }

AlgebraSpec with_id(const AlgebraSpec& a) { return a.with_alpha(LinMap::identity(a.dim())); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& err) {
        return err.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("hom associator on basis elements") {
    const AlgebraSpec& h = algebra("hom_assoc_3d");
    CHECK(hom_associator(h, e(h, "e1"), e(h, "e1"), e(h, "e3")).is_zero());
    const AlgebraSpec plain = with_id(h);
    CHECK(hom_associator(plain, e(h, "e1"), e(h, "e1"), e(h, "e3")) == vec(h, {{"e3", "b^2 - a*b"}}));

    const AlgebraSpec m1 = with_id(algebra("alt4_mu1"));
    CHECK(hom_associator(m1, e(m1, "e2"), e(m1, "e3"), e(m1, "e0")) == e(m1, "e1"));

    CHECK(kind_of([] {
              const AlgebraSpec& o = algebra("octonions");
              hom_associator(o, e(o, "e1"), e(o, "e2"), e(o, "e3"));
          }) == ErrorKind::MissingTwistMap);
}

TEST_CASE("evaluate") {
    const AlgebraSpec o = with_id(algebra("octonions"));
    const IdentityAST ast = parse_identity("mu(x, y) = 0");
    CHECK(evaluate(o, ast, {{"x", e(o, "e3")}, {"y", e(o, "e6")}}) == -e(o, "e4"));
    CHECK(kind_of([&] { evaluate(o, ast, {{"x", e(o, "e3")}}); }) == ErrorKind::UnboundVariable);
    CHECK(kind_of([&] { evaluate(algebra("octonions"), parse_identity("al(x) = 0"), {{"x", e(o, "u")}}); }) ==
          ErrorKind::MissingTwistMap);

    const AlgebraSpec& h = algebra("hom_assoc_3d");
    const IdentityAST powers = parse_identity("al^3(x) - 2*x = 0");
    CHECK(evaluate(h, powers, {{"x", e(h, "e3")}}) == vec(h, {{"e3", "b^3 - 2"}}));
    const IdentityAST scaled = parse_identity("a*mu(x, x) = 0", {"a", "b"});
    CHECK(evaluate(h, scaled, {{"x", e(h, "e1")}}) == vec(h, {{"e1", "a^2"}}));
}

TEST_CASE("generic check on hom_assoc_3d") {
    const AlgebraSpec& h = algebra("hom_assoc_3d");
    const BuiltinIdentity& assoc = builtin("hom_associative");
    CHECK(check(h, assoc, Strategy::generic).verdict == Verdict::holds);
    CHECK(check(h, assoc, Strategy::basis).verdict == Verdict::holds);

    const CheckReport r = check(with_id(h), assoc, Strategy::generic);
    REQUIRE(r.verdict == Verdict::fails);
    REQUIRE(r.witness.has_value());
    // Every coordinate of the residual is divisible by (a - b) b.
    const Polynomial defect = (Polynomial::variable("a") - Polynomial::variable("b")) * Polynomial::variable("b");
    bool any = false;
    for (std::size_t i = 0; i < r.witness->residual.dim(); ++i) {
        const Scalar& c = r.witness->residual[i];
        if (c.is_zero()) continue;
        any = true;
        const Scalar q = c / Scalar(defect);
        CHECK(q.den().is_constant());
    }
    CHECK(any);

    const CheckReport rb = check(with_id(h), assoc, Strategy::basis);
    REQUIRE(rb.verdict == Verdict::fails);
    CHECK(rb.witness->basis_tuple == std::vector<std::size_t>{0, 0, 2});
    CHECK(rb.witness->residual == vec(h, {{"e3", "b^2 - a*b"}}));
}

TEST_CASE("multilinearity") {
    CHECK(is_multilinear(builtin("hom_associative").ast()));
    CHECK(is_multilinear(builtin("left_hom_alternative_linearized").ast()));
    CHECK(is_multilinear(builtin("commutative").ast()));
    CHECK_FALSE(is_multilinear(builtin("left_hom_alternative").ast()));
    CHECK_FALSE(is_multilinear(builtin("hom_jordan").ast()));
    // Cancelling nonlinear terms leave a multilinear identity.
    CHECK(is_multilinear(parse_identity("mu(x, x) - mu(x, x) + mu(x, y) = 0")));
    CHECK(is_multilinear(parse_identity("al(x) = 0")));
    CHECK_FALSE(is_multilinear(parse_identity("mu(x, y) + x = 0")));

    const AlgebraSpec& h = algebra("hom_assoc_3d");
    CHECK(kind_of([&] { check(h, builtin("right_hom_alternative").ast(), Strategy::basis); }) ==
          ErrorKind::NotMultilinear);
}

TEST_CASE("builtin catalog") {
    const auto& all = builtins();
    CHECK(all.size() == 16);
    for (const auto& b : all) {
        CAPTURE(b.name);
        CHECK_FALSE(b.description.empty());
        REQUIRE(b.surface.size() == b.clauses.size());
        for (std::size_t i = 0; i < b.clauses.size(); ++i) {
            const IdentityAST& c = b.clauses[i];
            CHECK(std::find(c.vars.begin(), c.vars.end(), "x") != c.vars.end());
            CHECK(c.vars.size() <= 3);
        }
    }
    CHECK(builtin("hom_associative").ast().vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(builtin("left_hom_alternative").ast().vars == std::vector<std::string>{"x", "y"});
    CHECK(builtin("hom_jordan").requires_commutative);
    CHECK(builtin("noncommutative_hom_jordan").clauses.size() == 2);
    CHECK(builtin("anticommute_left_consequence").conditional);
    CHECK(builtin("hom_jordan_variant_a").exploratory);
    CHECK(kind_of([] { builtin("hom_lie"); }) == ErrorKind::UnknownIdentity);
}

TEST_CASE("strategies agree on multilinear builtins") {
    for (const char* key : {"alt4_mu1_twist_alpha1", "alt4_mu2_twist_alpha1", "hom_assoc_3d"}) {
        const AlgebraSpec& a = algebra(key);
        for (const auto& b : builtins()) {
            if (b.conditional || b.clauses.size() != 1 || !is_multilinear(b.ast())) continue;
            CAPTURE(key);
            CAPTURE(b.name);
            CHECK(check(a, b, Strategy::generic).ok() == check(a, b, Strategy::basis).ok());
        }
    }
}

TEST_CASE("octonions are alternative and not associative") {
    const AlgebraSpec o = with_id(algebra("octonions"));
    CHECK(check(o, builtin("left_hom_alternative")).ok());
    CHECK(check(o, builtin("right_hom_alternative")).ok());
    CHECK(check(o, builtin("hom_flexible")).ok());
    const CheckReport r = check(o, builtin("hom_associative"));
    REQUIRE(r.verdict == Verdict::fails);
    CHECK(r.witness->basis_tuple == std::vector<std::size_t>{1, 2, 3});
    CHECK(r.witness->residual == vec(o, {{"e6", "2"}}));
}

TEST_CASE("twisted octonions with alpha = id keep a residual at (u, e1)") {
    const AlgebraSpec t = with_id(algebra("octonions_twist_diag"));
    const CheckReport r = check(t, builtin("left_hom_alternative"), Strategy::generic);
    REQUIRE(r.verdict == Verdict::fails);
    const IdentityAST& ast = builtin("left_hom_alternative").ast();
    const Vector v = evaluate(t, ast, {{"x", e(t, "u")}, {"y", e(t, "e1")}});
    CHECK(v == vec(t, {{"e1", "a^2 - a"}}));
}

TEST_CASE("conditional identities on an anticommuting pair") {
    const AlgebraSpec& o = algebra("octonions");
    const AlgebraSpec oid = with_id(o);
    const CheckReport r = check_on_pair(oid, builtin("anticommute_left_consequence"), e(o, "e1"), e(o, "e2"));
    CHECK(r.ok());
    CHECK(check_on_pair(oid, builtin("anticommute_right_consequence"), e(o, "e1"), e(o, "e2")).ok());
    CHECK(kind_of([&] { check_on_pair(oid, builtin("anticommute_left_consequence"), e(o, "u"), e(o, "e1")); }) ==
          ErrorKind::Validation);
}

TEST_CASE("property: the hom associator is trilinear") {
    const AlgebraSpec& a = algebra("alt4_mu1_twist_alpha1");
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> small(-3, 3);
    auto random_vector = [&] {
        Vector v(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) v[i] = Scalar(small(rng));
        return v;
    };
    for (int round = 0; round < 25; ++round) {
        const Vector x = random_vector();
        const Vector x2 = random_vector();
        const Vector y = random_vector();
        const Vector z = random_vector();
        const Scalar k(small(rng));
        CHECK(hom_associator(a, x + x2, y, z) == hom_associator(a, x, y, z) + hom_associator(a, x2, y, z));
        CHECK(hom_associator(a, y, k * x, z) == k * hom_associator(a, y, x, z));
        CHECK(hom_associator(a, z, y, x + x2) == hom_associator(a, z, y, x) + hom_associator(a, z, y, x2));
    }
}
