#include <doctest.h>

#include "homalg/catalog.hpp"
#include "homalg/error.hpp"
#include "homalg/identities.hpp"
#include "support.hpp"

using namespace homalg;
using homalg::testing::e;
using homalg::testing::vec;

namespace {

bool same_table(const AlgebraSpec& lhs, const AlgebraSpec& rhs) {
    if (lhs.dim() != rhs.dim()) return false;
    for (std::size_t i = 0; i < lhs.dim(); ++i)
        for (std::size_t j = 0; j < lhs.dim(); ++j)
            if (!(lhs.product(i, j) == rhs.product(i, j))) return false;
    return true;
}

}  // namespace

TEST_CASE("keys") {
    const std::vector<std::string> keys = catalog::list();
    CHECK(keys == std::vector<std::string>{"hom_assoc_3d", "alt4_mu1", "alt4_mu2", "alt4_mu1_twist_alpha1",
                                           "alt4_mu2_twist_alpha1", "alt4_mu1_twist_alpha2", "alt4_mu2_twist_alpha2",
                                           "octonions", "octonions_twist_diag", "hom_jordan_3d"});
    for (const auto& key : keys) CHECK(catalog::get(key).key == key);
    try {
        catalog::get("sedenions");
        FAIL("expected UnknownKey");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnknownKey);
    }
    CHECK_THROWS_AS(catalog::get("octonions").map("alpha9"), Error);
}

TEST_CASE("selected table entries") {
    const AlgebraSpec& mu1 = catalog::get("alt4_mu1").algebra;
    CHECK(mu1.product(3, 2) == -e(mu1, "e1"));
    CHECK(mu1.product(2, 3) == e(mu1, "e1"));
    CHECK(mu1.product(0, 0) == e(mu1, "e0"));

    const AlgebraSpec& t = catalog::get("octonions_twist_diag").algebra;
    CHECK(t.product(t.index_of("e6"), t.index_of("e7")) == vec(t, {{"e2", "b"}}));
    CHECK(t.alpha().has_value());

    const auto& j = catalog::get("hom_jordan_3d");
    CHECK(j.algebra.product(2, 1) == vec(j.algebra, {{"e3", "1/2*b"}}));
    CHECK(j.algebra.product(1, 2) == vec(j.algebra, {{"e3", "1/2*b"}}));
    REQUIRE(j.errata.size() == 2);
    CHECK(j.errata[1].printed == "0");
}

TEST_CASE("every entry carries provenance and consistent maps") {
    for (const auto& entry : catalog::entries()) {
        CAPTURE(entry.key);
        CHECK_FALSE(entry.provenance.empty());
        for (const auto& m : entry.maps) CHECK(m.map.dim() == entry.algebra.dim());
        for (const auto& x : entry.expected) CHECK_NOTHROW(builtin(x.identity));
    }
}

TEST_CASE("twisted tables agree with the twist of their base") {
    struct Case {
        const char* twisted;
        const char* base;
        const char* map;
    };
    for (const Case c : {Case{"alt4_mu1_twist_alpha1", "alt4_mu1", "alpha1"},
                         Case{"alt4_mu2_twist_alpha1", "alt4_mu2", "alpha1"},
                         Case{"alt4_mu1_twist_alpha2", "alt4_mu1", "alpha2"},
                         Case{"alt4_mu2_twist_alpha2", "alt4_mu2", "alpha2"},
                         Case{"octonions_twist_diag", "octonions", "oct_diag"}}) {
        CAPTURE(c.twisted);
        const auto& base = catalog::get(c.base);
        const AlgebraSpec expected = yau_twist(base.algebra, base.map(c.map), TwistMode::force);
        CHECK(same_table(catalog::get(c.twisted).algebra, expected));
        CHECK(*catalog::get(c.twisted).algebra.alpha() == base.map(c.map));
    }
}

TEST_CASE("the two 4-dimensional tables are anti-isomorphic") {
    const AlgebraSpec& mu1 = catalog::get("alt4_mu1").algebra;
    const AlgebraSpec& mu2 = catalog::get("alt4_mu2").algebra;
    LinMap phi = LinMap::identity(4);
    phi.at(1, 1) = Scalar(-1);
    CHECK(is_morphism(opposite(mu1), mu2, phi).ok());
    CHECK_FALSE(same_table(opposite(mu1), mu2));
}

TEST_CASE("expectations recorded with each entry") {
    const auto& h = catalog::get("hom_assoc_3d");
    CHECK(check(h.algebra, builtin("hom_associative")).ok());
    CHECK_FALSE(check(h.algebra.with_alpha(LinMap::identity(3)), builtin("hom_associative")).ok());

    const auto& j = catalog::get("hom_jordan_3d");
    CHECK(check(j.algebra, builtin("commutative")).ok());
    CHECK(check(j.algebra, builtin("hom_jordan")).ok());
    // With alpha = id the table is not Jordan: the residual carries b(a - b).
    const CheckReport plain = check(j.algebra.with_alpha(LinMap::identity(3)), builtin("hom_jordan"));
    CHECK(plain.verdict == Verdict::fails);
}
