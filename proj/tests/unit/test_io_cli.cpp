#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "homalg/catalog.hpp"
#include "homalg/cli.hpp"
#include "homalg/error.hpp"
#include "homalg/io.hpp"
#include "homalg/parser.hpp"
#include "support.hpp"

using namespace homalg;
using homalg::testing::e;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("homalg_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& err) {
        return err.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::Io;
}

const char* kZeroAlgebra = R"({
  "name": "zero2",
  "dim": 2,
  "basis": ["p", "q"],
  "params": [],
  "mu": [],
  "maps": {"alpha": [["1", "0"], ["0", "1"]]}
})";

}  // namespace

TEST_CASE("files round-trip") {
    TempDir dir;
    for (const auto& entry : catalog::entries()) {
        CAPTURE(entry.key);
        const io::AlgebraFile file = io::from_entry(entry);
        const std::string path = dir.file(entry.key + ".json");
        io::save(file, path);
        const io::AlgebraFile back = io::load(path);
        CHECK(io::to_text(back) == io::to_text(file));
        CHECK(back.algebra.name() == entry.algebra.name());
        CHECK(back.algebra.params().size() == entry.algebra.params().size());
        CHECK(back.maps.size() == file.maps.size());
    }
    const io::AlgebraFile oct = io::load(dir.file("octonions.json"));
    CHECK(mul(oct.algebra, e(oct.algebra, "e5"), e(oct.algebra, "e6")) == e(oct.algebra, "e1"));
    const io::AlgebraFile twisted = io::load(dir.file("alt4_mu1_twist_alpha1.json"));
    CHECK(twisted.map("alpha") == *twisted.algebra.alpha());
    CHECK(kind_of([&] { io::load(dir.file("missing.json")); }) == ErrorKind::Io);
}

TEST_CASE("file validation") {
    const io::AlgebraFile zero = io::parse_text(kZeroAlgebra);
    CHECK(zero.algebra.dim() == 2);
    CHECK(zero.algebra.alpha().has_value());

    std::string bad_label = kZeroAlgebra;
    bad_label.replace(bad_label.find("\"mu\": []"), 8, R"("mu": [{"i": "p", "j": "e9", "value": {"p": "1"}}])");
    CHECK(kind_of([&] { io::parse_text(bad_label); }) == ErrorKind::Validation);

    std::string undeclared = kZeroAlgebra;
    undeclared.replace(undeclared.find("\"mu\": []"), 8, R"("mu": [{"i": "p", "j": "q", "value": {"p": "t"}}])");
    CHECK(kind_of([&] { io::parse_text(undeclared); }) == ErrorKind::Validation);

    std::string wrong_dim = kZeroAlgebra;
    wrong_dim.replace(wrong_dim.find("\"dim\": 2"), 8, "\"dim\": 3");
    CHECK(kind_of([&] { io::parse_text(wrong_dim); }) == ErrorKind::Validation);

    try {
        io::parse_text("{\n  \"name\": \"x\",\n  \"dim\": 2,,\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.kind() == ErrorKind::Parse);
        CHECK(err.position().line == 3);
    }
}

TEST_CASE("reports") {
    const AlgebraSpec& h = catalog::get("hom_assoc_3d").algebra;
    io::CheckRecord record{"hom_associative", "basis", check(h.with_alpha(LinMap::identity(3)),
                                                              builtin("hom_associative"), Strategy::basis),
                           1.5};
    const io::Json doc = io::report_json(h, {record}, false);
    CHECK(doc["summary"]["total"] == 1);
    CHECK(doc["summary"]["failed"] == 1);
    CHECK_FALSE(doc["checks"][0].contains("elapsed_ms"));
    CHECK(io::report_json(h, {record}, true)["checks"][0].contains("elapsed_ms"));
    CHECK(io::report_text(h, {record}, false).find("fails") != std::string::npos);
}

TEST_CASE("cli verify exit codes") {
    TempDir dir;
    const std::string zero = dir.file("zero.json");
    write(zero, kZeroAlgebra);
    CHECK(run({"verify", zero}).status == cli::kHolds);

    const std::string h = dir.file("h.json");
    REQUIRE(run({"catalog", "show", "hom_assoc_3d", "--emit", "-o", h}).status == 0);
    CHECK(run({"verify", h, "--identity", "hom_associative"}).status == cli::kHolds);
    CHECK(run({"verify", h, "--identity", "commutative"}).status == cli::kFails);
    CHECK(run({"verify", h, "--expr", "mu(x, mu(y, z)) = mu(mu(x, y), z)"}).status == cli::kFails);
    CHECK(run({"verify", h, "--identity", "no_such_identity"}).status == cli::kUsage);
    CHECK(run({"verify", h, "--identity", "anticommute_left_consequence"}).status == cli::kUsage);
    CHECK(run({"verify", h, "--expr", "mu(x y) = 0"}).status == cli::kUsage);
    CHECK(run({"verify", dir.file("missing.json")}).status == cli::kUsage);
    CHECK(run({"verify", h, "--strategy", "random"}).status == cli::kUsage);

    const Run first = run({"verify", h, "--json"});
    const Run second = run({"verify", h, "--json"});
    CHECK(first.out == second.out);
    const io::Json doc = io::Json::parse(first.out);
    CHECK(doc["algebra"] == "hom_assoc_3d");
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).status == cli::kUsage);
    CHECK(run({"frobnicate"}).status == cli::kUsage);
    CHECK(run({"catalog", "show", "nonsense"}).status == cli::kUsage);
    CHECK(run({"verify"}).status == cli::kUsage);
    const Run list = run({"catalog", "list"});
    CHECK(list.status == 0);
    CHECK(list.out.find("octonions_twist_diag") != std::string::npos);
}

TEST_CASE("cli twist, untwist and checks") {
    TempDir dir;
    const std::string oct = dir.file("oct.json");
    REQUIRE(run({"catalog", "show", "octonions", "--emit", "-o", oct}).status == 0);
    const std::string twisted = dir.file("oct_twist.json");
    CHECK(run({"twist", oct, "--map", "oct_diag", "-o", twisted}).status == cli::kFails);
    CHECK_FALSE(fs::exists(twisted));
    const Run forced = run({"twist", oct, "--map", "oct_diag", "--force", "-o", twisted});
    CHECK(forced.status == 0);
    CHECK_FALSE(forced.err.empty());
    REQUIRE(fs::exists(twisted));
    CHECK(run({"check-endo", oct, "--map", "oct_diag"}).status == cli::kFails);
    CHECK(run({"check-unit", oct, "--element", "u"}).status == cli::kHolds);
    CHECK(run({"check-unit", twisted, "--element", "u"}).status == cli::kFails);

    const std::string back = dir.file("back.json");
    CHECK(run({"untwist", twisted, "-o", back}).status == 0);
    const io::AlgebraFile restored = io::load(back);
    const AlgebraSpec& o = catalog::get("octonions").algebra;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(restored.algebra.product(i, j) == o.product(i, j));

    const std::string mu1 = dir.file("mu1.json");
    REQUIRE(run({"catalog", "show", "alt4_mu1", "--emit", "-o", mu1}).status == 0);
    const Run stdout_twist = run({"twist", mu1, "--map", "alpha1"});
    CHECK(stdout_twist.status == 0);
    CHECK(io::parse_text(stdout_twist.out).algebra.name() == "alt4_mu1_twist");
    CHECK(run({"polarize", mu1}).status == 0);
    CHECK(run({"opposite", mu1}).status == 0);
    CHECK(run({"check-endo", mu1, "--map", "alpha2"}).status == cli::kHolds);
    CHECK(run({"check-morphism", mu1, mu1, "--map", "alpha1"}).status == cli::kHolds);
}

TEST_CASE("property: verify exit status follows the report across the catalog") {
    TempDir dir;
    for (const auto& key : catalog::list()) {
        CAPTURE(key);
        const std::string path = dir.file(key + ".json");
        REQUIRE(run({"catalog", "show", key, "--emit", "-o", path}).status == 0);
        const Run r = run({"verify", path, "--json"});
        const io::Json doc = io::Json::parse(r.out);
        const int failed = doc["summary"]["failed"].get<int>();
        CHECK(r.status == (failed == 0 ? cli::kHolds : cli::kFails));
        for (const auto& c : doc["checks"]) {
            const std::string verdict = c["verdict"].get<std::string>();
            CHECK((verdict == "holds" || verdict == "holds-under-assumptions" || verdict == "fails"));
        }
    }
}

TEST_CASE("alpha replaced by id in the twisted octonion file") {
    TempDir dir;
    const std::string path = dir.file("t.json");
    REQUIRE(run({"catalog", "show", "octonions_twist_diag", "--emit", "-o", path}).status == 0);
    io::AlgebraFile file = io::load(path);
    file.algebra.set_alpha(LinMap::identity(8));
    const std::string plain = dir.file("plain.json");
    io::save(file, plain);
    const Run r = run({"verify", plain, "--expr", "mu(al(x),mu(x,y)) = mu(mu(x,x),al(y))", "--json"});
    CHECK(r.status == cli::kFails);
    // Coefficient of x[u]^2 y[e1] in coordinate e1 is a^2 - a.
    const std::string e1 = io::Json::parse(r.out)["checks"][0]["witness"]["residual"]["e1"].get<std::string>();
    CHECK(e1.find("+ a^2*x[u]^2*y[e1]") != std::string::npos);
    CHECK(e1.find("- a*x[u]^2*y[e1]") != std::string::npos);
    // The stored alpha gives the same verdict as the library check.
    const bool holds = check(catalog::get("octonions_twist_diag").algebra, builtin("left_hom_alternative")).ok();
    CHECK(run({"verify", path, "--identity", "left_hom_alternative"}).status == (holds ? cli::kHolds : cli::kFails));
}
