#include "homalg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <optional>

#include "homalg/catalog.hpp"
#include "homalg/error.hpp"
#include "homalg/identities.hpp"
#include "homalg/io.hpp"
#include "homalg/parser.hpp"

namespace homalg::cli {

namespace {

using io::AlgebraFile;
using io::CheckRecord;
using io::Json;

struct Planned {
    std::string name;
    std::vector<IdentityAST> clauses;
    std::vector<std::string> surface;
};

Planned plan_builtin(const BuiltinIdentity& b) { return {b.name, b.clauses, b.surface}; }

std::vector<std::string> param_names(const AlgebraSpec& a) {
    std::vector<std::string> out;
    for (const auto& p : a.params()) out.push_back(p.name);
    return out;
}

CheckRecord run_planned(const AlgebraSpec& a, const Planned& p, std::optional<Strategy> forced) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord record;
    record.identity = p.name;
    std::string strategies;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        const Strategy s = forced ? *forced : (is_multilinear(p.clauses[i]) ? Strategy::basis : Strategy::generic);
        if (strategies.find(to_string(s)) == std::string::npos) strategies += (strategies.empty() ? "" : "+") + std::string(to_string(s));
        CheckReport r = check(a, p.clauses[i], s);
        record.report.assumptions = merge_assumptions(record.report.assumptions, r.assumptions);
        if (!r.ok()) {
            record.report = std::move(r);
            if (p.clauses.size() > 1) record.report.notes.push_back("failing clause: " + p.surface[i]);
            break;
        }
        record.report.verdict = r.verdict;
    }
    record.report = finish_report(std::move(record.report));
    record.strategy = strategies;
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return record;
}

// Bilinear checks, then multilinear basis checks, then generic nonlinear checks.
std::vector<Planned> default_suite(const AlgebraSpec& a, std::vector<std::string>& skipped) {
    std::vector<Planned> out;
    const auto& commutative = builtin("commutative");
    out.push_back(plan_builtin(commutative));
    const bool is_commutative = check(a, commutative, Strategy::basis).ok();
    std::vector<const BuiltinIdentity*> multilinear;
    std::vector<const BuiltinIdentity*> nonlinear;
    for (const auto& b : builtins()) {
        if (b.name == "commutative" || b.exploratory || b.conditional) continue;
        if (b.requires_commutative && !is_commutative) {
            skipped.push_back(b.name);
            continue;
        }
        bool linear = true;
        for (const auto& c : b.clauses) linear = linear && is_multilinear(c);
        (linear ? multilinear : nonlinear).push_back(&b);
    }
    for (const auto* b : multilinear) out.push_back(plan_builtin(*b));
    for (const auto* b : nonlinear) out.push_back(plan_builtin(*b));
    return out;
}

void emit(const AlgebraFile& file, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << io::to_text(file);
    } else {
        io::save(file, path);
    }
}

int print_check(const AlgebraSpec& a, const std::string& what, const CheckReport& report, bool json,
                std::ostream& out) {
    CheckRecord record{what, "", report, 0};
    if (json) {
        out << io::report_json(a, {record}, false).dump(2) << "\n";
    } else {
        out << io::report_text(a, {record}, false);
    }
    return report.ok() ? kHolds : kFails;
}

void describe_entry(const catalog::CatalogEntry& e, std::ostream& out) {
    const AlgebraSpec& a = e.algebra;
    out << e.key << "\n  " << e.provenance << "\n  dim " << a.dim() << ", basis";
    for (const auto& b : a.basis()) out << " " << b;
    out << "\n";
    if (!a.params().empty()) {
        out << "  params";
        for (const auto& p : a.params()) out << " " << p.name << (p.nonzero ? " (nonzero)" : "");
        out << "\n";
    }
    if (a.unit()) out << "  unit " << a.basis()[*a.unit()] << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.has_product(i, j))
                out << "  mu(" << a.basis()[i] << ", " << a.basis()[j] << ") = " << format_vector(a, a.product(i, j))
                    << "\n";
    if (a.alpha()) {
        out << "  twisting map:\n";
        for (std::size_t j = 0; j < a.dim(); ++j)
            out << "    alpha(" << a.basis()[j] << ") = " << format_vector(a, a.alpha()->column(j)) << "\n";
    }
    for (const auto& m : e.maps) out << "  map " << m.name << "\n";
    for (const auto& x : e.expected)
        out << "  expect " << x.identity << (x.alpha_identity ? " (alpha = id)" : "") << ": "
            << (x.holds ? "holds" : "fails") << "  -- " << x.source << "\n";
    for (const auto& err : e.errata)
        out << "  erratum at " << err.location << ": printed " << err.printed << ", stored " << err.stored << " ("
            << err.reason << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Hom-algebra identities", "homalg"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check identities on an algebra file");
    std::string verify_file;
    std::vector<std::string> identities;
    std::vector<std::string> exprs;
    std::string strategy_name;
    bool json = false;
    bool timing = false;
    verify->add_option("FILE", verify_file)->required();
    verify->add_option("--identity", identities, "builtin identity name (repeatable)");
    verify->add_option("--expr", exprs, "identity in surface syntax (repeatable)");
    verify->add_option("--strategy", strategy_name, "generic or basis")->check(CLI::IsMember({"generic", "basis"}));
    verify->add_flag("--json", json, "machine-readable report");
    verify->add_flag("--timing", timing, "include elapsed times");

    // twist family
    std::string in_file;
    std::string out_file;
    std::string map_name;
    bool force = false;
    auto* twist = app.add_subcommand("twist", "Yau twist by a named endomorphism");
    twist->add_option("FILE", in_file)->required();
    twist->add_option("--map", map_name)->required();
    twist->add_option("-o,--output", out_file);
    twist->add_flag("--force", force, "skip the endomorphism check");
    auto* untwist_cmd = app.add_subcommand("untwist", "replace mu by alpha^-1 o mu");
    untwist_cmd->add_option("FILE", in_file)->required();
    untwist_cmd->add_option("-o,--output", out_file);
    auto* polarize_cmd = app.add_subcommand("polarize", "symmetrize the product");
    polarize_cmd->add_option("FILE", in_file)->required();
    polarize_cmd->add_option("-o,--output", out_file);
    auto* opposite_cmd = app.add_subcommand("opposite", "reverse the product");
    opposite_cmd->add_option("FILE", in_file)->required();
    opposite_cmd->add_option("-o,--output", out_file);

    // checks
    auto* endo = app.add_subcommand("check-endo", "is a named map an endomorphism");
    endo->add_option("FILE", in_file)->required();
    endo->add_option("--map", map_name)->required();
    endo->add_flag("--json", json);
    std::string second_file;
    auto* morphism = app.add_subcommand("check-morphism", "is a named map a morphism FILE_A -> FILE_B");
    morphism->add_option("FILE_A", in_file)->required();
    morphism->add_option("FILE_B", second_file)->required();
    morphism->add_option("--map", map_name)->required();
    morphism->add_flag("--json", json);
    std::string element;
    auto* unit = app.add_subcommand("check-unit", "is a basis element a two-sided unit");
    unit->add_option("FILE", in_file)->required();
    unit->add_option("--element", element)->required();
    unit->add_flag("--json", json);

    // catalog
    auto* cat = app.add_subcommand("catalog", "built-in algebras");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list catalog keys");
    auto* show = cat->add_subcommand("show", "describe or emit an entry");
    std::string key;
    bool emit_file = false;
    show->add_option("KEY", key)->required();
    show->add_flag("--emit", emit_file, "write the entry as an algebra file");
    show->add_option("-o,--output", out_file);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kHolds;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*verify) {
            AlgebraFile file = io::load(verify_file);
            AlgebraSpec a = file.algebra;
            std::vector<std::string> notes;
            if (!a.alpha()) {
                a = a.with_default_alpha();
                notes.push_back("no twisting map in file; alpha = id");
            }
            std::optional<Strategy> forced;
            if (strategy_name == "generic") forced = Strategy::generic;
            if (strategy_name == "basis") forced = Strategy::basis;

            std::vector<Planned> plan;
            std::vector<std::string> skipped;
            for (const auto& name : identities) {
                const auto& b = builtin(name);
                if (b.conditional)
                    throw Error(ErrorKind::Validation,
                                "identity '" + name + "' only holds on anticommuting pairs and cannot be checked universally");
                plan.push_back(plan_builtin(b));
            }
            for (const auto& text : exprs) plan.push_back({text, {parse_identity(text, param_names(a))}, {text}});
            if (plan.empty()) plan = default_suite(a, skipped);

            std::vector<CheckRecord> records;
            for (const auto& p : plan) records.push_back(run_planned(a, p, forced));
            bool all_ok = true;
            for (const auto& r : records) all_ok = all_ok && r.report.ok();

            if (json) {
                Json report = io::report_json(a, records, timing);
                report["notes"] = notes;
                report["skipped"] = skipped;
                out << report.dump(2) << "\n";
            } else {
                out << io::report_text(a, records, timing);
                for (const auto& n : notes) out << "note: " << n << "\n";
                for (const auto& s : skipped) out << "skipped " << s << ": product is not commutative\n";
            }
            return all_ok ? kHolds : kFails;
        }
        if (*twist) {
            AlgebraFile file = io::load(in_file);
            const LinMap f = file.map(map_name);
            const CheckReport endo_report = is_endomorphism(file.algebra, f);
            if (!force && !endo_report.ok()) {
                err << "error: '" << map_name << "' is not an endomorphism: " << endo_report.witness->note << "\n";
                return kFails;
            }
            AlgebraFile result{yau_twist(file.algebra, f, TwistMode::force), file.maps};
            emit(result, out_file, out);
            if (force) {
                err << "note: endomorphism check skipped (--force); the map "
                    << (endo_report.ok() ? "is" : "is not") << " an endomorphism\n";
            }
            return kHolds;
        }
        if (*untwist_cmd || *polarize_cmd || *opposite_cmd) {
            AlgebraFile file = io::load(in_file);
            AlgebraSpec result = *untwist_cmd    ? untwist(file.algebra)
                                 : *polarize_cmd ? polarize(file.algebra)
                                                 : opposite(file.algebra);
            emit(AlgebraFile{std::move(result), file.maps}, out_file, out);
            return kHolds;
        }
        if (*endo) {
            AlgebraFile file = io::load(in_file);
            return print_check(file.algebra, "endomorphism " + map_name, is_endomorphism(file.algebra, file.map(map_name)),
                               json, out);
        }
        if (*morphism) {
            AlgebraFile a = io::load(in_file);
            AlgebraFile b = io::load(second_file);
            const LinMap* f = nullptr;
            try {
                f = &a.map(map_name);
            } catch (const Error&) {
                f = &b.map(map_name);
            }
            return print_check(a.algebra, "morphism " + map_name, is_morphism(a.algebra, b.algebra, *f), json, out);
        }
        if (*unit) {
            AlgebraFile file = io::load(in_file);
            const std::size_t k = file.algebra.index_of(element);
            return print_check(file.algebra, "unit " + element, check_unit(file.algebra, file.algebra.basis_vector(k)),
                               json, out);
        }
        if (*cat) {
            if (*show) {
                const auto& entry = catalog::get(key);
                if (emit_file) {
                    emit(io::from_entry(entry), out_file, out);
                } else {
                    describe_entry(entry, out);
                }
            } else {
                for (const auto& k : catalog::list()) out << k << "\n";
            }
            return kHolds;
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace homalg::cli
