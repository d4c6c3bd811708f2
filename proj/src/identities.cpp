#include "homalg/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

#include "homalg/error.hpp"

namespace homalg {

namespace expr {

ExprPtr var(std::string name) { return std::make_shared<const Expr>(Expr{VarNode{std::move(name)}}); }

ExprPtr al(ExprPtr child, unsigned power) {
    if (power == 0) throw std::invalid_argument("alpha power must be at least 1");
    return std::make_shared<const Expr>(Expr{AlphaNode{power, std::move(child)}});
}

ExprPtr mu(ExprPtr left, ExprPtr right) {
    return std::make_shared<const Expr>(Expr{MuNode{std::move(left), std::move(right)}});
}

ExprPtr scale(Scalar factor, ExprPtr child) {
    return std::make_shared<const Expr>(Expr{ScaleNode{std::move(factor), std::move(child)}});
}

ExprPtr sum(std::vector<std::pair<int, ExprPtr>> terms) {
    return std::make_shared<const Expr>(Expr{SumNode{std::move(terms)}});
}

ExprPtr zero() { return sum({}); }

bool is_zero_literal(const ExprPtr& e) {
    const auto* s = std::get_if<SumNode>(&e->node);
    return s != nullptr && s->terms.empty();
}

ExprPtr hom_associator(ExprPtr x, ExprPtr y, ExprPtr z) {
    return sum({{+1, mu(al(x), mu(y, z))}, {-1, mu(mu(x, y), al(z))}});
}

}  // namespace expr

// --------------------------------------------------------------------------
// structure and printing

bool same_structure(const ExprPtr& lhs, const ExprPtr& rhs) {
    if (lhs->node.index() != rhs->node.index()) return false;
    return std::visit(
        [&](const auto& l) -> bool {
            using T = std::decay_t<decltype(l)>;
            const auto& r = std::get<T>(rhs->node);
            if constexpr (std::is_same_v<T, VarNode>) {
                return l.name == r.name;
            } else if constexpr (std::is_same_v<T, AlphaNode>) {
                return l.power == r.power && same_structure(l.child, r.child);
            } else if constexpr (std::is_same_v<T, MuNode>) {
                return same_structure(l.left, r.left) && same_structure(l.right, r.right);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return l.factor == r.factor && same_structure(l.child, r.child);
            } else {
                if (l.terms.size() != r.terms.size()) return false;
                for (std::size_t i = 0; i < l.terms.size(); ++i)
                    if (l.terms[i].first != r.terms[i].first || !same_structure(l.terms[i].second, r.terms[i].second))
                        return false;
                return true;
            }
        },
        lhs->node);
}

std::string to_string(const ExprPtr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                return n.name;
            } else if constexpr (std::is_same_v<T, AlphaNode>) {
                return (n.power == 1 ? std::string("al") : "al^" + std::to_string(n.power)) + "(" + to_string(n.child) +
                       ")";
            } else if constexpr (std::is_same_v<T, MuNode>) {
                return "mu(" + to_string(n.left) + ", " + to_string(n.right) + ")";
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                std::string child = to_string(n.child);
                if (std::holds_alternative<SumNode>(n.child->node)) child = "(" + child + ")";
                return "(" + n.factor.to_string() + ")*" + child;
            } else {
                if (n.terms.empty()) return "0";
                std::string out;
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    const auto& [sign, child] = n.terms[i];
                    std::string text = to_string(child);
                    if (std::holds_alternative<SumNode>(child->node)) text = "(" + text + ")";
                    if (i == 0) {
                        out = sign < 0 ? "-" + text : text;
                    } else {
                        out += sign < 0 ? " - " : " + ";
                        out += text;
                    }
                }
                return out;
            }
        },
        e->node);
}

namespace {

void collect_vars(const ExprPtr& e, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
            } else if constexpr (std::is_same_v<T, AlphaNode> || std::is_same_v<T, ScaleNode>) {
                collect_vars(n.child, out);
            } else if constexpr (std::is_same_v<T, MuNode>) {
                collect_vars(n.left, out);
                collect_vars(n.right, out);
            } else {
                for (const auto& [sign, child] : n.terms) collect_vars(child, out);
            }
        },
        e->node);
}

}  // namespace

IdentityAST make_identity(const ExprPtr& lhs, const ExprPtr& rhs) {
    IdentityAST ast;
    ast.body = expr::is_zero_literal(rhs) ? lhs : expr::sum({{+1, lhs}, {-1, rhs}});
    collect_vars(ast.body, ast.vars);
    return ast;
}

bool same_structure(const IdentityAST& lhs, const IdentityAST& rhs) {
    return lhs.vars == rhs.vars && same_structure(lhs.body, rhs.body);
}

std::string to_string(const IdentityAST& ast) { return to_string(ast.body) + " = 0"; }

// --------------------------------------------------------------------------
// builtin catalog

namespace {

using namespace expr;

BuiltinIdentity single(std::string name, IdentityAST ast, std::string surface, std::string description) {
    BuiltinIdentity b;
    b.name = std::move(name);
    b.clauses.push_back(std::move(ast));
    b.surface.push_back(std::move(surface));
    b.description = std::move(description);
    return b;
}

std::vector<BuiltinIdentity> make_builtins() {
    const ExprPtr x = var("x");
    const ExprPtr y = var("y");
    const ExprPtr z = var("z");
    // as(p, q, r) laid out flat inside a four-term sum
    auto as_terms = [](const ExprPtr& p, const ExprPtr& q, const ExprPtr& r) {
        return std::vector<std::pair<int, ExprPtr>>{{+1, mu(al(p), mu(q, r))}, {-1, mu(mu(p, q), al(r))}};
    };
    auto as_sum = [&](std::vector<std::pair<int, ExprPtr>> first, const std::vector<std::pair<int, ExprPtr>>& second) {
        first.insert(first.end(), second.begin(), second.end());
        return sum(std::move(first));
    };

    std::vector<BuiltinIdentity> out;
    out.push_back(single("hom_associative", make_identity(mu(al(x), mu(y, z)), mu(mu(x, y), al(z))),
                         "mu(al(x), mu(y, z)) = mu(mu(x, y), al(z))", "Hom-associativity: as(x,y,z) = 0"));
    out.push_back(single("left_hom_alternative", make_identity(mu(al(x), mu(x, y)), mu(mu(x, x), al(y))),
                         "mu(al(x), mu(x, y)) = mu(mu(x, x), al(y))", "left Hom-alternativity: as(x,x,y) = 0"));
    out.push_back(single("right_hom_alternative", make_identity(mu(al(x), mu(y, y)), mu(mu(x, y), al(y))),
                         "mu(al(x), mu(y, y)) = mu(mu(x, y), al(y))", "right Hom-alternativity: as(x,y,y) = 0"));

    const std::string left_lin =
        "mu(al(x), mu(y, z)) - mu(mu(x, y), al(z)) + mu(al(y), mu(x, z)) - mu(mu(y, x), al(z)) = 0";
    const std::string right_lin =
        "mu(al(x), mu(y, z)) - mu(mu(x, y), al(z)) + mu(al(x), mu(z, y)) - mu(mu(x, z), al(y)) = 0";
    const std::string alt13 =
        "mu(al(x), mu(y, z)) - mu(mu(x, y), al(z)) + mu(al(z), mu(y, x)) - mu(mu(z, y), al(x)) = 0";
    out.push_back(single("left_hom_alternative_linearized",
                         make_identity(as_sum(as_terms(x, y, z), as_terms(y, x, z)), zero()), left_lin,
                         "linearized left Hom-alternativity: as(x,y,z) + as(y,x,z) = 0"));
    out.push_back(single("right_hom_alternative_linearized",
                         make_identity(as_sum(as_terms(x, y, z), as_terms(x, z, y)), zero()), right_lin,
                         "linearized right Hom-alternativity: as(x,y,z) + as(x,z,y) = 0"));
    out.push_back(single("hom_flexible", make_identity(mu(al(x), mu(y, x)), mu(mu(x, y), al(x))),
                         "mu(al(x), mu(y, x)) = mu(mu(x, y), al(x))", "Hom-flexibility: as(x,y,x) = 0"));
    out.push_back(single("associator_alternating_12",
                         make_identity(as_sum(as_terms(x, y, z), as_terms(y, x, z)), zero()), left_lin,
                         "as(x,y,z) = -as(y,x,z)"));
    out.push_back(single("associator_alternating_23",
                         make_identity(as_sum(as_terms(x, y, z), as_terms(x, z, y)), zero()), right_lin,
                         "as(x,y,z) = -as(x,z,y)"));
    out.push_back(single("associator_alternating_13",
                         make_identity(as_sum(as_terms(x, y, z), as_terms(z, y, x)), zero()), alt13,
                         "as(x,y,z) = -as(z,y,x)"));
    out.push_back(single("commutative", make_identity(mu(x, y), mu(y, x)), "mu(x, y) = mu(y, x)",
                         "commutativity of mu"));

    auto jordan = single("hom_jordan", make_identity(mu(al(x, 2), mu(y, mu(x, x))), mu(mu(al(x), y), al(mu(x, x)))),
                         "mu(al^2(x), mu(y, mu(x, x))) = mu(mu(al(x), y), al(mu(x, x)))",
                         "Hom-Jordan identity (with commutative mu)");
    jordan.requires_commutative = true;
    out.push_back(jordan);

    auto variant_a =
        single("hom_jordan_variant_a", make_identity(mu(al(x), mu(y, mu(x, x))), mu(mu(x, y), al(mu(x, x)))),
               "mu(al(x), mu(y, mu(x, x))) = mu(mu(x, y), al(mu(x, x)))",
               "alternative twisting of the Jordan identity (single alpha on x)");
    variant_a.requires_commutative = true;
    variant_a.exploratory = true;
    out.push_back(variant_a);

    auto variant_b =
        single("hom_jordan_variant_b", make_identity(mu(al(x), mu(y, mu(x, x))), mu(mu(x, y), mu(x, al(x)))),
               "mu(al(x), mu(y, mu(x, x))) = mu(mu(x, y), mu(x, al(x)))",
               "alternative twisting of the Jordan identity (alpha inside the square)");
    variant_b.requires_commutative = true;
    variant_b.exploratory = true;
    out.push_back(variant_b);

    auto anti_left = single("anticommute_left_consequence",
                            make_identity(sum({{+1, mu(al(x), mu(y, z))}, {+1, mu(al(y), mu(x, z))}}), zero()),
                            "mu(al(x), mu(y, z)) + mu(al(y), mu(x, z)) = 0",
                            "for anticommuting x, y in a Hom-alternative algebra");
    anti_left.conditional = true;
    out.push_back(anti_left);

    auto anti_right = single("anticommute_right_consequence",
                             make_identity(sum({{+1, mu(mu(z, x), al(y))}, {+1, mu(mu(z, y), al(x))}}), zero()),
                             "mu(mu(z, x), al(y)) + mu(mu(z, y), al(x)) = 0",
                             "for anticommuting x, y in a Hom-alternative algebra");
    anti_right.conditional = true;
    out.push_back(anti_right);

    BuiltinIdentity noncommutative;
    noncommutative.name = "noncommutative_hom_jordan";
    const auto& flexible = out[5];
    noncommutative.clauses = {flexible.ast(), jordan.ast()};
    noncommutative.surface = {flexible.surface.front(), jordan.surface.front()};
    noncommutative.description = "Hom-flexible together with the Hom-Jordan identity, mu not assumed commutative";
    out.push_back(noncommutative);
    return out;
}

}  // namespace

const std::vector<BuiltinIdentity>& builtins() {
    static const std::vector<BuiltinIdentity> catalog = make_builtins();
    return catalog;
}

const BuiltinIdentity& builtin(std::string_view name) {
    for (const auto& b : builtins())
        if (b.name == name) return b;
    throw Error(ErrorKind::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

// --------------------------------------------------------------------------
// evaluation

Vector hom_associator(const AlgebraSpec& a, const Vector& x, const Vector& y, const Vector& z) {
    if (!a.alpha()) throw Error(ErrorKind::MissingTwistMap, "algebra '" + a.name() + "' has no twisting map");
    const LinMap& alpha = *a.alpha();
    return mul(a, apply_map(alpha, x), mul(a, y, z)) - mul(a, mul(a, x, y), apply_map(alpha, z));
}

namespace {

class Evaluator {
   public:
    Evaluator(const AlgebraSpec& a, const VectorBindings& bindings) : a_(a), bindings_(bindings) {}

    Vector eval(const ExprPtr& e) {
        const std::string key = to_string(e);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Vector v = std::visit([&](const auto& n) { return eval_node(n); }, e->node);
        memo_.emplace(key, v);
        return v;
    }

   private:
    Vector eval_node(const VarNode& n) {
        auto it = bindings_.find(n.name);
        if (it == bindings_.end()) throw Error(ErrorKind::UnboundVariable, "unbound variable '" + n.name + "'");
        if (it->second.dim() != a_.dim())
            throw Error(ErrorKind::DimensionMismatch, "binding for '" + n.name + "' has the wrong dimension");
        return it->second;
    }
    Vector eval_node(const AlphaNode& n) { return apply_map(alpha_power(n.power), eval(n.child)); }
    Vector eval_node(const MuNode& n) { return mul(a_, eval(n.left), eval(n.right)); }
    Vector eval_node(const ScaleNode& n) { return n.factor * eval(n.child); }
    Vector eval_node(const SumNode& n) {
        Vector out(a_.dim());
        for (const auto& [sign, child] : n.terms) {
            if (sign < 0) {
                out -= eval(child);
            } else {
                out += eval(child);
            }
        }
        return out;
    }

    const LinMap& alpha_power(unsigned k) {
        if (!a_.alpha()) throw Error(ErrorKind::MissingTwistMap, "algebra '" + a_.name() + "' has no twisting map");
        auto it = powers_.find(k);
        if (it == powers_.end()) it = powers_.emplace(k, power(*a_.alpha(), k)).first;
        return it->second;
    }

    const AlgebraSpec& a_;
    const VectorBindings& bindings_;
    std::unordered_map<std::string, Vector> memo_;
    std::map<unsigned, LinMap> powers_;
};

}  // namespace

Vector evaluate(const AlgebraSpec& a, const ExprPtr& e, const VectorBindings& bindings) {
    Evaluator ev(a, bindings);
    return ev.eval(e);
}

Vector evaluate(const AlgebraSpec& a, const IdentityAST& ast, const VectorBindings& bindings) {
    for (const auto& v : ast.vars)
        if (!bindings.count(v)) throw Error(ErrorKind::UnboundVariable, "unbound variable '" + v + "'");
    return evaluate(a, ast.body, bindings);
}

// --------------------------------------------------------------------------
// multilinearity

namespace {

struct Term {
    Scalar coefficient;
    unsigned alpha = 0;
    std::string core;
    std::map<std::string, int> counts;

    std::string key() const { return alpha == 0 ? core : "al^" + std::to_string(alpha) + "(" + core + ")"; }
};

std::vector<Term> expand(const ExprPtr& e) {
    return std::visit(
        [](const auto& n) -> std::vector<Term> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarNode>) {
                return {Term{Scalar(1), 0, n.name, {{n.name, 1}}}};
            } else if constexpr (std::is_same_v<T, AlphaNode>) {
                auto terms = expand(n.child);
                for (auto& t : terms) t.alpha += n.power;
                return terms;
            } else if constexpr (std::is_same_v<T, MuNode>) {
                std::vector<Term> out;
                for (const auto& l : expand(n.left)) {
                    for (const auto& r : expand(n.right)) {
                        Term t{l.coefficient * r.coefficient, 0, "mu(" + l.key() + "," + r.key() + ")", l.counts};
                        for (const auto& [v, c] : r.counts) t.counts[v] += c;
                        out.push_back(std::move(t));
                    }
                }
                return out;
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                auto terms = expand(n.child);
                for (auto& t : terms) t.coefficient = n.factor * t.coefficient;
                return terms;
            } else {
                std::vector<Term> out;
                for (const auto& [sign, child] : n.terms) {
                    for (auto& t : expand(child)) {
                        if (sign < 0) t.coefficient = -t.coefficient;
                        out.push_back(std::move(t));
                    }
                }
                return out;
            }
        },
        e->node);
}

}  // namespace

bool is_multilinear(const IdentityAST& ast) {
    std::map<std::string, Term> combined;
    for (auto& t : expand(ast.body)) {
        auto [it, inserted] = combined.try_emplace(t.key(), t);
        if (!inserted) it->second.coefficient += t.coefficient;
    }
    for (const auto& [key, t] : combined) {
        if (t.coefficient.is_zero()) continue;
        for (const auto& v : ast.vars) {
            auto it = t.counts.find(v);
            if (it == t.counts.end() || it->second != 1) return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// checks

const char* to_string(Strategy s) noexcept { return s == Strategy::generic ? "generic" : "basis"; }

std::string generic_coordinate(const std::string& var, const std::string& label) { return var + "[" + label + "]"; }

Vector generic_element(const AlgebraSpec& a, const std::string& var) {
    Vector v(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) v[i] = Scalar::parameter(generic_coordinate(var, a.basis()[i]));
    return v;
}

namespace {

// Tries small integer points for the generic coordinates until the
// residual coordinate stays nonzero.
std::vector<std::pair<std::string, std::vector<Rational>>> find_counterexample(const AlgebraSpec& a,
                                                                               const IdentityAST& ast,
                                                                               const Scalar& residual) {
    std::mt19937 rng(20100101);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Bindings point;
        std::vector<std::pair<std::string, std::vector<Rational>>> values;
        for (const auto& v : ast.vars) {
            std::vector<Rational> coords;
            for (const auto& label : a.basis()) {
                // Early attempts use 0/1 points, which give readable witnesses.
                const int value = attempt < 16 ? static_cast<int>(rng() % 2U) : dist(rng);
                coords.emplace_back(value);
                point[generic_coordinate(v, label)] = value;
            }
            values.emplace_back(v, std::move(coords));
        }
        if (!residual.substitute(point).is_zero()) return values;
    }
    return {};
}

CheckReport check_generic(const AlgebraSpec& a, const IdentityAST& ast) {
    VectorBindings bindings;
    for (const auto& v : ast.vars) bindings.emplace(v, generic_element(a, v));
    Vector residual = evaluate(a, ast.body, bindings);
    CheckReport report;
    report.assumptions = algebra_assumptions(a);
    if (const auto k = residual.first_nonzero()) {
        report.verdict = Verdict::fails;
        Witness w;
        w.coordinate = k;
        w.counterexample = find_counterexample(a, ast, residual[*k]);
        w.note = "coordinate " + a.basis()[*k] + " of the residual is " + residual[*k].to_string();
        w.residual = std::move(residual);
        report.witness = std::move(w);
    }
    return finish_report(std::move(report));
}

CheckReport check_basis(const AlgebraSpec& a, const IdentityAST& ast) {
    if (!is_multilinear(ast))
        throw Error(ErrorKind::NotMultilinear, "identity '" + to_string(ast) + "' is not multilinear");
    CheckReport report;
    report.assumptions = algebra_assumptions(a);
    const std::size_t n = a.dim();
    const std::size_t k = ast.vars.size();
    std::vector<std::size_t> tuple(k, 0);
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis_vector(i));
    while (true) {
        VectorBindings bindings;
        for (std::size_t v = 0; v < k; ++v) bindings.emplace(ast.vars[v], basis[tuple[v]]);
        Vector residual = evaluate(a, ast.body, bindings);
        if (const auto c = residual.first_nonzero()) {
            report.verdict = Verdict::fails;
            Witness w;
            w.basis_tuple = tuple;
            w.coordinate = c;
            std::string where;
            for (std::size_t v = 0; v < k; ++v) where += (v ? ", " : "") + ast.vars[v] + "=" + a.basis()[tuple[v]];
            w.note = "at (" + where + ") the residual is " + format_vector(a, residual);
            w.residual = std::move(residual);
            report.witness = std::move(w);
            break;
        }
        std::size_t pos = k;
        while (pos > 0 && ++tuple[pos - 1] == n) tuple[--pos] = 0;
        if (pos == 0) break;
    }
    return finish_report(std::move(report));
}

}  // namespace

CheckReport check(const AlgebraSpec& a, const IdentityAST& ast, Strategy strategy) {
    return strategy == Strategy::generic ? check_generic(a, ast) : check_basis(a, ast);
}

CheckReport check(const AlgebraSpec& a, const BuiltinIdentity& identity, Strategy strategy) {
    CheckReport last;
    for (std::size_t i = 0; i < identity.clauses.size(); ++i) {
        last = check(a, identity.clauses[i], strategy);
        if (!last.ok()) {
            if (identity.clauses.size() > 1) last.notes.push_back("failing clause: " + identity.surface[i]);
            return last;
        }
    }
    return last;
}

CheckReport check(const AlgebraSpec& a, const BuiltinIdentity& identity) {
    CheckReport last;
    for (std::size_t i = 0; i < identity.clauses.size(); ++i) {
        const auto& clause = identity.clauses[i];
        last = check(a, clause, is_multilinear(clause) ? Strategy::basis : Strategy::generic);
        if (!last.ok()) {
            if (identity.clauses.size() > 1) last.notes.push_back("failing clause: " + identity.surface[i]);
            return last;
        }
    }
    return last;
}

CheckReport check_on_pair(const AlgebraSpec& a, const BuiltinIdentity& identity, const Vector& x, const Vector& y) {
    if (!(mul(a, x, y) + mul(a, y, x)).is_zero())
        throw Error(ErrorKind::Validation, "the supplied pair does not anticommute");
    CheckReport report;
    report.assumptions = algebra_assumptions(a);
    for (const auto& clause : identity.clauses) {
        VectorBindings bindings{{"x", x}, {"y", y}};
        for (const auto& v : clause.vars)
            if (!bindings.count(v)) bindings.emplace(v, generic_element(a, v));
        Vector residual = evaluate(a, clause, bindings);
        if (const auto k = residual.first_nonzero()) {
            report.verdict = Verdict::fails;
            Witness w;
            w.coordinate = k;
            w.note = "coordinate " + a.basis()[*k] + " of the residual is " + residual[*k].to_string();
            w.residual = std::move(residual);
            report.witness = std::move(w);
            break;
        }
    }
    return finish_report(std::move(report));
}

}  // namespace homalg
