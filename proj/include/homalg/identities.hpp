#pragma once

// Symbolic identities over an algebra: expression trees in variables, mu,
// iterated alpha and scalar coefficients, asserted equal to zero.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct VarNode {
    std::string name;
};
struct AlphaNode {
    unsigned power = 1;
    ExprPtr child;
};
struct MuNode {
    ExprPtr left;
    ExprPtr right;
};
struct ScaleNode {
    Scalar factor;
    ExprPtr child;
};
/// Signed sum; an empty sum is the zero element.
struct SumNode {
    std::vector<std::pair<int, ExprPtr>> terms;
};

struct Expr {
    std::variant<VarNode, AlphaNode, MuNode, ScaleNode, SumNode> node;
};

namespace expr {

ExprPtr var(std::string name);
ExprPtr al(ExprPtr child, unsigned power = 1);
ExprPtr mu(ExprPtr left, ExprPtr right);
ExprPtr scale(Scalar factor, ExprPtr child);
ExprPtr sum(std::vector<std::pair<int, ExprPtr>> terms);
ExprPtr zero();
bool is_zero_literal(const ExprPtr& e);

/// as_alpha(x, y, z) = mu(al(x), mu(y, z)) - mu(mu(x, y), al(z)).
ExprPtr hom_associator(ExprPtr x, ExprPtr y, ExprPtr z);

}  // namespace expr

bool same_structure(const ExprPtr& lhs, const ExprPtr& rhs);
std::string to_string(const ExprPtr& e);

struct IdentityAST {
    std::vector<std::string> vars;  // first-use order
    ExprPtr body;                   // asserted: body = 0
};

/// Normalizes `lhs = rhs` to `lhs - rhs = 0`; a zero rhs leaves lhs as body.
IdentityAST make_identity(const ExprPtr& lhs, const ExprPtr& rhs);
bool same_structure(const IdentityAST& lhs, const IdentityAST& rhs);
/// Surface syntax `BODY = 0`, accepted by parse_identity.
std::string to_string(const IdentityAST& ast);

struct BuiltinIdentity {
    std::string name;
    /// Conjunction; single-clause for every builtin except the
    /// noncommutative Hom-Jordan combination.
    std::vector<IdentityAST> clauses;
    /// Documented surface form of each clause.
    std::vector<std::string> surface;
    bool requires_commutative = false;
    /// Holds only under a hypothesis on the bound elements (anticommuting
    /// pairs); never part of a universal suite.
    bool conditional = false;
    /// Exploratory identities are evaluated and reported, never expected.
    bool exploratory = false;
    std::string description;

    const IdentityAST& ast() const { return clauses.front(); }
};

const std::vector<BuiltinIdentity>& builtins();
/// Throws UnknownIdentity.
const BuiltinIdentity& builtin(std::string_view name);

using VectorBindings = std::map<std::string, Vector>;

/// Throws MissingTwistMap when the algebra has no alpha.
Vector hom_associator(const AlgebraSpec& a, const Vector& x, const Vector& y, const Vector& z);

/// Throws UnboundVariable or MissingTwistMap.
Vector evaluate(const AlgebraSpec& a, const ExprPtr& e, const VectorBindings& bindings);
Vector evaluate(const AlgebraSpec& a, const IdentityAST& ast, const VectorBindings& bindings);

/// Every monomial of the distributed normal form uses each variable once.
bool is_multilinear(const IdentityAST& ast);

enum class Strategy { generic, basis };
const char* to_string(Strategy s) noexcept;

/// Name of the indeterminate standing for coordinate `label` of `var`.
std::string generic_coordinate(const std::string& var, const std::string& label);
Vector generic_element(const AlgebraSpec& a, const std::string& var);

/// Basis strategy throws NotMultilinear for a nonlinear identity.
CheckReport check(const AlgebraSpec& a, const IdentityAST& ast, Strategy strategy);
CheckReport check(const AlgebraSpec& a, const BuiltinIdentity& identity, Strategy strategy);
/// Strategy used when none is requested: basis for multilinear clauses,
/// generic otherwise.
CheckReport check(const AlgebraSpec& a, const BuiltinIdentity& identity);

/// Evaluates a conditional identity with x, y bound to the given
/// anticommuting pair and the remaining variables generic. Throws
/// Validation when mu(x, y) != -mu(y, x).
CheckReport check_on_pair(const AlgebraSpec& a, const BuiltinIdentity& identity, const Vector& x, const Vector& y);

}  // namespace homalg
