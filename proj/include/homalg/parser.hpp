#pragma once

// Surface syntax for scalars and identities.
//
//   scalar:   expr := term (('+'|'-') term)*      term := factor (('*'|'/') factor)*
//             factor := '-' factor | base ('^' uint)?
//             base := integer | parameter | '(' expr ')'
//
//   identity: equation := iexpr '=' iexpr
//             iexpr := ['-'] iterm (('+'|'-') iterm)*
//             iterm := [scalar '*'] ifactor
//             ifactor := ident | 'al' ['^' uint] '(' iexpr ')' | 'mu' '(' iexpr ',' iexpr ')'
//                      | '(' iexpr ')' | '0'

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/error.hpp"
#include "homalg/identities.hpp"

namespace homalg {

struct SourcePosition {
    std::size_t offset = 0;  // bytes
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Positioned syntax failure. kind() is Parse, Arity or UndeclaredParameter.
class ParseError : public Error {
   public:
    ParseError(ErrorKind kind, SourcePosition position, std::string expected, std::string found);

    const SourcePosition& position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

   private:
    SourcePosition position_;
    std::string expected_;
    std::string found_;
};

Scalar parse_scalar_expr(std::string_view text, const std::vector<std::string>& params);
Scalar parse_scalar_expr(std::string_view text, const std::vector<Parameter>& params);

/// Identifiers other than `al`, `mu` and the given parameters are variables.
IdentityAST parse_identity(std::string_view text, const std::vector<std::string>& params = {});

}  // namespace homalg
