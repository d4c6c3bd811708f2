#include "homalg/parser.hpp"

#include <algorithm>
#include <cctype>

namespace homalg {

namespace {

std::string describe(ErrorKind kind, const SourcePosition& at, const std::string& expected, const std::string& found) {
    std::string out = "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": ";
    if (kind == ErrorKind::UndeclaredParameter) return out + "undeclared parameter '" + found + "'";
    return out + "expected " + expected + ", found " + (found.empty() ? "end of input" : "'" + found + "'");
}

}  // namespace

ParseError::ParseError(ErrorKind kind, SourcePosition position, std::string expected, std::string found)
    : Error(kind, describe(kind, position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, comma, equals, end };

struct Token {
    Tok kind;
    std::string text;
    SourcePosition at;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    SourcePosition pos;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[pos.offset] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
            ++pos.offset;
        }
    };
    while (pos.offset < text.size()) {
        const auto c = static_cast<unsigned char>(text[pos.offset]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        const SourcePosition start = pos;
        std::size_t len = 1;
        Tok kind;
        if (std::isalpha(c) || c == '_') {
            while (pos.offset + len < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos.offset + len])) || text[pos.offset + len] == '_'))
                ++len;
            kind = Tok::ident;
        } else if (std::isdigit(c)) {
            while (pos.offset + len < text.size() && std::isdigit(static_cast<unsigned char>(text[pos.offset + len])))
                ++len;
            kind = Tok::number;
        } else {
            switch (c) {
                case '+': kind = Tok::plus; break;
                case '-': kind = Tok::minus; break;
                case '*': kind = Tok::star; break;
                case '/': kind = Tok::slash; break;
                case '^': kind = Tok::caret; break;
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case ',': kind = Tok::comma; break;
                case '=': kind = Tok::equals; break;
                default:
                    throw ParseError(ErrorKind::Parse, start, "a token", std::string(1, static_cast<char>(c)));
            }
        }
        out.push_back({kind, std::string(text.substr(pos.offset, len)), start});
        advance(len);
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

class Parser {
   public:
    Parser(std::string_view text, std::vector<std::string> params) : tokens_(lex(text)), params_(std::move(params)) {}

    Scalar scalar_document() {
        Scalar s = scalar_expr();
        expect(Tok::end, "end of input");
        return s;
    }

    IdentityAST identity_document() {
        ExprPtr lhs = iexpr();
        expect(Tok::equals, "'='");
        ExprPtr rhs = iexpr();
        expect(Tok::end, "end of input");
        return make_identity(lhs, rhs);
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok kind) const { return peek().kind == kind; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected, ErrorKind kind = ErrorKind::Parse) const {
        throw ParseError(kind, peek().at, expected, peek().text);
    }

    const Token& expect(Tok kind, const std::string& expected) {
        if (!at(kind)) fail(expected);
        return take();
    }

    bool is_param(const std::string& name) const {
        return std::find(params_.begin(), params_.end(), name) != params_.end();
    }

    unsigned uint_literal() {
        const Token& t = expect(Tok::number, "an unsigned integer");
        if (t.text.size() > 9) throw ParseError(ErrorKind::Parse, t.at, "a small exponent", t.text);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    // ---- scalars

    Scalar scalar_expr() {
        Scalar acc = scalar_term();
        while (at(Tok::plus) || at(Tok::minus)) {
            const bool minus = take().kind == Tok::minus;
            Scalar rhs = scalar_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Scalar scalar_term() {
        Scalar acc = scalar_factor();
        while (at(Tok::star) || at(Tok::slash)) {
            const Token& op = take();
            const SourcePosition where = peek().at;
            Scalar rhs = scalar_factor();
            if (op.kind == Tok::star) {
                acc = acc * rhs;
            } else {
                if (rhs.is_zero()) throw ParseError(ErrorKind::Parse, where, "a nonzero divisor", "0");
                acc = acc / rhs;
            }
        }
        return acc;
    }

    Scalar scalar_factor() {
        if (at(Tok::minus)) {
            take();
            return -scalar_factor();
        }
        Scalar base = scalar_base();
        if (at(Tok::caret)) {
            take();
            base = base.pow(uint_literal());
        }
        return base;
    }

    Scalar scalar_base() {
        if (at(Tok::number)) return Scalar(Rational(mpz_class(take().text)));
        if (at(Tok::ident)) {
            if (!is_param(peek().text))
                throw ParseError(ErrorKind::UndeclaredParameter, peek().at, "a declared parameter", peek().text);
            return Scalar::parameter(take().text);
        }
        if (at(Tok::lparen)) {
            take();
            Scalar inner = scalar_expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail("a number, parameter or '('");
    }

    // A coefficient in front of '*': scalar factors joined by '*' or '/',
    // stopping before a '*' whose right side is not a scalar.
    Scalar coefficient() {
        Scalar acc = scalar_factor();
        while (true) {
            if (at(Tok::slash)) {
                take();
                acc = acc / scalar_factor();
                continue;
            }
            if (at(Tok::star)) {
                const std::size_t save = pos_;
                take();
                try {
                    Scalar next = scalar_factor();
                    acc = acc * next;
                    continue;
                } catch (const ParseError&) {
                    pos_ = save;
                }
            }
            return acc;
        }
    }

    // ---- identities

    ExprPtr iexpr() {
        std::vector<std::pair<int, ExprPtr>> terms;
        int sign = +1;
        if (at(Tok::minus)) {
            take();
            sign = -1;
        }
        terms.emplace_back(sign, iterm());
        while (at(Tok::plus) || at(Tok::minus)) {
            sign = take().kind == Tok::minus ? -1 : +1;
            terms.emplace_back(sign, iterm());
        }
        if (terms.size() == 1 && terms.front().first > 0) return terms.front().second;
        return expr::sum(std::move(terms));
    }

    ExprPtr iterm() {
        const std::size_t save = pos_;
        try {
            Scalar c = coefficient();
            if (at(Tok::star)) {
                take();
                return expr::scale(std::move(c), ifactor());
            }
        } catch (const ParseError&) {
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DivisionByZero) throw;
        }
        pos_ = save;
        return ifactor();
    }

    ExprPtr ifactor() {
        if (at(Tok::number)) {
            if (peek().text.find_first_not_of('0') == std::string::npos) {
                take();
                return expr::zero();
            }
            fail("a variable, 'al', 'mu' or '('");
        }
        if (at(Tok::lparen)) {
            take();
            ExprPtr inner = iexpr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (!at(Tok::ident)) fail("a variable, 'al', 'mu' or '('");
        const Token& name = take();
        if (name.text == "al") {
            unsigned power = 1;
            if (at(Tok::caret)) {
                take();
                const Token& k = peek();
                power = uint_literal();
                if (power == 0) throw ParseError(ErrorKind::Parse, k.at, "an alpha power of at least 1", k.text);
            }
            expect(Tok::lparen, "'(' after 'al'");
            ExprPtr child = iexpr();
            if (at(Tok::comma)) fail("')' (al takes one argument)", ErrorKind::Arity);
            expect(Tok::rparen, "')'");
            return expr::al(std::move(child), power);
        }
        if (name.text == "mu") {
            expect(Tok::lparen, "'(' after 'mu'");
            ExprPtr left = iexpr();
            if (at(Tok::rparen)) fail("',' (mu takes two arguments)", ErrorKind::Arity);
            expect(Tok::comma, "','");
            ExprPtr right = iexpr();
            if (at(Tok::comma)) fail("')' (mu takes two arguments)", ErrorKind::Arity);
            expect(Tok::rparen, "')'");
            return expr::mu(std::move(left), std::move(right));
        }
        if (at(Tok::lparen)) throw ParseError(ErrorKind::Parse, peek().at, "an operator after variable", "(");
        return expr::var(name.text);
    }

    std::vector<Token> tokens_;
    std::vector<std::string> params_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar_expr(std::string_view text, const std::vector<std::string>& params) {
    Parser p(text, params);
    return p.scalar_document();
}

Scalar parse_scalar_expr(std::string_view text, const std::vector<Parameter>& params) {
    std::vector<std::string> names;
    for (const auto& param : params) names.push_back(param.name);
    return parse_scalar_expr(text, names);
}

IdentityAST parse_identity(std::string_view text, const std::vector<std::string>& params) {
    Parser p(text, params);
    return p.identity_document();
}

}  // namespace homalg
