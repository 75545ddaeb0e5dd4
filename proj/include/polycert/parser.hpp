#ifndef POLYCERT_PARSER_HPP
#define POLYCERT_PARSER_HPP

// Recursive-descent front end for human-written univariate polynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] factor (('*' | <adjacency>) factor)*
//   factor  := base ('^' nonneg-integer)?
//   base    := rational-literal | variable | '(' expr ')'
//   rational-literal := integer ('/' positive-integer)?
//
// Adjacency (implicit multiplication) is accepted only right after a
// parenthesized factor and only before '(' or a variable, so "(x-1)(x-2)"
// and "(x-1)^2 x" parse but "2x" and "x(x-1)" do not. Decimal literals are
// rejected. U+2212 MINUS SIGN is accepted as '-'.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "polycert/error.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/rational.hpp"

namespace polycert {

struct ParseOptions {
    unsigned long max_exponent = 10'000;
    /// When set, the input may only use this variable name; it is also the
    /// name given to constant inputs.
    std::optional<std::string> variable;
};

struct ParseResult {
    Poly poly;
    std::string variable_name;
    /// Byte offset of every variable occurrence, for diagnostics.
    std::vector<std::size_t> variable_positions;
};

namespace detail {

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t position;
};

inline std::string describe(const Token& t) {
    switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::Number: return "number '" + std::string(t.text) + "'";
    case TokenKind::Identifier: return "variable '" + std::string(t.text) + "'";
    default: return "'" + std::string(t.text) + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    Token next() {
        skip_space();
        if (pos_ >= input_.size())
            return {TokenKind::End, {}, pos_};
        std::size_t start = pos_;
        unsigned char c = static_cast<unsigned char>(input_[pos_]);
        if (std::isdigit(c)) {
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_])))
                ++pos_;
            if (pos_ < input_.size() && (input_[pos_] == '.' || input_[pos_] == 'e' || input_[pos_] == 'E'))
                throw ParseError(ErrorKind::SyntaxError, pos_,
                                 "decimal and exponent literals are not supported; write an exact rational such as 3/2");
            return {TokenKind::Number, input_.substr(start, pos_ - start), start};
        }
        if (std::isalpha(c) || c == '_') {
            while (pos_ < input_.size() &&
                   (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_'))
                ++pos_;
            return {TokenKind::Identifier, input_.substr(start, pos_ - start), start};
        }
        // U+2212 MINUS SIGN, UTF-8 E2 88 92
        if (input_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return {TokenKind::Minus, input_.substr(start, 3), start};
        }
        ++pos_;
        switch (c) {
        case '+': return {TokenKind::Plus, input_.substr(start, 1), start};
        case '-': return {TokenKind::Minus, input_.substr(start, 1), start};
        case '*': return {TokenKind::Star, input_.substr(start, 1), start};
        case '^': return {TokenKind::Caret, input_.substr(start, 1), start};
        case '/': return {TokenKind::Slash, input_.substr(start, 1), start};
        case '(': return {TokenKind::LParen, input_.substr(start, 1), start};
        case ')': return {TokenKind::RParen, input_.substr(start, 1), start};
        case '.':
            throw ParseError(ErrorKind::SyntaxError, start,
                             "decimal literals are not supported; write an exact rational such as 3/2");
        default:
            throw ParseError(ErrorKind::SyntaxError, start,
                             "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
        }
    }

private:
    void skip_space() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view input, const ParseOptions& options)
        : lexer_(input), options_(options), current_(lexer_.next()) {
        if (options_.variable)
            variable_ = *options_.variable;
    }

    ParseResult run() {
        if (current_.kind == TokenKind::End)
            throw ParseError(ErrorKind::SyntaxError, current_.position, "expected an expression, found end of input");
        Poly p = expr();
        if (current_.kind != TokenKind::End)
            throw ParseError(ErrorKind::SyntaxError, current_.position,
                             "expected '+', '-', '*' or end of input, found " + describe(current_));
        std::string name = variable_.value_or("x");
        p.set_variable(name);
        return ParseResult{std::move(p), std::move(name), std::move(positions_)};
    }

private:
    struct Factor {
        Poly value;
        bool parenthesized;
    };

    void advance() { current_ = lexer_.next(); }

    Poly constant(const Rat& c) const { return Poly::constant(c); }

    Poly expr() {
        Poly acc = term();
        while (current_.kind == TokenKind::Plus || current_.kind == TokenKind::Minus) {
            bool minus = current_.kind == TokenKind::Minus;
            advance();
            Poly rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Poly term() {
        bool negate = false;
        if (current_.kind == TokenKind::Minus) {
            negate = true;
            advance();
        }
        Factor f = factor();
        Poly acc = std::move(f.value);
        bool after_paren = f.parenthesized;
        for (;;) {
            if (current_.kind == TokenKind::Star) {
                advance();
                f = factor();
            } else if (current_.kind == TokenKind::LParen || current_.kind == TokenKind::Identifier) {
                if (!after_paren)
                    throw ParseError(ErrorKind::SyntaxError, current_.position,
                                     "expected '*' before " + describe(current_) +
                                         " (implicit multiplication only follows a closing parenthesis)");
                f = factor();
            } else if (current_.kind == TokenKind::Number) {
                throw ParseError(ErrorKind::SyntaxError, current_.position,
                                 "expected '*' before " + describe(current_));
            } else {
                break;
            }
            acc *= f.value;
            after_paren = f.parenthesized;
        }
        if (negate)
            acc = -acc;
        return acc;
    }

    Factor factor() {
        Factor b = base();
        if (current_.kind != TokenKind::Caret)
            return b;
        advance();
        if (current_.kind == TokenKind::Minus)
            throw ParseError(ErrorKind::NegativeExponent, current_.position, "exponents must be nonnegative integers");
        if (current_.kind != TokenKind::Number)
            throw ParseError(ErrorKind::SyntaxError, current_.position,
                             "expected a nonnegative integer exponent, found " + describe(current_));
        Int e(std::string(current_.text), 10);
        if (e > options_.max_exponent)
            throw ParseError(ErrorKind::ExponentTooLarge, current_.position,
                             "exponent " + std::string(current_.text) + " exceeds the limit of " +
                                 std::to_string(options_.max_exponent));
        advance();
        b.value = pow(std::move(b.value), e.get_ui());
        return b;
    }

    Factor base() {
        switch (current_.kind) {
        case TokenKind::Number: {
            Int num(std::string(current_.text), 10);
            advance();
            if (current_.kind != TokenKind::Slash)
                return {constant(Rat(num)), false};
            advance();
            if (current_.kind != TokenKind::Number)
                throw ParseError(ErrorKind::SyntaxError, current_.position,
                                 "expected a positive integer denominator, found " + describe(current_));
            Int den(std::string(current_.text), 10);
            if (den == 0)
                throw ParseError(ErrorKind::SyntaxError, current_.position, "denominator must be positive");
            advance();
            return {constant(make_rat(num, den)), false};
        }
        case TokenKind::Identifier: {
            if (!variable_) {
                variable_ = std::string(current_.text);
            } else if (*variable_ != current_.text) {
                throw ParseError(ErrorKind::MultipleVariables, current_.position,
                                 "found variable '" + std::string(current_.text) + "' but the polynomial is in '" +
                                     *variable_ + "'");
            }
            positions_.push_back(current_.position);
            advance();
            return {Poly::identity(), false};
        }
        case TokenKind::LParen: {
            advance();
            Poly inner = expr();
            if (current_.kind != TokenKind::RParen)
                throw ParseError(ErrorKind::SyntaxError, current_.position, "expected ')', found " + describe(current_));
            advance();
            return {std::move(inner), true};
        }
        default:
            throw ParseError(ErrorKind::SyntaxError, current_.position,
                             "expected a number, variable or '(', found " + describe(current_));
        }
    }

    Lexer lexer_;
    const ParseOptions& options_;
    Token current_;
    std::optional<std::string> variable_;
    std::vector<std::size_t> positions_;
};

} // namespace detail

inline ParseResult parse(std::string_view input, const ParseOptions& options = {}) {
    return detail::Parser(input, options).run();
}

} // namespace polycert

#endif // POLYCERT_PARSER_HPP
