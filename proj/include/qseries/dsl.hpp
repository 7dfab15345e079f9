#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/series.hpp"

namespace qseries::dsl {

/// Half-open byte range [begin, end) in the source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const Span&, const Span&) = default;
};

/// Any lexical, syntax or evaluation error; carries the offending span.
class DslError : public Error {
public:
    DslError(const std::string& what, Span span) : Error(what), span_(span) {}
    Span span() const noexcept { return span_; }

private:
    Span span_;
};

class LexError : public DslError {
public:
    using DslError::DslError;
};

class ParseError : public DslError {
public:
    using DslError::DslError;
};

class EvalError : public DslError {
public:
    using DslError::DslError;
};

enum class TokenKind { identifier, integer, plus, minus, star, caret, lparen, rparen, comma };

struct Token {
    TokenKind kind;
    std::string text;
    Span span;
};

std::vector<Token> tokenize(std::string_view input);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { integer, q, add, sub, mul, pow, call };

    Kind kind = Kind::integer;
    Integer value;              // integer literal
    Exponent power = 0;         // pow exponent
    std::string name;           // call name
    std::vector<ExprPtr> args;  // operands: lhs/rhs, pow base, call arguments
    Span span;
};

ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view input);

/// Fully parenthesized rendering that parses back to the same structure.
std::string to_string(const Expr& e);

/// Structural equality ignoring spans.
bool same_structure(const Expr& a, const Expr& b);

/// Evaluates to truncation order N; the result always has order exactly N.
Series eval(const Expr& e, Exponent order);
Series eval(std::string_view input, Exponent order);

}  // namespace qseries::dsl
