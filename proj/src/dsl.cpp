#include "qseries/dsl.hpp"

#include <cctype>
#include <sstream>

#include "qseries/macmahon.hpp"
#include "qseries/products.hpp"

namespace qseries::dsl {

namespace {

// U+2212 MINUS SIGN, accepted wherever '-' is.
constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool is_operand(const std::vector<Token>& tokens) {
    if (tokens.empty()) {
        return false;
    }
    const TokenKind k = tokens.back().kind;
    return k == TokenKind::identifier || k == TokenKind::integer || k == TokenKind::rparen;
}

struct Signature {
    std::string_view name;
    int arity;
    bool first_is_expr;
};

constexpr Signature kCalls[] = {
    {"poch", 2, false}, {"A", 1, false},      {"C", 1, false},   {"B", 2, false},
    {"D", 2, false},    {"Agen", 3, false},   {"theta6", 0, false}, {"R14", 0, false},
    {"R23", 0, false},  {"F5", 0, false},     {"inv", 1, true},  {"shift", 2, true},
};

const Signature* find_call(std::string_view name) {
    for (const auto& s : kCalls) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

class Parser {
public:
    Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (pos_ < tokens_.size()) {
            throw ParseError("unexpected '" + tokens_[pos_].text + "'", tokens_[pos_].span);
        }
        return e;
    }

private:
    const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

    bool accept(TokenKind k) {
        if (peek() && peek()->kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    Span end_span() const {
        const std::size_t at = tokens_.empty() ? 0 : tokens_.back().span.end;
        return {at, at};
    }

    [[noreturn]] void unexpected(const char* wanted) const {
        if (const Token* t = peek()) {
            throw ParseError(std::string("expected ") + wanted + ", found '" + t->text + "'", t->span);
        }
        throw ParseError(std::string("expected ") + wanted + ", found end of input", end_span());
    }

    static ExprPtr binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->span = {lhs->span.begin, rhs->span.end};
        e->args.push_back(std::move(lhs));
        e->args.push_back(std::move(rhs));
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (const Token* t = peek()) {
            if (t->kind != TokenKind::plus && t->kind != TokenKind::minus) {
                break;
            }
            ++pos_;
            lhs = binary(t->kind == TokenKind::plus ? Expr::Kind::add : Expr::Kind::sub,
                         std::move(lhs), term());
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (accept(TokenKind::star)) {
            lhs = binary(Expr::Kind::mul, std::move(lhs), factor());
        }
        return lhs;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!accept(TokenKind::caret)) {
            return base;
        }
        const Token* t = peek();
        if (!t || t->kind != TokenKind::integer) {
            unexpected("an integer exponent");
        }
        ++pos_;
        const Integer k(t->text);
        if (!k.fits_slong_p()) {
            throw ParseError("exponent out of range", t->span);
        }
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::pow;
        e->power = k.get_si();
        e->span = {base->span.begin, t->span.end};
        e->args.push_back(std::move(base));
        return e;
    }

    ExprPtr atom() {
        const Token* t = peek();
        if (!t) {
            unexpected("an expression");
        }
        switch (t->kind) {
            case TokenKind::lparen: {
                ++pos_;
                ExprPtr inner = expr();
                if (!accept(TokenKind::rparen)) {
                    unexpected("')'");
                }
                return inner;
            }
            case TokenKind::integer: {
                ++pos_;
                auto e = std::make_unique<Expr>();
                e->kind = Expr::Kind::integer;
                e->value = Integer(t->text);
                e->span = t->span;
                return e;
            }
            case TokenKind::identifier:
                ++pos_;
                if (t->text == "q") {
                    auto e = std::make_unique<Expr>();
                    e->kind = Expr::Kind::q;
                    e->span = t->span;
                    return e;
                }
                return call(*t);
            default:
                unexpected("an expression");
        }
    }

    ExprPtr call(const Token& name) {
        const Signature* sig = find_call(name.text);
        if (!sig) {
            throw ParseError("unknown name '" + name.text + "'", name.span);
        }
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::call;
        e->name = name.text;
        e->span = name.span;
        if (accept(TokenKind::lparen)) {
            if (!accept(TokenKind::rparen)) {
                do {
                    e->args.push_back(expr());
                } while (accept(TokenKind::comma));
                if (!peek() || peek()->kind != TokenKind::rparen) {
                    unexpected("',' or ')'");
                }
                ++pos_;
            }
            e->span.end = tokens_[pos_ - 1].span.end;
        }
        if (static_cast<int>(e->args.size()) != sig->arity) {
            throw ParseError(e->name + " expects " + std::to_string(sig->arity) + " argument" +
                                 (sig->arity == 1 ? "" : "s") + ", got " +
                                 std::to_string(e->args.size()),
                             e->span);
        }
        for (std::size_t i = sig->first_is_expr ? 1 : 0; i < e->args.size(); ++i) {
            const Expr& a = *e->args[i];
            if (a.kind != Expr::Kind::integer || !a.value.fits_slong_p()) {
                throw ParseError("argument " + std::to_string(i + 1) + " of " + e->name +
                                     " must be an integer literal",
                                 a.span);
            }
        }
        return e;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

// Raised when inv meets a series that is zero only at the current working order.
struct ZeroAtWorkingOrder {
    Span span;
};

Exponent int_arg(const Expr& call, std::size_t i) { return call.args[i]->value.get_si(); }

Series eval_node(const Expr& e, Exponent w);

Series eval_call(const Expr& e, Exponent w) {
    const std::string& n = e.name;
    if (n == "inv") {
        const Series x = eval_node(*e.args[0], w);
        if (x.is_zero()) {
            throw ZeroAtWorkingOrder{e.span};
        }
        return invert(x);
    }
    if (n == "shift") {
        return shift(eval_node(*e.args[0], w), int_arg(e, 1));
    }
    if (n == "poch") {
        const Exponent a = int_arg(e, 0);
        const Exponent d = int_arg(e, 1);
        if (a < 0 || d < 1) {
            throw DomainError("poch needs a >= 0 and d >= 1");
        }
        return pochhammer(a, d, w);
    }
    if (n == "theta6") {
        return theta6(w);
    }
    if (n == "R14" || n == "R23" || n == "F5") {
        auto rr = rr_products(w);
        return n == "R14" ? rr.r14 : n == "R23" ? rr.r23 : rr.f5;
    }
    FamilySpec spec;
    Exponent k = int_arg(e, 0);
    if (n == "A") {
        spec = FamilySpec::a();
    } else if (n == "C") {
        spec = FamilySpec::c();
    } else if (n == "B") {
        spec = FamilySpec::b(int_arg(e, 1));
    } else if (n == "D") {
        spec = FamilySpec::d(int_arg(e, 1));
    } else {
        spec = FamilySpec::agen(int_arg(e, 0), int_arg(e, 1));
        k = int_arg(e, 2);
    }
    return family_series(spec, k, w);
}

Series eval_node(const Expr& e, Exponent w) {
    try {
        switch (e.kind) {
            case Expr::Kind::integer:
                return Series::monomial(e.value, 0, w);
            case Expr::Kind::q:
                return Series::monomial(1, 1, w);
            case Expr::Kind::add:
                return eval_node(*e.args[0], w) + eval_node(*e.args[1], w);
            case Expr::Kind::sub:
                return eval_node(*e.args[0], w) - eval_node(*e.args[1], w);
            case Expr::Kind::mul:
                return eval_node(*e.args[0], w) * eval_node(*e.args[1], w);
            case Expr::Kind::pow: {
                const Series base = eval_node(*e.args[0], w);
                if (e.power < 0 && base.is_zero()) {
                    throw ZeroAtWorkingOrder{e.span};
                }
                return pow(base, e.power);
            }
            case Expr::Kind::call:
                return eval_call(e, w);
        }
    } catch (const DslError&) {
        throw;
    } catch (const Error& err) {
        throw EvalError(err.what(), e.span);
    }
    throw EvalError("bad expression node", e.span);
}

void render(const Expr& e, std::ostringstream& os) {
    switch (e.kind) {
        case Expr::Kind::integer:
            os << e.value;
            return;
        case Expr::Kind::q:
            os << "q";
            return;
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
            os << "(";
            render(*e.args[0], os);
            os << (e.kind == Expr::Kind::add ? " + " : e.kind == Expr::Kind::sub ? " - " : " * ");
            render(*e.args[1], os);
            os << ")";
            return;
        case Expr::Kind::pow: {
            const bool wrap = e.args[0]->kind == Expr::Kind::pow;
            os << (wrap ? "(" : "");
            render(*e.args[0], os);
            os << (wrap ? ")" : "") << "^" << e.power;
            return;
        }
        case Expr::Kind::call:
            os << e.name;
            if (!e.args.empty()) {
                os << "(";
                for (std::size_t i = 0; i < e.args.size(); ++i) {
                    os << (i ? ", " : "");
                    render(*e.args[i], os);
                }
                os << ")";
            }
            return;
    }
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        const unsigned char c = static_cast<unsigned char>(input[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        bool minus = false;
        std::size_t minus_len = 0;
        if (c == '-') {
            minus = true;
            minus_len = 1;
        } else if (input.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            minus = true;
            minus_len = kUnicodeMinus.size();
        }
        if (minus) {
            const std::size_t next = i + minus_len;
            if (!is_operand(out) && next < input.size() &&
                std::isdigit(static_cast<unsigned char>(input[next]))) {
                std::size_t j = next;
                while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) {
                    ++j;
                }
                out.push_back({TokenKind::integer, "-" + std::string(input.substr(next, j - next)),
                               {start, j}});
                i = j;
            } else {
                out.push_back({TokenKind::minus, "-", {start, next}});
                i = next;
            }
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) {
                ++j;
            }
            out.push_back({TokenKind::integer, std::string(input.substr(i, j - i)), {i, j}});
            i = j;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_')) {
                ++j;
            }
            out.push_back({TokenKind::identifier, std::string(input.substr(i, j - i)), {i, j}});
            i = j;
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+':
                kind = TokenKind::plus;
                break;
            case '*':
                kind = TokenKind::star;
                break;
            case '^':
                kind = TokenKind::caret;
                break;
            case '(':
                kind = TokenKind::lparen;
                break;
            case ')':
                kind = TokenKind::rparen;
                break;
            case ',':
                kind = TokenKind::comma;
                break;
            default:
                throw LexError("illegal character at offset " + std::to_string(i), {i, i + 1});
        }
        out.push_back({kind, std::string(1, static_cast<char>(c)), {i, i + 1}});
        ++i;
    }
    return out;
}

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view input) { return parse(tokenize(input)); }

std::string to_string(const Expr& e) {
    std::ostringstream os;
    render(e, os);
    return os.str();
}

bool same_structure(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value || a.power != b.power || a.name != b.name ||
        a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!same_structure(*a.args[i], *b.args[i])) {
            return false;
        }
    }
    return true;
}

Series eval(const Expr& e, Exponent order) {
    if (order < 0) {
        throw EvalError("order must be >= 0", e.span);
    }
    // inv and negative shifts lose precision; raise the working order until
    // the result covers the request. A series that stays zero up to this cap
    // is treated as exactly zero.
    const Exponent cap = 4 * order + 256;
    Exponent w = order;
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            const Series r = eval_node(e, w);
            if (r.order() >= order) {
                return r.truncate(order);
            }
            w += order - r.order();
        } catch (const ZeroAtWorkingOrder& z) {
            if (w >= cap) {
                throw EvalError("cannot invert the zero series", z.span);
            }
            w = std::min(cap, 2 * w + 16);
        }
    }
    throw EvalError("could not reach the requested order", e.span);
}

Series eval(std::string_view input, Exponent order) { return eval(*parse(input), order); }

}  // namespace qseries::dsl
