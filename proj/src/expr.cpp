#include "minadet/expr.hpp"

#include <cctype>
#include <utility>

namespace minadet {

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Kind kind;
    size_t pos;
    std::string text;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Int: return "integer";
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Minus: return "'-'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Slash: return "'/'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::Int, start, std::string(src.substr(start, i - start))});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Token::Kind::Ident, start, std::string(src.substr(start, i - start))});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '/': k = Token::Kind::Slash; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case ',': k = Token::Kind::Comma; break;
            default:
                throw ParseError(start, std::string("syntax error: unexpected character '") + c + "'");
        }
        out.push_back({k, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Token::Kind::End, src.size(), ""});
    return out;
}

AstPtr make_node(Ast n) { return std::make_shared<const Ast>(std::move(n)); }

AstPtr make_binary(Ast::Kind kind, size_t pos, AstPtr lhs, AstPtr rhs) {
    Ast n;
    n.kind = kind;
    n.pos = pos;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    return make_node(std::move(n));
}

AstPtr make_literal(size_t pos, Rat v) {
    Ast n;
    n.kind = Ast::Kind::Literal;
    n.pos = pos;
    n.lit = std::move(v);
    return make_node(std::move(n));
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    AstPtr parse() {
        AstPtr e = expr();
        expect(Token::Kind::End);
        return e;
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    Token take() { return toks_[idx_++]; }
    bool at(Token::Kind k) const { return peek().kind == k; }

    Token expect(Token::Kind k) {
        if (!at(k))
            throw ParseError(peek().pos, std::string("syntax error: expected ") + token_name(k) +
                                             ", found " + token_name(peek().kind));
        return take();
    }

    long expect_int() {
        Token t = expect(Token::Kind::Int);
        try {
            return std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError(t.pos, "syntax error: integer literal out of range");
        }
    }

    AstPtr expr() {
        AstPtr lhs = term();
        while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
            Token op = take();
            AstPtr rhs = term();
            lhs = make_binary(op.kind == Token::Kind::Plus ? Ast::Kind::Add : Ast::Kind::Sub,
                              op.pos, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    AstPtr term() {
        AstPtr lhs = factor();
        while (at(Token::Kind::Star) || at(Token::Kind::Slash)) {
            Token op = take();
            AstPtr rhs = factor();
            lhs = make_binary(op.kind == Token::Kind::Star ? Ast::Kind::Mul : Ast::Kind::Div,
                              op.pos, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    AstPtr factor() {
        if (at(Token::Kind::Minus)) {
            Token op = take();
            return make_binary(Ast::Kind::Sub, op.pos, make_literal(op.pos, Rat(0)), factor());
        }
        return power();
    }

    AstPtr power() {
        AstPtr base = atom();
        if (!at(Token::Kind::Caret)) return base;
        Token op = take();
        Ast n;
        n.kind = Ast::Kind::Pow;
        n.pos = op.pos;
        n.lhs = std::move(base);
        n.lit = exponent();
        return make_node(std::move(n));
    }

    // INT, or a parenthesized signed rational literal.
    Rat exponent() {
        if (at(Token::Kind::Int)) return Rat(expect_int());
        if (at(Token::Kind::LParen)) {
            take();
            bool neg = false;
            if (at(Token::Kind::Minus)) {
                take();
                neg = true;
            }
            long num = expect_int();
            long den = 1;
            if (at(Token::Kind::Slash)) {
                take();
                Token dt = peek();
                den = expect_int();
                if (den == 0) throw ParseError(dt.pos, "syntax error: zero denominator in exponent");
            }
            expect(Token::Kind::RParen);
            return Rat(neg ? -num : num, den);
        }
        throw ParseError(peek().pos, std::string("syntax error: expected integer or '(', found ") +
                                         token_name(peek().kind));
    }

    AstPtr atom() {
        if (at(Token::Kind::Int)) {
            Token t = peek();
            return make_literal(t.pos, Rat(expect_int()));
        }
        if (at(Token::Kind::LParen)) {
            take();
            AstPtr e = expr();
            expect(Token::Kind::RParen);
            return e;
        }
        if (at(Token::Kind::Ident)) {
            Token t = take();
            if (t.text == "x") {
                Ast n;
                n.kind = Ast::Kind::Var;
                n.pos = t.pos;
                return make_node(std::move(n));
            }
            if (t.text == "exp" || t.text == "log" || t.text == "sqrt") {
                expect(Token::Kind::LParen);
                AstPtr arg = expr();
                expect(Token::Kind::RParen);
                Ast n;
                n.kind = Ast::Kind::Call;
                n.pos = t.pos;
                n.name = t.text;
                n.lhs = std::move(arg);
                return make_node(std::move(n));
            }
            if (t.text == "catalan") {
                Ast n;
                n.kind = Ast::Kind::Builder;
                n.pos = t.pos;
                n.name = t.text;
                return make_node(std::move(n));
            }
            if (t.text == "sumpow") {
                expect(Token::Kind::LParen);
                long p = expect_int();
                expect(Token::Kind::RParen);
                Ast n;
                n.kind = Ast::Kind::Builder;
                n.pos = t.pos;
                n.name = t.text;
                n.args.push_back(p);
                return make_node(std::move(n));
            }
            if (t.text == "expset") {
                expect(Token::Kind::LParen);
                Ast n;
                n.kind = Ast::Kind::Builder;
                n.pos = t.pos;
                n.name = t.text;
                n.args.push_back(expect_int());
                while (at(Token::Kind::Comma)) {
                    take();
                    n.args.push_back(expect_int());
                }
                expect(Token::Kind::RParen);
                return make_node(std::move(n));
            }
            throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
        }
        throw ParseError(peek().pos, std::string("syntax error: expected a value, found ") +
                                         token_name(peek().kind));
    }

    std::vector<Token> toks_;
    size_t idx_ = 0;
};

std::string render_rat_literal(const Rat& r) { return r.str(); }

// Inverts a series with nonzero constant term: scale to a unit constant
// term, take the -1 power, scale back.
Series<Rat> invert_unit_part(const Series<Rat>& d, size_t pos) {
    Rat c = d.constant_term();
    if (c.is_zero()) throw EvalError(pos, "division by zero series");
    if (c.is_one()) return series_pow_scalar(d, Rat(-1));
    Series<Rat> unit = mul_const(d, c.inverse());
    return mul_const(series_pow_scalar(unit, Rat(-1)), c.inverse());
}

Series<Rat> eval_node(const Ast& a, int ord);

Series<Rat> eval_div(const Ast& a, int ord) {
    // Probe the denominator's valuation; re-probe deeper once before
    // declaring it a zero series, so x^k/x^k works at small orders.
    Series<Rat> den_probe = eval_node(*a.rhs, ord);
    int v = 0;
    while (v <= den_probe.order() && den_probe.coeff(v).is_zero()) ++v;
    if (v > den_probe.order()) {
        den_probe = eval_node(*a.rhs, ord + 32);
        v = 0;
        while (v <= den_probe.order() && den_probe.coeff(v).is_zero()) ++v;
        if (v > den_probe.order()) throw EvalError(a.rhs->pos, "division by zero series");
    }
    if (v == 0) {
        Series<Rat> num = eval_node(*a.lhs, ord);
        return num * invert_unit_part(eval_node(*a.rhs, ord), a.rhs->pos);
    }
    // Denominator x^v * u with invertible u: widen, invert u, then require
    // the numerator side to be divisible by x^v.
    Series<Rat> num = eval_node(*a.lhs, ord + v);
    Series<Rat> den = eval_node(*a.rhs, ord + 2 * v);
    Series<Rat> unit = series_div_x_pow(den, v);
    Series<Rat> h = num * invert_unit_part(unit, a.rhs->pos);
    try {
        return series_div_x_pow(h, v);
    } catch (const std::domain_error& e) {
        throw EvalError(a.pos, e.what());
    }
}

Series<Rat> eval_node(const Ast& a, int ord) {
    switch (a.kind) {
        case Ast::Kind::Literal:
            return Series<Rat>::constant(a.lit, ord);
        case Ast::Kind::Var: {
            std::vector<Rat> c(static_cast<size_t>(ord) + 1, Rat(0));
            if (ord >= 1) c[1] = Rat(1);
            return Series<Rat>(std::move(c));
        }
        case Ast::Kind::Add:
            return eval_node(*a.lhs, ord) + eval_node(*a.rhs, ord);
        case Ast::Kind::Sub:
            return eval_node(*a.lhs, ord) - eval_node(*a.rhs, ord);
        case Ast::Kind::Mul:
            return eval_node(*a.lhs, ord) * eval_node(*a.rhs, ord);
        case Ast::Kind::Div:
            return eval_div(a, ord);
        case Ast::Kind::Pow: {
            Series<Rat> base = eval_node(*a.lhs, ord);
            try {
                if (auto m = a.lit.as_nonneg_int())
                    return series_pow_int(base, static_cast<unsigned long>(*m));
                return series_pow_scalar(base, a.lit);
            } catch (const std::domain_error& e) {
                throw EvalError(a.pos, e.what());
            }
        }
        case Ast::Kind::Call: {
            try {
                if (a.name == "exp") return series_exp(eval_node(*a.lhs, ord));
                if (a.name == "log") return series_log(eval_node(*a.lhs, ord));
                return series_pow_scalar(eval_node(*a.lhs, ord), Rat(1, 2));  // sqrt
            } catch (const std::domain_error& e) {
                throw EvalError(a.pos, e.what());
            }
        }
        case Ast::Kind::Builder: {
            try {
                if (a.name == "catalan") return builders::catalan_gf(ord);
                if (a.name == "sumpow") return builders::sum_of_powers(static_cast<int>(a.args[0]), ord);
                return builders::exponent_set(a.args, ord);  // expset
            } catch (const std::invalid_argument& e) {
                throw EvalError(a.pos, e.what());
            }
        }
    }
    throw EvalError(a.pos, "malformed expression tree");
}

}  // namespace

AstPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string render_expr(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Literal:
            return render_rat_literal(a.lit);
        case Ast::Kind::Var:
            return "x";
        case Ast::Kind::Add:
            return "(" + render_expr(*a.lhs) + " + " + render_expr(*a.rhs) + ")";
        case Ast::Kind::Sub:
            return "(" + render_expr(*a.lhs) + " - " + render_expr(*a.rhs) + ")";
        case Ast::Kind::Mul:
            return "(" + render_expr(*a.lhs) + " * " + render_expr(*a.rhs) + ")";
        case Ast::Kind::Div:
            return "(" + render_expr(*a.lhs) + " / " + render_expr(*a.rhs) + ")";
        case Ast::Kind::Pow: {
            std::string e = a.lit.den().is_one() && a.lit.sign() >= 0
                                ? a.lit.str()
                                : "(" + a.lit.str() + ")";
            return "(" + render_expr(*a.lhs) + " ^ " + e + ")";
        }
        case Ast::Kind::Call:
            return a.name + "(" + render_expr(*a.lhs) + ")";
        case Ast::Kind::Builder: {
            if (a.name == "catalan") return a.name;
            std::string out = a.name + "(";
            for (size_t i = 0; i < a.args.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(a.args[i]);
            }
            return out + ")";
        }
    }
    return "?";
}

bool ast_equal(const Ast& a, const Ast& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Ast::Kind::Literal:
            return a.lit == b.lit;
        case Ast::Kind::Var:
            return true;
        case Ast::Kind::Add:
        case Ast::Kind::Sub:
        case Ast::Kind::Mul:
        case Ast::Kind::Div:
            return ast_equal(*a.lhs, *b.lhs) && ast_equal(*a.rhs, *b.rhs);
        case Ast::Kind::Pow:
            return a.lit == b.lit && ast_equal(*a.lhs, *b.lhs);
        case Ast::Kind::Call:
            return a.name == b.name && ast_equal(*a.lhs, *b.lhs);
        case Ast::Kind::Builder:
            return a.name == b.name && a.args == b.args;
    }
    return false;
}

Series<Rat> eval_series(const Ast& a, int ord) {
    if (ord < 0) throw std::invalid_argument("negative truncation order");
    return eval_node(a, ord);
}

Poly eval_poly(const Ast& a) {
    switch (a.kind) {
        case Ast::Kind::Literal:
            return Poly(a.lit);
        case Ast::Kind::Var:
            return Poly::variable();
        case Ast::Kind::Add:
            return eval_poly(*a.lhs) + eval_poly(*a.rhs);
        case Ast::Kind::Sub:
            return eval_poly(*a.lhs) - eval_poly(*a.rhs);
        case Ast::Kind::Mul:
            return eval_poly(*a.lhs) * eval_poly(*a.rhs);
        case Ast::Kind::Pow: {
            auto m = a.lit.as_nonneg_int();
            if (!m) throw EvalError(a.pos, "polynomial context requires a nonnegative integer exponent");
            return eval_poly(*a.lhs).pow(static_cast<unsigned long>(*m));
        }
        default:
            throw EvalError(a.pos, "not a polynomial expression");
    }
}

}  // namespace minadet
