#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minadet/poly.hpp"
#include "minadet/series.hpp"

namespace minadet {

// Parsed series expression. Pow exponents are rational literals, not
// sub-expressions; division is resolved against the denominator's shape at
// evaluation time, not parse time.
struct Ast {
    enum class Kind { Literal, Var, Add, Sub, Mul, Div, Pow, Call, Builder };

    Kind kind;
    size_t pos = 0;               // byte offset in the source, for diagnostics
    Rat lit;                      // Literal value / Pow exponent
    std::string name;             // Call: exp|log|sqrt; Builder: catalan|sumpow|expset
    std::shared_ptr<const Ast> lhs, rhs;
    std::vector<long> args;       // sumpow exponent / expset list
};

using AstPtr = std::shared_ptr<const Ast>;

struct ParseError : std::runtime_error {
    ParseError(size_t offset, const std::string& msg)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

struct EvalError : std::runtime_error {
    EvalError(size_t offset, const std::string& msg)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

// Grammar (whitespace insignificant):
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := '-' factor | power
//   power    := atom ['^' exponent]
//   exponent := INT | '(' '-'? INT ['/' INT] ')'
//   atom     := INT | 'x' | '(' expr ')' | ('exp'|'log'|'sqrt') '(' expr ')'
//             | 'catalan' | 'sumpow' '(' INT ')' | 'expset' '(' INT (',' INT)* ')'
AstPtr parse_expr(std::string_view src);

// Canonical fully-parenthesized rendering; parse_expr(render_expr(a)) == a.
std::string render_expr(const Ast& a);

bool ast_equal(const Ast& a, const Ast& b);

// Evaluates to a truncated series at the requested order. Division factors
// the denominator's lowest power of x, inverts the unit part, then shifts.
Series<Rat> eval_series(const Ast& a, int ord);

// Restricted evaluation for contexts that need a genuine polynomial:
// literals, x, +, -, * and nonnegative integer powers only.
Poly eval_poly(const Ast& a);

}  // namespace minadet
