#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minadet/caserng.hpp"
#include "minadet/expr.hpp"

using namespace minadet;

namespace {

// Random small ASTs for the render/parse round trip. Literals stay integral:
// "p/q" re-parses as a division node by design.
AstPtr random_ast(CaseRng& rng, int depth) {
    Ast n;
    long pick = rng.uniform(0, depth <= 0 ? 2 : 9);
    switch (pick) {
        case 0:
            n.kind = Ast::Kind::Literal;
            n.lit = Rat(rng.uniform(0, 9));
            break;
        case 1:
        case 2:
            n.kind = Ast::Kind::Var;
            break;
        case 3:
        case 4:
        case 5:
        case 6: {
            static const Ast::Kind ops[] = {Ast::Kind::Add, Ast::Kind::Sub, Ast::Kind::Mul,
                                            Ast::Kind::Div};
            n.kind = ops[pick - 3];
            n.lhs = random_ast(rng, depth - 1);
            n.rhs = random_ast(rng, depth - 1);
            break;
        }
        case 7:
            n.kind = Ast::Kind::Pow;
            n.lhs = random_ast(rng, depth - 1);
            n.lit = rng.percent(50) ? Rat(rng.uniform(0, 5))
                                    : Rat(rng.uniform(-9, 9), rng.uniform(1, 9));
            break;
        case 8: {
            static const char* fns[] = {"exp", "log", "sqrt"};
            n.kind = Ast::Kind::Call;
            n.name = fns[rng.uniform(0, 2)];
            n.lhs = random_ast(rng, depth - 1);
            break;
        }
        default:
            n.kind = Ast::Kind::Builder;
            if (rng.percent(40)) {
                n.name = "catalan";
            } else if (rng.percent(50)) {
                n.name = "sumpow";
                n.args.push_back(rng.uniform(1, 4));
            } else {
                n.name = "expset";
                n.args = {0, 1, 1 + rng.uniform(1, 5)};
            }
            break;
    }
    return std::make_shared<const Ast>(std::move(n));
}

}  // namespace

TEST_CASE("parse shapes") {
    AstPtr a = parse_expr("(exp(x)-1)/x");
    REQUIRE(a->kind == Ast::Kind::Div);
    CHECK(a->lhs->kind == Ast::Kind::Sub);
    CHECK(a->lhs->lhs->kind == Ast::Kind::Call);
    CHECK(a->lhs->lhs->name == "exp");
    CHECK(a->rhs->kind == Ast::Kind::Var);

    AstPtr b = parse_expr("1+x");
    REQUIRE(b->kind == Ast::Kind::Add);
    CHECK(b->lhs->kind == Ast::Kind::Literal);
    CHECK(b->lhs->lit == Rat(1));
    CHECK(b->rhs->kind == Ast::Kind::Var);

    AstPtr c = parse_expr("log(1+x)/x");
    REQUIRE(c->kind == Ast::Kind::Div);
    CHECK(c->lhs->kind == Ast::Kind::Call);
    CHECK(c->lhs->name == "log");
}

TEST_CASE("operator precedence and associativity") {
    // pow > unary minus > mul/div > add/sub
    Series<Rat> f = eval_series(*parse_expr("1+2*x^2"), 2);
    CHECK(f.coeff(0) == Rat(1));
    CHECK(f.coeff(1) == Rat(0));
    CHECK(f.coeff(2) == Rat(2));

    Series<Rat> g = eval_series(*parse_expr("-x^2"), 2);
    CHECK(g.coeff(2) == Rat(-1));

    // left associativity: 1 - 2 - 3 = (1-2)-3
    CHECK(eval_series(*parse_expr("1-2-3"), 0).coeff(0) == Rat(-4));
    CHECK(eval_series(*parse_expr("8/2/2"), 0).coeff(0) == Rat(2));

    // rational exponents need parentheses
    Series<Rat> h = eval_series(*parse_expr("(1-4*x)^(1/2)"), 1);
    CHECK(h.coeff(1) == Rat(-2));
}

TEST_CASE("evaluation of the named constructions") {
    Series<Rat> f = eval_series(*parse_expr("(exp(x)-1)/x"), 2);
    CHECK(f.coeffs() == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 6)});

    Series<Rat> c = eval_series(*parse_expr("(1-sqrt(1-4*x))/(2*x)"), 3);
    CHECK(c.coeffs() == std::vector<Rat>{Rat(1), Rat(1), Rat(2), Rat(5)});
    CHECK(c == builders::catalan_gf(3));

    CHECK(eval_series(*parse_expr("catalan"), 3) == builders::catalan_gf(3));
    CHECK(eval_series(*parse_expr("sumpow(2)"), 7) == builders::sum_of_powers(2, 7));
    CHECK(eval_series(*parse_expr("expset(0,1,4,9)"), 7) == builders::sum_of_powers(2, 7));

    Series<Rat> geo = eval_series(*parse_expr("1/(1-x)"), 4);
    for (int k = 0; k <= 4; ++k) CHECK(geo.coeff(k) == Rat(1));

    // constant denominators go through scalar division
    CHECK(eval_series(*parse_expr("(2*x+2*x^2)/(2*x)"), 1) == builders::one_plus_x(1));
    CHECK(eval_series(*parse_expr("3/2"), 0).coeff(0) == Rat(3, 2));

    // mixed denominator x*(1+x)
    Series<Rat> mixed = eval_series(*parse_expr("(x+x^2+x^3)/(x*(1+x))"), 3);
    Series<Rat> direct = eval_series(*parse_expr("(1+x+x^2)/(1+x)"), 3);
    CHECK(mixed == direct);
}

TEST_CASE("division error paths") {
    CHECK_THROWS_AS(eval_series(*parse_expr("1/x"), 3), EvalError);
    CHECK_THROWS_WITH_AS(eval_series(*parse_expr("1/x"), 3), "not divisible by x^k at offset 1",
                         EvalError);
    CHECK_THROWS_AS(eval_series(*parse_expr("1/(x-x)"), 3), EvalError);
    CHECK_THROWS_AS(eval_series(*parse_expr("x^(1/2)"), 3), EvalError);
    CHECK_THROWS_AS(eval_series(*parse_expr("log(x)"), 3), EvalError);
    CHECK_THROWS_AS(eval_series(*parse_expr("exp(1+x)"), 3), EvalError);
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_expr("1+*x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }

    try {
        parse_expr("foo(x)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 0);
        CHECK(std::string(e.what()).find("unknown identifier 'foo'") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_expr("(1+x"), ParseError);
    CHECK_THROWS_AS(parse_expr("1+x)"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("1 $ 2"), ParseError);
    CHECK_THROWS_AS(parse_expr("x^x"), ParseError);
    CHECK_THROWS_AS(parse_expr("sumpow(2"), ParseError);
}

TEST_CASE("eval matches builders at every order") {
    AstPtr opx = parse_expr("1+x");
    for (int ord = 0; ord <= 6; ++ord) CHECK(eval_series(*opx, ord) == builders::one_plus_x(ord));
}

TEST_CASE("render/parse round trip") {
    CaseRng rng(51);
    for (int i = 0; i < 200; ++i) {
        AstPtr a = random_ast(rng, 4);
        std::string text = render_expr(*a);
        AstPtr b = parse_expr(text);
        CHECK(ast_equal(*a, *b));
    }
}

TEST_CASE("polynomial evaluation of expressions") {
    Poly p = eval_poly(*parse_expr("(1+x)^2 - x"));
    CHECK(p == Poly(std::vector<Rat>{Rat(1), Rat(1), Rat(1)}));
    CHECK(eval_poly(*parse_expr("2")) == Poly(Rat(2)));
    CHECK_THROWS_AS(eval_poly(*parse_expr("exp(x)")), EvalError);
    CHECK_THROWS_AS(eval_poly(*parse_expr("1/x")), EvalError);
    CHECK_THROWS_AS(eval_poly(*parse_expr("x^(1/2)")), EvalError);
}
