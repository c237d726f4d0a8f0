#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minadet/caserng.hpp"
#include "minadet/expr.hpp"
#include "minadet/identities.hpp"

using namespace minadet;

namespace {

Series<Rat> series_of(std::initializer_list<Rat> coeffs) {
    return Series<Rat>(std::vector<Rat>(coeffs));
}

VerifyOptions with_oracle() {
    VerifyOptions o;
    o.oracle = true;
    return o;
}

}  // namespace

TEST_CASE("theorem 1") {
    Report sq = verify_theorem1(builders::sum_of_powers(2, 7), 7, with_oracle());
    CHECK(sq.pass);
    CHECK(sq.computed == "1");
    CHECK(sq.expected == "1");

    Report cubic = verify_theorem1(series_of({Rat(1), Rat(3), Rat(0)}), 2, with_oracle());
    CHECK(cubic.pass);
    CHECK(cubic.computed == "27");

    // constant term 5: the Bender remark
    Report bender = verify_theorem1(series_of({Rat(5), Rat(2), Rat(0)}), 2, with_oracle());
    CHECK(bender.pass);
    CHECK(bender.computed == "8");

    // constant term 0: lower-triangular structure, no continuity needed
    Report zero0 = verify_theorem1(series_of({Rat(0), Rat(3), Rat(1), Rat(4)}), 3, with_oracle());
    CHECK(zero0.pass);
    CHECK(zero0.computed == Rat(3).pow(6).str());

    CHECK_THROWS_AS(verify_theorem1(builders::one_plus_x(1), 3), std::out_of_range);
}

TEST_CASE("theorem 1 scaling invariance") {
    CaseRng rng(71);
    for (int i = 0; i < 25; ++i) {
        int n = static_cast<int>(rng.uniform(0, 5));
        Rat a0 = rng.small_rat_nonzero();
        std::vector<Rat> c{a0};
        for (int k = 1; k <= n; ++k) c.push_back(rng.small_rat());
        Series<Rat> f(c);
        std::vector<Rat> cn;
        for (const Rat& v : c) cn.push_back(v / a0);
        Series<Rat> fn(cn);
        Rat det = det_bareiss(coeff_matrix(f, n, Rat(1)));
        Rat det_norm = det_bareiss(coeff_matrix(fn, n, Rat(1)));
        long N = static_cast<long>(n) * (n + 1) / 2;
        CHECK(det == det_norm * a0.pow(N));
        CHECK(verify_theorem1(f, n).pass);
        CHECK(verify_theorem1(fn, n).pass);
    }
}

TEST_CASE("theorem 2 symbolic") {
    Report r1 = verify_theorem2_symbolic(builders::one_plus_x(1), 1, with_oracle());
    CHECK(r1.pass);
    CHECK(r1.computed == "z");

    Report r3 = verify_theorem2_symbolic(builders::one_plus_x(3), 3, with_oracle());
    CHECK(r3.pass);
    CHECK(r3.computed == "z^6");

    Report r2 = verify_theorem2_symbolic(series_of({Rat(1), Rat(1), Rat(1)}), 2, with_oracle());
    CHECK(r2.pass);
    CHECK(r2.computed == "z^3");
}

TEST_CASE("theorem 2 specializes to numeric z") {
    CaseRng rng(72);
    for (int i = 0; i < 10; ++i) {
        int n = static_cast<int>(rng.uniform(0, 4));
        std::vector<Rat> c{Rat(1)};
        for (int k = 1; k <= n; ++k) c.push_back(rng.small_rat());
        Series<Rat> f(c);
        Poly det_z = det_bareiss(coeff_matrix(lift_series(f), n, Poly::variable()));
        for (int t = 0; t < 3; ++t) {
            Rat v = rng.small_rat();
            if (auto vi = v.as_nonneg_int(); !vi && !f.constant_term().is_one()) continue;
            Rat det_v = det_bareiss(coeff_matrix(f, n, v));
            CHECK(det_z.eval(v) == det_v);
        }
    }
}

TEST_CASE("triangularization") {
    CHECK(verify_triangularization(builders::one_plus_x(4), 4, Rat(1)).pass);

    Report diag = verify_triangularization(series_of({Rat(1), Rat(2), Rat(7), Rat(0)}), 3, Rat(1));
    CHECK(diag.pass);
    CHECK(diag.expected.find("[1, 2, 4, 8]") != std::string::npos);

    Report z3 = verify_triangularization(builders::one_plus_x(2), 2, Rat(3));
    CHECK(z3.pass);
    CHECK(z3.expected.find("[1, 3, 9]") != std::string::npos);

    CHECK(verify_triangularization(builders::one_plus_x(3), 3, Rat(0)).pass);
    CHECK(verify_triangularization(builders::one_plus_x(3), 3, Rat(-2, 3)).pass);

    CHECK_THROWS_AS(verify_triangularization(series_of({Rat(2), Rat(1)}), 1, Rat(1)),
                    std::domain_error);
}

TEST_CASE("representation counts") {
    Report squares = verify_representations({0, 1, 4, 9, 16, 25, 36, 49}, 7, with_oracle());
    CHECK(squares.pass);

    Report cubes = verify_representations({0, 1, 8, 27, 64}, 6, with_oracle());
    CHECK(cubes.pass);

    Report odd = verify_representations({0, 1, 3, 7, 12}, 6, with_oracle());
    CHECK(odd.pass);

    CHECK_THROWS_AS(verify_representations({0, 2, 3}, 3), std::invalid_argument);
}

TEST_CASE("stirling second kind") {
    Report r = verify_stirling2(1, 1, with_oracle());
    CHECK(r.pass);
    CHECK(r.computed == "1/2");

    CHECK(verify_stirling2(2, 2, with_oracle()).computed == "1");
    CHECK(verify_stirling2(3, 2, with_oracle()).computed == "27/8");
    CHECK(verify_stirling2(3, 2, with_oracle()).pass);
    CHECK_THROWS_AS(verify_stirling2(0, 2), std::invalid_argument);
}

TEST_CASE("stirling first kind") {
    // n(n+1)/2 = 1: signed convention gives -1/2, unsigned reading +1/2
    Report r = verify_stirling1(1, 1, with_oracle());
    CHECK(r.pass);
    CHECK(r.computed == "-1/2");
    bool saw_unsigned = false;
    for (const auto& [k, v] : r.params)
        if (k == "unsigned_det") {
            saw_unsigned = true;
            CHECK(v == "1/2");
        }
    CHECK(saw_unsigned);

    Report n0 = verify_stirling1(2, 0, with_oracle());
    CHECK(n0.pass);
    CHECK(n0.computed == "1");

    // the (1,1) entry is [x^1] of log(1+x)/x
    CHECK(builders::log1p_over_x(1).coeff(1) == Rat(-1, 2));
    CHECK(verify_stirling1(2, 3, with_oracle()).pass);
    CHECK(verify_stirling1(3, 4, with_oracle()).pass);
}

TEST_CASE("catalan determinants") {
    Report r1 = verify_catalan(1, 1, with_oracle());
    CHECK(r1.pass);
    CHECK(r1.computed == "1");

    // [x^2] C(x) = 1*(2*2+1-1)!/(2!*3!) = 2
    CHECK(builders::catalan_gf(2).coeff(2) ==
          Rat(Int(1) * factorial(4), factorial(2) * factorial(3)));

    Report r23 = verify_catalan(2, 3, with_oracle());
    CHECK(r23.pass);
    // z^{n(n-1)/2} 1! 2! = 8 * 2
    CHECK(r23.computed == "16");

    CHECK(verify_catalan(3, 4, with_oracle()).pass);
    CHECK_THROWS_AS(verify_catalan(1, 0), std::invalid_argument);
}

TEST_CASE("additive structure") {
    Report r1 = verify_additive(series_of({Rat(1), Rat(3)}), series_of({Rat(1), Rat(5)}), 1,
                                with_oracle());
    CHECK(r1.pass);
    CHECK(r1.computed == "16");  // (1+1)(3+5)

    Report r2 = verify_additive(series_of({Rat(1), Rat(2), Rat(0), Rat(1)}),
                                series_of({Rat(1), Rat(3), Rat(0), Rat(0)}), 2, with_oracle());
    CHECK(r2.pass);
    CHECK(r2.computed == "130");  // (1+1)(2+3)(4+9)

    // binomial version: u = binom(ri, j), v = binom(si, j)
    Rat r(2), s(3);
    int n = 3;
    ExactMatrix<Rat> u(n + 1, n + 1), v(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            u.at(i, j) = binomial_rat(r * Rat(i), j);
            v.at(i, j) = binomial_rat(s * Rat(i), j);
        }
    Rat expect(1);
    for (int i = 0; i <= n; ++i) expect *= r.pow(i) + s.pow(i);
    CHECK(det_bareiss(u + v) == expect);

    CHECK_THROWS_AS(
        verify_additive(series_of({Rat(2), Rat(1)}), series_of({Rat(1), Rat(1)}), 1),
        std::domain_error);
}

TEST_CASE("weighted sums") {
    Report pascal = verify_weighted({Rat(1)}, {Rat(1)}, 2, with_oracle());
    CHECK(pascal.pass);
    CHECK(pascal.computed == "1");

    Report two = verify_weighted({Rat(1), Rat(2)}, {Rat(1), Rat(1)}, 1, with_oracle());
    CHECK(two.pass);
    CHECK(two.computed == "6");

    Report frac = verify_weighted({Rat(1, 2), Rat(1, 3)}, {Rat(2), Rat(-1)}, 2, with_oracle());
    CHECK(frac.pass);
    CHECK(frac.computed == Rat(7, 27).str());

    // m equally spaced points in (0,1) with equal weights 1/m: the finite-m
    // identity behind the moment determinants
    for (long m = 2; m <= 4; ++m) {
        std::vector<Rat> S, c;
        for (long k = 1; k <= m; ++k) {
            S.push_back(Rat(k, m + 1));
            c.push_back(Rat(1, m));
        }
        CHECK(verify_weighted(S, c, 3, with_oracle()).pass);
    }

    CHECK_THROWS_WITH_AS(verify_weighted({Rat(1)}, {Rat(1), Rat(2)}, 1), "length mismatch",
                         std::invalid_argument);
}

TEST_CASE("moment determinants") {
    Report flat1 = verify_moments(Poly::one(), 1, with_oracle());
    CHECK(flat1.pass);
    CHECK(flat1.computed == "1/2");

    Report flat4 = verify_moments(Poly::one(), 4, with_oracle());
    CHECK(flat4.pass);
    CHECK(flat4.computed == "1/120");

    Report linear = verify_moments(Poly::variable(), 1, with_oracle());
    CHECK(linear.pass);
    CHECK(linear.computed == "1/6");  // mu_0 mu_1 = (1/2)(1/3)
}

TEST_CASE("mina identity at the origin") {
    Series<Rat> f = series_of({Rat(1), Rat(4, 3), Rat(2)});
    Report r = verify_mina_origin(f, Rat(1), {Rat(0), Rat(1)}, 1, with_oracle());
    CHECK(r.pass);
    CHECK(r.computed == "4/3");

    // xs = 0..n, z = 1: right side is a1^{n(n+1)/2} 1! 2! ... n!
    Report consec =
        verify_mina_origin(series_of({Rat(1), Rat(2), Rat(0), Rat(5)}), Rat(1),
                           {Rat(0), Rat(1), Rat(2), Rat(3)}, 3, with_oracle());
    CHECK(consec.pass);
    Rat rhs = Rat(2).pow(6);
    for (long k = 1; k <= 3; ++k) rhs *= Rat(factorial(k));
    CHECK(consec.computed == rhs.str());

    Report frac = verify_mina_origin(series_of({Rat(1), Rat(-3, 2), Rat(1, 7)}), Rat(2, 3),
                                     {Rat(0), Rat(1, 2), Rat(3)}, 2, with_oracle());
    CHECK(frac.pass);

    // repeated nodes must verify 0 = 0, not error
    Report rep = verify_mina_origin(f, Rat(1), {Rat(1), Rat(1), Rat(2)}, 2, with_oracle());
    CHECK(rep.pass);
    CHECK(rep.computed == "0");

    CHECK_THROWS_AS(verify_mina_origin(series_of({Rat(2), Rat(1)}), Rat(1), {Rat(0), Rat(1)}, 1),
                    std::domain_error);
}

TEST_CASE("mina identity at a point") {
    // ms = 0..n at t recovers the factorial product shape
    Poly opx(std::vector<Rat>{Rat(1), Rat(1)});
    Report r = verify_mina_at_point(opx, {0, 1, 2}, Rat(0), 2, with_oracle());
    CHECK(r.pass);
    CHECK(r.computed == "2");  // 1! 2!

    Poly f(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    Report gaps = verify_mina_at_point(f, {0, 2, 3}, Rat(1), 2, with_oracle());
    CHECK(gaps.pass);

    Report shifted = verify_mina_at_point(opx, {0, 1, 2, 3}, Rat(-3, 2), 3, with_oracle());
    CHECK(shifted.pass);

    CHECK_THROWS_WITH_AS(verify_mina_at_point(opx, {0, 1}, Rat(-1), 1),
                         "evaluation point is a zero of f", std::domain_error);
}

TEST_CASE("polynomial family lemma") {
    PolyFamily pure({Poly::one(), Poly::variable(), Poly::variable() * Poly::variable()});
    Report r = verify_lemma_polys(pure, {Rat(0), Rat(1), Rat(2)}, with_oracle());
    CHECK(r.pass);
    CHECK(r.computed == "2");

    PolyFamily fam({Poly(Rat(2)), Poly(std::vector<Rat>{Rat(1), Rat(3)}),
                    Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(5)})});
    Report r2 = verify_lemma_polys(fam, {Rat(0), Rat(1), Rat(-1)}, with_oracle());
    CHECK(r2.pass);
    CHECK(r2.computed == "60");

    PolyFamily fam2({Poly(Rat(2)), Poly(std::vector<Rat>{Rat(1), Rat(3)}),
                     Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(5)})});
    Report rep = verify_lemma_polys(fam2, {Rat(1), Rat(1), Rat(2)}, with_oracle());
    CHECK(rep.pass);
    CHECK(rep.computed == "0");

    CHECK_THROWS_AS(PolyFamily({Poly::one(), Poly::one()}), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma_polys(pure, {Rat(0), Rat(1)}), std::invalid_argument);
}

TEST_CASE("degree claim") {
    Report r = verify_degree_claim(series_of({Rat(1), Rat(1), Rat(1)}), 2);
    CHECK(r.pass);

    // j = 2 for f = 1+x+x^2: 2! [x^2] f^w = w^2 + w
    Series<Poly> fw = series_pow_scalar(lift_series(series_of({Rat(1), Rat(1), Rat(1)})),
                                        Poly::variable());
    Poly q2 = fw.coeff(2).scaled(Rat(2));
    CHECK(q2 == Poly(std::vector<Rat>{Rat(0), Rat(1), Rat(1)}));
    CHECK(q2.degree() == 2);
    CHECK(q2.leading() == Rat(1));

    CaseRng rng(73);
    for (int i = 0; i < 10; ++i) {
        std::vector<Rat> c{Rat(1), rng.small_rat_nonzero()};
        for (int k = 2; k <= 5; ++k) c.push_back(rng.small_rat());
        CHECK(verify_degree_claim(Series<Rat>(c), 5).pass);
    }

    // a1 = 0 breaks the exact-degree claim; that is a reported failure
    CHECK_FALSE(verify_degree_claim(series_of({Rat(1), Rat(0), Rat(1)}), 2).pass);
}

TEST_CASE("mina origin cross-validates theorem 1 through row scaling") {
    // det(mina_origin with xs = 0..n, z = 1) = det(coeff_matrix) * prod j!
    CaseRng rng(74);
    for (int i = 0; i < 10; ++i) {
        int n = static_cast<int>(rng.uniform(0, 5));
        std::vector<Rat> c{Rat(1)};
        for (int k = 1; k <= n; ++k) c.push_back(rng.small_rat());
        Series<Rat> f(c);
        std::vector<Rat> xs;
        for (int k = 0; k <= n; ++k) xs.push_back(Rat(k));
        Rat det_mina = det_bareiss(mina_matrix_origin(f, Rat(1), xs, n));
        Rat det_plain = det_bareiss(coeff_matrix(f, n, Rat(1)));
        Rat scale(1);
        for (long j = 1; j <= n; ++j) scale *= Rat(factorial(j));
        CHECK(det_mina == det_plain * scale);
    }
}

TEST_CASE("reports from expression input") {
    Series<Rat> f = eval_series(*parse_expr("1+x+x^4+x^9"), 7);
    Report r = verify_theorem1(f, 7, with_oracle());
    CHECK(r.pass);
    CHECK(r.computed == "1");
}
