#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minadet/caserng.hpp"
#include "minadet/combinat.hpp"
#include "minadet/poly.hpp"

using namespace minadet;

namespace {

Poly poly_of(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly random_poly(CaseRng& rng, int max_deg) {
    std::vector<Rat> c;
    long deg = rng.uniform(0, max_deg);
    for (long k = 0; k <= deg; ++k) c.push_back(rng.small_rat());
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("Int basics") {
    CHECK(Int(0).is_zero());
    CHECK(Int("0") == Int(0));
    CHECK((Int(7) + Int(-7)).is_zero());
    CHECK(factorial(20).str() == "2432902008176640000");
    CHECK(factorial(25) == Int("15511210043330985984000000"));
    CHECK(binomial_int(12, 6) == Int(924));
    CHECK(binomial_int(5, 9).is_zero());
    CHECK(Int(-6).divexact(Int(3)) == Int(-2));
    CHECK_THROWS_AS(Int(7).divexact(Int(2)), std::domain_error);
    CHECK_THROWS_WITH_AS(Int(7).divexact(Int(0)), "division by zero", std::domain_error);
    CHECK(gcd(Int(12), Int(18)) == Int(6));
    CHECK(Int("-123456789123456789").str() == "-123456789123456789");
    CHECK(Int(1).bit_length() == 1);
    CHECK(Int(255).bit_length() == 8);
    CHECK_THROWS_AS(Int("12a"), std::invalid_argument);
}

TEST_CASE("rational construction normalizes") {
    Rat a(6, 4);
    CHECK(a.num() == Int(3));
    CHECK(a.den() == Int(2));
    CHECK(a.str() == "3/2");

    Rat zero(0, 7);
    CHECK(zero.num() == Int(0));
    CHECK(zero.den() == Int(1));
    CHECK(zero.str() == "0");

    Rat neg(2, -4);
    CHECK(neg.num() == Int(-1));
    CHECK(neg.den() == Int(2));
    CHECK(neg.str() == "-1/2");

    CHECK_THROWS_WITH_AS(Rat(1, 0), "division by zero", std::domain_error);
    CHECK_THROWS_WITH_AS(rat_make(Int(3), Int(0)), "division by zero", std::domain_error);
}

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse("-4/8") == Rat(-1, 2));
    CHECK(Rat::parse("17") == Rat(17));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);

    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) / Rat(3, 2) == Rat(1, 3));
    CHECK_THROWS_WITH_AS(Rat(1) / Rat(0), "division by zero", std::domain_error);

    CHECK(Rat(2, 3).pow(2) == Rat(4, 9));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(-2, 3).pow(-3) == Rat(-27, 8));
    CHECK(Rat(-2, 3).pow(-3).den() == Int(8));
    CHECK(Rat(0).pow(0) == Rat(1));
    CHECK_THROWS_AS(Rat(0).pow(-1), std::domain_error);

    CHECK(Rat(5, 3).as_nonneg_int() == std::nullopt);
    CHECK(Rat(-2).as_nonneg_int() == std::nullopt);
    CHECK(Rat(4).as_nonneg_int() == 4);
}

TEST_CASE("rational field laws hold structurally") {
    CaseRng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rat a = rng.small_rat(), b = rng.small_rat(), c = rng.small_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("polynomial ring arithmetic") {
    Poly z = Poly::variable();
    Poly z_plus_1 = z + Poly::one();
    Poly z_minus_1 = z - Poly::one();
    CHECK(z_plus_1 * z_minus_1 == poly_of({-1, 0, 1}));
    CHECK((z_plus_1 * z_minus_1).str() == "z^2 - 1");

    Poly z2 = z * z;
    CHECK((z2 + (-z2)).is_zero());
    CHECK((z2 + (-z2)).degree() == Poly::kZeroDegree);
    CHECK((z2 + (-z2)).coeffs().empty());

    CHECK(z.scaled(Rat(2)) * Poly(Rat(1, 2)) == z);
}

TEST_CASE("polynomial evaluation") {
    Poly p = poly_of({-1, 0, 1});  // z^2 - 1
    CHECK(p.eval(Rat(3)) == Rat(8));
    CHECK(p.eval(Rat(0)) == Rat(-1));

    // z(z-1)/2 at 5 = binom(5,2)
    Poly q = (Poly::variable() * (Poly::variable() - Poly::one())).div_rat(Rat(2));
    CHECK(q.eval(Rat(5)) == Rat(10));
    CHECK(q.eval(Rat(5)) == Rat(binomial_int(5, 2)));
}

TEST_CASE("polynomial scalar division") {
    Poly p = poly_of({4, 0, 2});
    CHECK(p.div_rat(Rat(2)) == poly_of({2, 0, 1}));
    CHECK(Poly::variable().div_rat(Rat(3)) == Poly::variable().scaled(Rat(1, 3)));
    CHECK(Poly().div_rat(Rat(5)).is_zero());
    CHECK_THROWS_WITH_AS(p.div_rat(Rat(0)), "division by zero", std::domain_error);
}

TEST_CASE("polynomial degree and exact division") {
    CaseRng rng(12);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 5);
        Poly q = random_poly(rng, 5);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
        CHECK((p * q).divexact(q) == p);
    }
    CHECK_THROWS_AS(poly_of({1, 1}).divexact(poly_of({0, 1})), std::domain_error);
    CHECK_THROWS_WITH_AS(Poly::one().divexact(Poly()), "division by zero", std::domain_error);
}

TEST_CASE("polynomial evaluation respects ring operations") {
    CaseRng rng(13);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 4);
        Poly q = random_poly(rng, 4);
        Rat v = rng.small_rat();
        CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
        CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    }
}

TEST_CASE("scalar division inverts scalar multiplication") {
    CaseRng rng(14);
    for (int i = 0; i < 100; ++i) {
        Poly p = random_poly(rng, 6);
        Rat d = rng.small_rat_nonzero();
        CHECK(p.scaled(d).div_rat(d) == p);
    }
}

TEST_CASE("polynomial rendering") {
    CHECK(Poly().str() == "0");
    CHECK(Poly(Rat(-3, 2)).str() == "-3/2");
    CHECK(poly_of({0, -1}).str() == "-z");
    CHECK(poly_of({1, 0, -2, 3}).str("w") == "3*w^3 - 2*w^2 + 1");
    CHECK(poly_of({0, 1, 1}).str() == "z^2 + z");
}

TEST_CASE("stirling oracles") {
    CHECK(stirling2(4, 2) == Int(7));
    CHECK(stirling1_unsigned(4, 2) == Int(11));
    CHECK(stirling1_signed(4, 2) == Int(11));
    CHECK(stirling1_signed(4, 3) == Int(-6));
    CHECK(stirling2(6, 6) == Int(1));
    CHECK(stirling1_unsigned(6, 6) == Int(1));
    CHECK(stirling2(5, 0) == Int(0));
    CHECK_THROWS_AS(stirling2(3, 4), std::out_of_range);
    CHECK_THROWS_AS(stirling1_unsigned(-1, 0), std::out_of_range);
    // row sums of unsigned first kind are factorials
    for (long n = 1; n <= 7; ++n) {
        Int sum(0);
        for (long k = 0; k <= n; ++k) sum += stirling1_unsigned(n, k);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("catalan recurrence oracle") {
    auto c = catalan_numbers(8);
    REQUIRE(c.size() == 8);
    CHECK(c[0] == Int(1));
    CHECK(c[1] == Int(1));
    CHECK(c[2] == Int(2));
    CHECK(c[3] == Int(5));
    CHECK(c[4] == Int(14));
    CHECK(c[7] == Int(429));
    // closed form C_n = binom(2n, n)/(n+1)
    for (long n = 0; n < 8; ++n)
        CHECK(c[static_cast<size_t>(n)] == binomial_int(2 * n, n).divexact(Int(n + 1)));
}
