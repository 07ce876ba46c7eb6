#include <doctest.h>

#include <random>

#include "appell/coeff_frac.hpp"
#include "appell/errors.hpp"
#include "appell/jacobi.hpp"

using namespace appell;

namespace {

LaurentPoly s(int e) { return LaurentPoly::monomial(Rat(1), e); }
const LaurentPoly one_minus_w = LaurentPoly(1) - s(2);

struct Rng {
    std::mt19937_64 g{424242};
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
    Rat rat() {
        long n = 0;
        while (n == 0)
            n = integer(-7, 7);
        return {n, integer(1, 5)};
    }
    LaurentPoly poly(int lo, int hi) {
        std::map<int, Rat> t;
        for (int i = 0, k = static_cast<int>(integer(1, 4)); i < k; ++i)
            t[static_cast<int>(integer(lo, hi))] = rat();
        return LaurentPoly::from_terms(t);
    }
    CoeffFrac frac() {
        LaurentPoly d = poly(0, 3);
        if (integer(0, 1))
            d = d * one_minus_w;
        return {poly(-3, 3), d};
    }
};

} // namespace

TEST_CASE("Rat keeps lowest terms and parses both forms") {
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(0, 7).den() == 1);
    CHECK(Rat::parse("-11/3600") == Rat(-11, 3600));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rat::parse("1.5"), Error);
    CHECK_THROWS_AS(Rat::parse("3/0"), Error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(-1, 3) < Rat(1, 5));
}

TEST_CASE("Laurent polynomial arithmetic") {
    const LaurentPoly b = s(1) - s(-1);
    CHECK(b * b == s(2) - LaurentPoly(2) + s(-2));
    CHECK((b * LaurentPoly()).is_zero());
    // telescoping product
    CHECK(one_minus_w * (LaurentPoly(1) + s(2) + s(4)) == LaurentPoly(1) - s(6));
    CHECK((b - b).is_zero());
    CHECK((b - b).dense().empty());
    CHECK(b.low() == -1);
    CHECK(b.high() == 1);
    CHECK(b.euler() == s(1) + s(-1));
    CHECK(b.subst_neg() == -b);
    CHECK((s(3) - s(1) * Rat(2)).str() == "s^3 - 2*s");
}

TEST_CASE("polynomial gcd and exact division") {
    const LaurentPoly a = one_minus_w * (LaurentPoly(3) + s(1));
    const LaurentPoly b = one_minus_w * (s(2) + LaurentPoly(5));
    CHECK(poly::gcd(a, b) == s(2) - LaurentPoly(1));
    CHECK(poly::gcd(LaurentPoly(3) + s(1), s(2) + LaurentPoly(5)) == LaurentPoly(1));
    CHECK(poly::div_exact(a, one_minus_w) == LaurentPoly(3) + s(1));
    CHECK_FALSE(poly::try_div_exact(a, s(1) + LaurentPoly(7)).has_value());
    CHECK_THROWS_AS(poly::div_exact(a, s(1) + LaurentPoly(7)), Error);
    CHECK(poly::content(s(2) * Rat(6) + LaurentPoly(4)) == Rat(2));
    CHECK(poly::content(s(1) * Rat(-3, 2) + LaurentPoly(1)) == Rat(-1, 2));
}

TEST_CASE("CoeffFrac normal form") {
    SUBCASE("cancellation") {
        const CoeffFrac f(s(5), one_minus_w);
        CHECK(f * CoeffFrac(one_minus_w) == CoeffFrac(s(5)));
    }
    SUBCASE("sum of equal denominators") {
        const CoeffFrac f(LaurentPoly(1), one_minus_w);
        CHECK(f + f == CoeffFrac(LaurentPoly(2), one_minus_w));
    }
    SUBCASE("common factor removed") {
        const CoeffFrac f(s(3) - s(1), one_minus_w);
        CHECK(f == CoeffFrac(-s(1)));
        CHECK(f.is_laurent());
    }
    SUBCASE("denominator convention") {
        const CoeffFrac f(s(1) * Rat(3), one_minus_w * Rat(6));
        CHECK(f.den().low() == 0);
        CHECK(f.den().leading().sign() > 0);
        CHECK(poly::content(f.den()) == Rat(1));
        CHECK(f.num() == s(1) * Rat(-1, 2));
        // powers of s in the denominator move to the numerator
        const CoeffFrac g(LaurentPoly(1), s(2) * Rat(2));
        CHECK(g == CoeffFrac(s(-2) * Rat(1, 2)));
    }
    SUBCASE("division") {
        const CoeffFrac f(s(1), one_minus_w);
        CHECK(f / f == CoeffFrac(1));
        CHECK_THROWS_AS(f / CoeffFrac(), DivisionByZero);
        CHECK_THROWS_AS(CoeffFrac(s(1), LaurentPoly()), DivisionByZero);
        CHECK_THROWS_AS((void)CoeffFrac().inverse(), DivisionByZero);
    }
}

TEST_CASE("euler_w") {
    for (int a : {-5, -1, 0, 2, 7})
        CHECK(euler_w(CoeffFrac(s(a))) == CoeffFrac(s(a) * Rat(a, 2)));
    CHECK(euler_w(CoeffFrac(Rat(5, 3))).is_zero());
    // quotient rule by hand: d/ds [s/(1-s^2)] = (1+s^2)/(1-s^2)^2
    const CoeffFrac f(s(1), one_minus_w);
    const CoeffFrac expected(s(1) * Rat(1, 2) * (LaurentPoly(1) + s(2)), one_minus_w * one_minus_w);
    CHECK(euler_w(f) == expected);
}

TEST_CASE("subst_neg_s") {
    CHECK(subst_neg_s(CoeffFrac(s(3), one_minus_w)) == CoeffFrac(-s(3), one_minus_w));
    const LaurentPoly even = s(4) * Rat(3) - s(-2) + LaurentPoly(7);
    CHECK(subst_neg_s(CoeffFrac(even)) == CoeffFrac(even));
    CHECK(subst_neg_s(CoeffFrac(s(1) + s(2), one_minus_w)) == CoeffFrac(s(2) - s(1), one_minus_w));
    CHECK(subst_neg_s(CoeffFrac(LaurentPoly(1), LaurentPoly(1) + s(1))) ==
          CoeffFrac(LaurentPoly(1), LaurentPoly(1) - s(1)));
}

TEST_CASE("field axioms and operator laws on random fractions") {
    Rng r;
    for (int i = 0; i < 60; ++i) {
        const CoeffFrac a = r.frac();
        const CoeffFrac b = r.frac();
        const CoeffFrac c = r.frac();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        CHECK(a - a == CoeffFrac());
        CHECK(euler_w(a * b) == euler_w(a) * b + a * euler_w(b));
        CHECK(subst_neg_s(subst_neg_s(a)) == a);
        // normalizing an already normal fraction changes nothing
        const CoeffFrac again(a.num(), a.den());
        CHECK(again.num() == a.num());
        CHECK(again.den() == a.den());
    }
}

TEST_CASE("pole order at s^2 = 1") {
    CHECK(pole_order_at_one(CoeffFrac(s(3))) == 0);
    CHECK(pole_order_at_one(CoeffFrac(s(3), one_minus_w)) == 1);
    CHECK(pole_order_at_one(CoeffFrac(LaurentPoly(1), one_minus_w * one_minus_w * one_minus_w)) == 3);
    CHECK_FALSE(pole_order_at_one(CoeffFrac(LaurentPoly(1), one_minus_w * (LaurentPoly(2) + s(1)))).has_value());
}
