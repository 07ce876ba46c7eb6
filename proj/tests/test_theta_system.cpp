#include <doctest.h>

#include "appell/theta_system.hpp"

using namespace appell;

TEST_CASE("theta_{l,r} expansions") {
    const Precision p3 = Precision::q_order(20, level_denom(3));
    CHECK(theta_lr(3, 1, p3) == eta_series(p3));

    // (10n - 3)^2 / 40 for level 5, r = 1
    const RatQExp t = theta_lr(5, 1, Precision::q_order(8, 120));
    std::map<std::int64_t, Rat> expected;
    for (long n = -3; n <= 3; ++n) {
        const long x = 10 * n - 3;
        if (x * x * 3 < 8 * 120)
            expected[x * x * 3] = Rat(n % 2 == 0 ? 1 : -1);
    }
    CHECK(t.terms() == RatQExp::from_terms(t.precision(), expected).terms());
    CHECK(t.coeff(27) == Rat(1));
    CHECK(t.coeff(27 + 120) == Rat(-1));
    CHECK(t.coeff(27 + 4 * 120) == Rat(-1));

    for (int l : {3, 5, 7, 9}) {
        const Precision p = Precision::q_order(12, level_denom(l));
        for (int r = -l; r <= 2 * l; ++r) {
            CHECK(theta_lr(l, r + l, p) == -theta_lr(l, r, p));
            CHECK(theta_lr(l, -r, p) == -theta_lr(l, r, p));
        }
        CHECK(theta_lr(l, 0, p).is_zero());
        CHECK_FALSE(theta_lr(l, 1, p).is_zero());
    }
    CHECK_THROWS_AS(theta_lr(5, 1, Precision{24, 240}), Error);
    CHECK_THROWS_AS(theta_lr(4, 1, Precision{96, 960}), Error);
}

TEST_CASE("exponent residue classes") {
    for (int l = 1; l <= 15; l += 2) {
        const std::int64_t d = level_denom(l);
        for (int r = 0; r < l; ++r) {
            const std::int64_t cls = 3L * (l - 2 * r) * (l - 2 * r);
            const RatQExp t = theta_lr(l, r, Precision::q_order(20, d));
            for (const auto& [m, c] : t.terms())
                CHECK((m - cls) % d == 0);
        }
    }
}

TEST_CASE("build_T") {
    const ThetaSystem s3 = build_T(3, 20);
    REQUIRE(s3.T.size() == 1);
    CHECK(s3.T[0][0] == eta_series(Precision::q_order(20, 72)));

    const ThetaSystem s5 = build_T(5, 10);
    REQUIRE(s5.T.size() == 2);
    CHECK(s5.T[0][0].valuation() == 27);
    CHECK(s5.T[1][0].valuation() == 3);
    for (int i = 0; i < 2; ++i)
        CHECK(s5.T[static_cast<std::size_t>(i)][1] == iter_D(s5.T[static_cast<std::size_t>(i)][0], 1));
    const ThetaSystem s7 = build_T(7, 10);
    for (const auto& row : s7.T)
        CHECK(row[2] == serre_D(row[1], Rat(5, 2)));

    const ThetaSystem s1 = build_T(1, 10);
    CHECK(s1.T.empty());
    CHECK(s1.theta.empty());
}

TEST_CASE("Vandermonde data") {
    CHECK(vandermonde(3).detB == Rat(1));
    CHECK(vandermonde(3).alphas == std::vector<Rat>{Rat(1, 24)});
    const VandermondeData v5 = vandermonde(5);
    CHECK(v5.alphas == std::vector<Rat>{Rat(9, 40), Rat(1, 40)});
    CHECK(v5.detB == Rat(-1, 5));
    const VandermondeData v7 = vandermonde(7);
    CHECK(v7.alphas == std::vector<Rat>{Rat(25, 56), Rat(9, 56), Rat(1, 56)});
    CHECK(v7.detB == Rat(-6, 343));
    for (int l = 3; l <= 15; l += 2) {
        const auto a = vandermonde(l).alphas;
        for (std::size_t i = 1; i < a.size(); ++i)
            CHECK(a[i] < a[i - 1]);
        CHECK_FALSE(vandermonde(l).detB.is_zero());
    }
}

TEST_CASE("determinant identity") {
    CHECK(det_T(3, 15) == eta_series(Precision::q_order(15, 72)));
    const RatQExp d5 = det_T(5, 15);
    const RatQExp expect5 = pow(eta_series(Precision::q_order(15, 120)), 6).scaled(Rat(-1, 5));
    CHECK(d5 == expect5.truncated(d5.order()));
    for (int l = 3; l <= 13; l += 2) {
        const RatQExp d = det_T(l, 15);
        const RatQExp plain = series_det(plain_derivative_matrix(l, 15));
        const std::int64_t n = std::min(d.order(), plain.order());
        CHECK(d.truncated(n) == plain.truncated(n));
        CHECK(d.order() >= 15 * d.denom());
    }
    CHECK(series_det({}).coeff(0) == Rat(1));
}

TEST_CASE("leading matrix is the Vandermonde matrix") {
    for (int l = 3; l <= 13; l += 2)
        CHECK(leading_matrix_check(l));
}

TEST_CASE("elimination agrees with Cramer's rule") {
    for (int l : {5, 7, 9}) {
        const ThetaSystem sys = build_T(l, 12);
        std::vector<RatQExp> rhs;
        const int h = sys.size();
        for (const auto& row : sys.T)
            rhs.push_back(-serre_D(row.back(), Rat(4 * (h - 1) + 1, 2)));
        const auto x = solve_series_system(sys.T, rhs);
        const auto y = solve_series_cramer(sys.T, rhs);
        for (std::size_t k = 0; k < x.size(); ++k) {
            const std::int64_t n = std::min(x[k].order(), y[k].order());
            CHECK(n > 0);
            CHECK(x[k].truncated(n) == y[k].truncated(n));
        }
    }
}

TEST_CASE("solve_F tables") {
    const ThetaSystem s1 = solve_F(1, 20);
    CHECK(s1.F.size() == 1);
    CHECK(s1.F_expr.at(0) == ModularFormExpr::one());
    CHECK(s1.f_expr.at(0) == ModularFormExpr::one());

    const ThetaSystem s3 = solve_F(3, default_solve_order(3));
    CHECK(s3.F.at(2).is_zero());
    CHECK(s3.f_expr.at(0) == ModularFormExpr::one().scaled(Rat(1, 6)));

    const ThetaSystem s5 = solve_F(5, 30);
    CHECK(s5.F.at(4).denom() == 1);
    CHECK(s5.F.at(4).coeff(0) == Rat(-11, 3600));
    CHECK(s5.F.at(4).coeff(1) == Rat(-11, 15));
    CHECK(s5.F_expr.at(4).str() == "-11/3600*E4");
    CHECK(s5.F.at(2).is_zero());
    CHECK(s5.f_expr.at(0).coeff(0, 0) == Rat(1, 100));
    CHECK(s5.f_expr.at(4) == s5.F_expr.at(4));

    const ThetaSystem s7 = solve_F(7, default_solve_order(7));
    CHECK(s7.F_expr.at(6) == ModularFormExpr(6, {{{0, 1}, Rat(85, 74088)}}));
    CHECK(s7.F_expr.at(4) == ModularFormExpr(4, {{{1, 0}, Rat(-5, 252)}}));
    CHECK(s7.F.at(2).is_zero());
    CHECK(s7.f_expr.at(4) == s7.F_expr.at(4).scaled(Rat(1, 14)));

    for (int l = 3; l <= 13; l += 2) {
        const ThetaSystem s = solve_F(l, default_solve_order(l));
        for (const auto& [j, f] : s.F) {
            CHECK(f.valuation() >= 0);
            CHECK(s.F_expr.at(j).weight() == j);
            CHECK(s.F_expr.at(j).evaluate(f.precision()) == f);
        }
    }
}

TEST_CASE("the solved forms kill every theta_{l,r}") {
    for (int l : {3, 5, 7, 9}) {
        const ThetaSystem s = solve_F(l, default_solve_order(l));
        const std::int64_t n = 10;
        for (int r = 0; r < l; ++r) {
            RatQExp acc = RatQExp::zero(Precision::q_order(n, level_denom(l)));
            RatQExp d = theta_lr(l, r, Precision::q_order(n, level_denom(l)));
            for (int k = 0; k <= s.size(); ++k) {
                const int j = l - 2 * k - 1;
                acc += d * s.F_expr.at(j).evaluate(Precision{1, n});
                d = serre_D(d, Rat(4 * k + 1, 2));
            }
            CHECK(acc.is_zero());
            CHECK(acc.order() > 0);
        }
    }
}

TEST_CASE("solve_F refuses too little order") {
    CHECK_THROWS_AS(solve_F(5, 4), InsufficientOrder);
    CHECK_THROWS_AS(solve_F(4, 30), Error);
}
