#include <doctest.h>

#include <random>

#include "appell/modforms.hpp"
#include "oracles.hpp"

using namespace appell;

namespace {

/// Rank of a rational matrix by plain elimination.
int rank_of(std::vector<std::vector<Rat>> m) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][c].is_zero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto& p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero())
                continue;
            const Rat f = m[r][c] / p[c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] -= f * p[j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("eta from the pentagonal number theorem") {
    const RatQExp eta = eta_series(Precision::q_order(40, 24));
    CHECK(eta.valuation() == 1);
    CHECK(eta.coeff(1) == Rat(1));
    const auto c = oracle::euler_product(40);
    for (int n = 0; n < 39; ++n)
        CHECK(eta.coeff(1 + 24 * n) == Rat(c[static_cast<std::size_t>(n)]));
    CHECK_THROWS_AS(eta_series(Precision{12, 120}), Error);
}

TEST_CASE("Eisenstein series against divisor sums") {
    const std::map<int, Rat> ck = {{2, Rat(-24)}, {4, Rat(240)},  {6, Rat(-504)},
                                   {8, Rat(480)}, {10, Rat(-264)}, {12, Rat(65520, 691)}};
    for (const auto& [k, c] : ck) {
        const RatQExp e = eisenstein(k, Precision{1, 15});
        CHECK(e.coeff(0) == Rat(1));
        for (long n = 1; n < 15; ++n)
            CHECK(e.coeff(n) == c * Rat(oracle::sigma(n, static_cast<unsigned>(k - 1))));
    }
    const RatQExp e2 = eisenstein(2, Precision{1, 4});
    CHECK(e2.coeff(1) == Rat(-24));
    CHECK(e2.coeff(2) == Rat(-72));
    CHECK(e2.coeff(3) == Rat(-96));
    CHECK(eisenstein(4, Precision{1, 3}).coeff(2) == Rat(2160));
    CHECK(eisenstein(6, Precision{1, 3}).coeff(2) == Rat(-16632));
    CHECK_THROWS_AS(eisenstein(14, Precision{1, 3}), UnsupportedWeight);
    CHECK_THROWS_AS(eisenstein(3, Precision{1, 3}), UnsupportedWeight);
    // the standard normalization relations
    const Precision p{1, 20};
    const RatQExp e4 = eisenstein(4, p);
    const RatQExp e6 = eisenstein(6, p);
    CHECK(eisenstein(8, p) == e4 * e4);
    CHECK(eisenstein(10, p) == e4 * e6);
    CHECK(eisenstein(12, p) == (pow(e4, 3).scaled(Rat(441)) + (e6 * e6).scaled(Rat(250))).scaled(Rat(1, 691)));
}

TEST_CASE("Delta") {
    const Precision p{1, 13};
    const RatQExp d = delta_series(p);
    CHECK(d.coeff(0) == Rat(0));
    CHECK(d.coeff(1) == Rat(1));
    CHECK(d.coeff(2) == Rat(-24));
    CHECK(d.coeff(3) == Rat(252));
    // eta^24 from the dense oracle product
    const auto c = oracle::euler_product(13);
    std::vector<mpz_class> e(c.begin(), c.end());
    std::vector<mpz_class> acc = {1};
    for (int i = 0; i < 24; ++i)
        acc = oracle::mul_trunc(acc, e, 12);
    for (int n = 1; n < 13; ++n)
        CHECK(d.coeff(n) == Rat(acc[static_cast<std::size_t>(n - 1)]));
    CHECK(d.scaled(Rat(1728)) + pow(eisenstein(6, p), 2) == pow(eisenstein(4, p), 3));
}

TEST_CASE("partition numbers") {
    const RatQExp p = partition_series(Precision{1, 60});
    const auto ref = oracle::partitions(60);
    for (int n = 0; n < 60; ++n)
        CHECK(p.coeff(n) == Rat(ref[static_cast<std::size_t>(n)]));
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(4) == Rat(5));
    CHECK(p.coeff(9) == Rat(30));
    CHECK(p.coeff(14) == Rat(135));
    const RatQExp eta_inv = invert(eta_series(Precision::q_order(30, 24)));
    CHECK(partition_series(Precision{1, 30}).rebased(24).shifted(-1).truncated(eta_inv.order()) == eta_inv);
}

TEST_CASE("Serre derivative") {
    const Precision p = Precision::q_order(20, 24);
    const RatQExp eta = eta_series(p);
    for (int k = 1; k <= 8; ++k)
        CHECK(serre_D(pow(eta, static_cast<unsigned>(k)), Rat(k, 2)).is_zero());
    CHECK(serre_D(pow(eta, 3), Rat(3, 2)).order() == pow(eta, 3).order());
    CHECK(serre_D(RatQExp::constant(Rat(1), Precision{1, 10}), Rat(0)).is_zero());
    CHECK(qderive(eta).scaled(Rat(24)) == eisenstein(2, p) * eta);
}

TEST_CASE("Serre ladder") {
    const RatQExp f = eisenstein(4, Precision{1, 10});
    CHECK(iter_D(f, 0) == f);
    CHECK(iter_D(eta_series(Precision::q_order(20, 24)), 1).is_zero());
    const RatQExp th = RatQExp::monomial(Rat(1), 9, Precision{40, 40});
    CHECK(iter_D(th, 1).coeff(9) == Rat(9, 40) - Rat(1, 24));
    // the ladder D_{1/2}, D_{5/2}: second step uses k = 5/2
    const RatQExp eta3 = pow(eta_series(Precision::q_order(10, 24)), 3);
    CHECK(iter_D(eta3, 2) == serre_D(serre_D(eta3, Rat(1, 2)), Rat(5, 2)));
}

TEST_CASE("Serre Leibniz splitting on random series") {
    std::mt19937_64 g(7);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int i = 0; i < 50; ++i) {
        RatQExp f(Precision{24, 24 * 8});
        RatQExp h(Precision{24, 24 * 7});
        for (int j = 0; j < 6; ++j) {
            f.add_term(std::uniform_int_distribution<std::int64_t>(0, 24 * 8 - 1)(g), Rat(c(g)));
            h.add_term(std::uniform_int_distribution<std::int64_t>(0, 24 * 7 - 1)(g), Rat(c(g)));
        }
        const Rat k1(c(g), 1 + std::abs(c(g)));
        const Rat k2(c(g), 1 + std::abs(c(g)));
        CHECK(serre_D(f * h, k1 + k2) == serre_D(f, k1) * h + f * serre_D(h, k2));
    }
}

TEST_CASE("dimensions and monomial bases") {
    const std::map<int, int> dims = {{0, 1}, {2, 0}, {4, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 2}, {14, 1}, {24, 3}};
    for (const auto& [w, d] : dims)
        CHECK(modular_forms_dimension(w) == d);
    CHECK(modular_forms_dimension(7) == 0);
    CHECK(modular_forms_dimension(-4) == 0);
    for (int w = 0; w <= 24; w += 2) {
        const auto basis = monomial_basis(w);
        CHECK(static_cast<int>(basis.size()) == modular_forms_dimension(w));
        std::vector<std::vector<Rat>> rows;
        for (const auto& [a, b] : basis) {
            const RatQExp m = ModularFormExpr(w, {{{a, b}, Rat(1)}}).evaluate(Precision{1, 12});
            std::vector<Rat> row;
            for (int n = 0; n < 12; ++n)
                row.push_back(m.coeff(n));
            rows.push_back(row);
        }
        CHECK(rank_of(rows) == modular_forms_dimension(w));
    }
}

TEST_CASE("identify") {
    const Precision p{1, 30};
    CHECK(identify(eisenstein(4, p), 4) == ModularFormExpr(4, {{{1, 0}, Rat(1)}}));
    const RatQExp f4 = eisenstein(4, p).scaled(Rat(-11, 3600));
    CHECK(identify(f4, 4).str() == "-11/3600*E4");
    CHECK(identify(RatQExp::zero(p), 6).is_zero());
    CHECK(identify(RatQExp::constant(Rat(3), p), 0) == ModularFormExpr::one().scaled(Rat(3)));
    CHECK(identify(RatQExp::zero(p), 2).is_zero());
    CHECK_THROWS_AS(identify(eisenstein(2, p), 2), Inconsistent);
    CHECK_THROWS_AS(identify(eisenstein(6, p), 4), Inconsistent);
    CHECK_THROWS_AS(identify(eisenstein(4, Precision{1, 4}), 4), InsufficientOrder);
    CHECK_THROWS_AS(identify(eta_series(Precision::q_order(10, 24)), 4), Inconsistent);

    std::mt19937_64 g(3);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int w = 0; w <= 16; w += 2) {
        for (int trial = 0; trial < 4; ++trial) {
            std::map<ModularFormExpr::Key, Rat> coeffs;
            for (const auto& key : monomial_basis(w))
                coeffs[key] = Rat(c(g), 1 + std::abs(c(g)));
            const ModularFormExpr e(w, coeffs);
            CHECK(identify(e.evaluate(Precision{1, 25}), w) == e);
        }
    }
}

TEST_CASE("E12 and Delta presentation") {
    const ModularFormExpr e12(12, {{{3, 0}, Rat(441, 691)}, {{0, 2}, Rat(250, 691)}});
    CHECK(eisenstein_delta_presentation(e12) == std::vector<Rat>{Rat(1), Rat(0)});
    const ModularFormExpr delta(12, {{{3, 0}, Rat(1, 1728)}, {{0, 2}, Rat(-1, 1728)}});
    CHECK(eisenstein_delta_presentation(delta) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(eisenstein_delta_presentation(ModularFormExpr(4, {{{1, 0}, Rat(2)}})) == std::vector<Rat>{Rat(2)});
}

TEST_CASE("Ramanujan's E2 identity") {
    CHECK(ramanujan_E2_identity_check(20));
    CHECK(ramanujan_E2_identity_check(3));
}
