#include <doctest.h>

#include <random>

#include "appell/modforms.hpp"
#include "appell/qexp.hpp"
#include "oracles.hpp"

using namespace appell;

namespace {

RatQExp series(std::int64_t denom, std::int64_t order, std::map<std::int64_t, Rat> terms) {
    return RatQExp::from_terms(Precision{denom, order}, terms);
}

RatQExp random_series(std::mt19937_64& g, std::int64_t denom, std::int64_t order) {
    std::uniform_int_distribution<long> coef(-6, 6);
    std::uniform_int_distribution<std::int64_t> expo(0, order - 1);
    RatQExp out(Precision{denom, order});
    out.add_term(std::uniform_int_distribution<std::int64_t>(0, denom)(g), Rat(1 + std::abs(coef(g))));
    for (int i = 0; i < 8; ++i)
        out.add_term(expo(g), Rat(coef(g), 1 + std::abs(coef(g))));
    return out;
}

} // namespace

TEST_CASE("addition rebases to the lcm and takes the smaller order") {
    const RatQExp a = series(24, 24 * 5, {{1, Rat(1)}});
    const RatQExp b = series(40, 40 * 3, {{1, Rat(2)}});
    const RatQExp c = a + b;
    CHECK(c.denom() == 120);
    CHECK(c.order() == 360);
    CHECK(c.coeff(5) == Rat(1));
    CHECK(c.coeff(3) == Rat(2));
    CHECK(a.rebased(48) == a);
    CHECK_THROWS_AS(a.rebased(36), Error);
}

TEST_CASE("geometric telescope") {
    const std::int64_t n = 20;
    const RatQExp one_minus_q = series(1, 1000, {{0, Rat(1)}, {1, Rat(-1)}});
    RatQExp geo(Precision{1, n});
    for (int k = 0; k < n; ++k)
        geo.add_term(k, Rat(1));
    const RatQExp prod = one_minus_q * geo;
    CHECK(prod.order() == n);
    CHECK(prod == RatQExp::constant(Rat(1), Precision{1, n}));
}

TEST_CASE("product order rule") {
    // zero series carry their order as valuation
    const RatQExp z = RatQExp::zero(Precision{1, 7});
    const RatQExp f = series(1, 10, {{2, Rat(1)}});
    CHECK((z * f).order() == std::min<std::int64_t>(7 + 2, 10 + 7));
    CHECK((f * f).order() == 12);
    CHECK((f * f).coeff(4) == Rat(1));
}

TEST_CASE("eta squared two ways") {
    const Precision p = Precision::q_order(10, 24);
    const RatQExp eta = eta_series(p);
    const auto prod = oracle::euler_product(12);
    std::vector<mpz_class> e(prod.begin(), prod.end());
    const auto sq = oracle::mul_trunc(e, e, 10);
    const RatQExp eta2 = eta * eta;
    for (std::int64_t n = 0; n < 9; ++n)
        CHECK(eta2.coeff(2 + 24 * n) == Rat(sq[static_cast<std::size_t>(n)]));
}

TEST_CASE("inversion") {
    const RatQExp one_minus_q = series(1, 12, {{0, Rat(1)}, {1, Rat(-1)}});
    const RatQExp inv = invert(one_minus_q);
    CHECK(inv.order() == 12);
    for (int k = 0; k < 12; ++k)
        CHECK(inv.coeff(k) == Rat(1));

    const Precision p = Precision::q_order(15, 24);
    const RatQExp eta_inv = invert(eta_series(p));
    CHECK(eta_inv.valuation() == -1);
    const auto part = oracle::partitions(14);
    for (int n = 0; n < 14; ++n)
        CHECK(eta_inv.coeff(24 * n - 1) == Rat(part[static_cast<std::size_t>(n)]));
    CHECK((eta_series(p) * eta_inv) == RatQExp::constant(Rat(1), Precision{24, (eta_series(p) * eta_inv).order()}));

    const RatQExp shifted = series(1, 10, {{1, Rat(1)}, {2, Rat(1)}});
    const RatQExp si = invert(shifted);
    CHECK(si.valuation() == -1);
    CHECK(si.order() == 8);
    for (int k = -1; k < 8; ++k)
        CHECK(si.coeff(k) == Rat((k + 1) % 2 == 0 ? 1 : -1));

    CHECK_THROWS_AS(invert(RatQExp::zero(Precision{1, 5})), NonUnitLeadingCoefficient);
}

TEST_CASE("q d/dq") {
    CHECK(qderive(RatQExp::constant(Rat(5), Precision{1, 10})).is_zero());
    const RatQExp m = series(24, 240, {{1, Rat(1)}});
    CHECK(qderive(m) == m.scaled(Rat(1, 24)));
    const RatQExp e2 = qderive(eisenstein(2, Precision{1, 4}));
    CHECK(e2.coeff(1) == Rat(-24));
    CHECK(e2.coeff(2) == Rat(-144));
    CHECK(e2.coeff(3) == Rat(-288));
}

TEST_CASE("coefficient access") {
    CHECK(RatQExp::constant(Rat(1), Precision{1, 3}).coeff(0) == Rat(1));
    const RatQExp eta = eta_series(Precision::q_order(3, 24));
    CHECK(eta.coeff(25) == Rat(-1));
    CHECK(eta.coeff(24) == Rat(0));
    CHECK_THROWS_AS(eta.coeff(72), OrderExceeded);
}

TEST_CASE("coarsening and shifting") {
    const RatQExp f = series(24, 240, {{24, Rat(3)}, {48, Rat(1)}});
    const RatQExp g = f.coarsened(1);
    CHECK(g.denom() == 1);
    CHECK(g.order() == 10);
    CHECK(g.coeff(1) == Rat(3));
    CHECK_THROWS_AS(series(24, 240, {{1, Rat(1)}}).coarsened(1), Error);
    CHECK(f.shifted(-24).coeff(0) == Rat(3));
    CHECK(f.shifted(-24).order() == 216);
}

TEST_CASE("randomized laws: Leibniz, tight product orders, rebase invariance") {
    std::mt19937_64 g(99);
    for (int i = 0; i < 60; ++i) {
        const RatQExp a = random_series(g, 24, 24 * 6);
        const RatQExp b = random_series(g, 40, 40 * 5);
        const RatQExp ab = a * b;
        const RatQExp lhs = qderive(ab);
        const RatQExp rhs = qderive(a) * b + a * qderive(b);
        CHECK(lhs == rhs);

        const RatQExp ra = a.rebased(240);
        const RatQExp rb = b.rebased(240);
        CHECK(ra * rb == ab);
        CHECK(ra + rb == a + b);

        // extra terms above the operands' orders never reach the product
        RatQExp a_more(Precision{a.denom(), a.order() + 50});
        for (const auto& [m, c] : a.terms())
            a_more.add_term(m, c);
        a_more.add_term(a.order() + 7, Rat(13));
        CHECK((a_more * b).truncated(ab.order()) == ab);
    }
}
