#include "appell/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "appell/jacobi.hpp"
#include "appell/modforms.hpp"
#include "appell/theta_system.hpp"

namespace appell::acceptance {

namespace {

constexpr std::uint64_t kSeed = 0x5eed2026;
constexpr int kInstances = 50;

struct Tally {
    CriterionResult& r;

    void check(bool ok, const std::string& what) {
        r.details.push_back((ok ? "ok   " : "FAIL ") + what);
        r.passed = r.passed && ok;
    }
    void identity(const IdentityCheck& c) {
        check(c.passed, c.name + " below q^(" + c.order.str() + ")" + (c.passed ? "" : ": " + c.first_offender));
    }
    void note(const std::string& what) { r.details.push_back("note " + what); }
};

ModularFormExpr monomial_form(int weight, std::initializer_list<std::pair<ModularFormExpr::Key, Rat>> terms) {
    std::map<ModularFormExpr::Key, Rat> m;
    for (const auto& [k, c] : terms)
        m[k] = c;
    return ModularFormExpr(weight, m);
}

// ---- random instances ------------------------------------------------------

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rat small_rat() {
        long n = 0;
        while (n == 0)
            n = integer(-9, 9);
        return {n, integer(1, 6)};
    }

    Rat any_rat() { return integer(0, 4) == 0 ? Rat() : small_rat(); }

    LaurentPoly laurent(int lo, int hi, int max_terms) {
        std::map<int, Rat> t;
        const int n = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < n; ++i)
            t[static_cast<int>(integer(lo, hi))] = small_rat();
        return LaurentPoly::from_terms(t);
    }

    CoeffFrac frac() {
        const LaurentPoly num = laurent(-3, 3, 4);
        LaurentPoly den(1);
        switch (integer(0, 3)) {
        case 0:
            break;
        case 1:
            den = power(one_minus_w(), static_cast<int>(integer(1, 3)));
            break;
        default: {
            LaurentPoly d = laurent(0, 3, 3);
            if (d.is_zero())
                d = LaurentPoly(1);
            den = d;
        }
        }
        return CoeffFrac(num, den);
    }

    /// Pole only at s^2 = 1, as produced by the two-variable constructions.
    CoeffFrac pole_frac() {
        return CoeffFrac(laurent(-4, 4, 4), power(one_minus_w(), static_cast<int>(integer(0, 2))));
    }

    RatQExp series(std::int64_t denom, std::int64_t order, int terms) {
        RatQExp out(Precision{denom, order});
        const std::int64_t val = integer(0, denom);
        for (int i = 0; i < terms; ++i)
            out.add_term(integer(val, order - 1), small_rat());
        out.add_term(val, small_rat());
        return out;
    }

    FracQExp frac_series(std::int64_t denom, std::int64_t order, int terms) {
        FracQExp out(Precision{denom, order});
        for (int i = 0; i < terms; ++i)
            out.add_term(integer(-denom / 4, order - 1), pole_frac());
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    static const LaurentPoly& one_minus_w() {
        static const LaurentPoly p = LaurentPoly(1) - LaurentPoly::monomial(Rat(1), 2);
        return p;
    }
    static LaurentPoly power(const LaurentPoly& p, int k) {
        LaurentPoly out(1);
        for (int i = 0; i < k; ++i)
            out = out * p;
        return out;
    }

    std::mt19937_64 rng_;
};

template <class C>
bool agree_below(const QExp<C>& a, const QExp<C>& b, std::int64_t limit) {
    const QExp<C> d = a - b;
    return d.order() >= limit && !first_nonzero_below(d, limit);
}

/// Determinant by the permutation expansion; independent of the library's
/// subset recursion and elimination.
template <class T, class Mul, class Add>
T leibniz_det(const std::vector<std::vector<T>>& m, T one, Mul mul, Add add) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    bool first = true;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        T term = one;
        for (std::size_t i = 0; i < n; ++i)
            term = mul(term, m[i][perm[i]]);
        if (inversions % 2)
            term = -term;
        total = first ? term : add(total, term);
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// ---- criteria ------------------------------------------------------------------

void criterion1(Tally& t) {
    const ThetaSystem sys = solve_F(5, 32);
    const RatQExp& f4 = sys.F.at(4);
    t.check(f4.coeff(0) == Rat(-11, 3600) && f4.coeff(1) == Rat(-11, 15),
            "F4 = " + f4.coeff(0).str() + " + " + f4.coeff(1).str() + "*q + O(q^2)");
    t.check(sys.F_expr.at(4) == monomial_form(4, {{{1, 0}, Rat(-11, 3600)}}), "F4 = " + sys.F_expr.at(4).str());
    const RatQExp& f2 = sys.F.at(2);
    t.check(f2.is_zero() && f2.order() >= 30, "F2 = 0 + O(q^" + std::to_string(f2.order()) + ")");
}

struct TableEntry {
    int level;
    int j;
    ModularFormExpr expected;
};

void criterion2(Tally& t) {
    const std::vector<TableEntry> table = {
        {7, 6, monomial_form(6, {{{0, 1}, Rat(85, 74088)}})},
        {7, 4, monomial_form(4, {{{1, 0}, Rat(-5, 252)}})},
        {9, 8, monomial_form(8, {{{2, 0}, Rat(-253, 559872)}})},
        {9, 6, monomial_form(6, {{{0, 1}, Rat(53, 5832)}})},
        {9, 4, monomial_form(4, {{{1, 0}, Rat(-13, 216)}})},
        {11, 10, monomial_form(10, {{{1, 1}, Rat(7888, 39135393)}})},
        {11, 8, monomial_form(8, {{{2, 0}, Rat(-6151, 1724976)}})},
        {11, 6, monomial_form(6, {{{0, 1}, Rat(295, 8712)}})},
        {11, 4, monomial_form(4, {{{1, 0}, Rat(-53, 396)}})},
        {13, 10, monomial_form(10, {{{1, 1}, Rat(377735, 296120448)}})},
        {13, 8, monomial_form(8, {{{2, 0}, Rat(-621665, 45556992)}})},
        {13, 6, monomial_form(6, {{{0, 1}, Rat(3281, 36504)}})},
        {13, 4, monomial_form(4, {{{1, 0}, Rat(-459, 1872)}})},
    };
    std::map<int, ThetaSystem> systems;
    for (int l : {7, 9, 11, 13})
        systems.emplace(l, solve_F(l, default_solve_order(l)));

    for (const auto& [l, sys] : systems)
        t.check(sys.F.at(2).is_zero(), "l=" + std::to_string(l) + " F2 = 0");

    for (const auto& e : table) {
        const ThetaSystem& sys = systems.at(e.level);
        const ModularFormExpr& got = sys.F_expr.at(e.j);
        const std::string tag = "l=" + std::to_string(e.level) + " F" + std::to_string(e.j);
        if (got == e.expected) {
            t.check(true, tag + " = " + got.str());
            continue;
        }
        // A disagreement stands only if the tabulated value is refuted by the
        // main identity while the computed one satisfies it.
        ThetaSystem alt = sys;
        const int k = (e.level - 1 - e.j) / 2;
        alt.F_expr[e.j] = e.expected;
        alt.f_expr[e.j] = e.expected.scaled(Rat(2L * e.level).pow(-k));
        const IdentityCheck with_table = verify_main(alt, 12);
        const IdentityCheck with_ours = verify_main(sys, 12);
        const bool settled = !with_table.passed && with_ours.passed;
        t.check(settled, tag + ": computed " + got.str() + ", tabulated " + e.expected.str());
        if (settled)
            t.note(tag + ": the tabulated value breaks theta^l P + (l-1)! f0 eta^(3l) = 0 at " +
                   with_table.first_offender.substr(0, with_table.first_offender.find(':')) +
                   "; the computed value satisfies it below q^12. Reported as a discrepancy in the table.");
    }

    // weight 12 at l = 13, in the E12 / Delta presentation
    const std::vector<Rat> pres = eisenstein_delta_presentation(systems.at(13).F_expr.at(12));
    const std::vector<Rat> expected = {Rat(mpq_class("-1462986875/14412774445056")), Rat(170060275, 5683867488L)};
    t.check(pres == expected, "l=13 F12 = " + pres.at(0).str() + "*E12 + " + pres.at(1).str() +
                                  "*Delta (E12 = 1 + 65520/691 sum sigma_11(n) q^n, Delta = (E4^3 - E6^2)/1728)");
}

void criterion3(Tally& t) {
    const ThetaSystem sys = solve_F(3, default_solve_order(3));
    t.check(sys.F_expr.at(0) == ModularFormExpr::one(), "F0 = 1");
    t.check(sys.F.at(2).is_zero(), "F2 = 0");
    t.check(sys.f_expr.at(0) == ModularFormExpr::one().scaled(Rat(1, 6)), "f0 = " + sys.f_expr.at(0).str());
    for (const auto& c : rank_crank_checks(12))
        t.identity(c);
}

void criterion4(Tally& t) {
    for (const auto& c : garvan_checks(10))
        t.identity(c);
    Gen g(kSeed + 4);
    const JacobiQExp random(5, g.frac_series(level_denom(5), 6 * level_denom(5), 8));
    IdentityCheck c = operator_reduction_check(random);
    c.name += " on a random series";
    t.identity(c);
}

void criterion5(Tally& t) {
    for (int l : {1, 3, 5, 7, 9, 11, 13})
        t.identity(verify_main(solve_F(l, default_solve_order(l)), 12));
}

void criterion6(Tally& t) {
    for (int l = 3; l <= 13; l += 2) {
        const RatQExp det = det_T(l, 15);
        t.check(det.order() >= 15 * det.denom(), "det T_" + std::to_string(l) + " = " +
                                                     vandermonde(l).detB.str() + "*eta^" +
                                                     std::to_string((l - 1) * (l - 2) / 2) + " below q^15");
    }
    for (auto [l, expected] : {std::pair{5, Rat(-1, 5)}, std::pair{7, Rat(-6, 343)}}) {
        const VandermondeData v = vandermonde(l);
        std::vector<std::vector<Rat>> b;
        for (const Rat& a : v.alphas) {
            std::vector<Rat> row;
            for (std::size_t k = 0; k < v.alphas.size(); ++k)
                row.push_back(a.pow(static_cast<long>(k)));
            b.push_back(row);
        }
        const Rat brute = leibniz_det(
            b, Rat(1), [](const Rat& x, const Rat& y) { return x * y; },
            [](const Rat& x, const Rat& y) { return x + y; });
        t.check(v.detB == expected && brute == expected,
                "l=" + std::to_string(l) + " detB = " + v.detB.str() + ", permutation expansion " + brute.str());
        const ThetaSystem sys = build_T(l, 15);
        const RatQExp series_brute = leibniz_det(
            sys.T, RatQExp::constant(Rat(1), Precision::q_order(1000, level_denom(l))),
            [](const RatQExp& x, const RatQExp& y) { return x * y; },
            [](const RatQExp& x, const RatQExp& y) { return x + y; });
        const RatQExp det = det_T(l, 15);
        t.check(agree_below(det, series_brute, std::min(det.order(), series_brute.order())),
                "l=" + std::to_string(l) + " det T agrees with the permutation expansion");
        const RatQExp plain = series_det(plain_derivative_matrix(l, 15));
        t.check(agree_below(det, plain, std::min(det.order(), plain.order())),
                "l=" + std::to_string(l) + " det of the plain-derivative matrix equals det T");
    }
}

void criterion7(Tally& t) {
    for (int l : {1, 3, 5, 7})
        t.identity(verify_shift(l, 10));
}

void criterion8(Tally& t) {
    for (const auto& c : identity_checks())
        t.identity(c);
}

void criterion9(Tally& t) {
    const RatQExp p = partition_series(Precision{1, 200});
    struct Congruence {
        int a, b, mod;
    };
    for (const auto& [a, b, mod] : {Congruence{5, 4, 5}, Congruence{7, 5, 7}, Congruence{11, 6, 11}}) {
        bool ok = true;
        int count = 0;
        for (std::int64_t n = 0; a * n + b < 200; ++n, ++count) {
            const Rat c = p.coeff(a * n + b);
            ok = ok && c.is_integer() && mpz_class(c.num() % mod) == 0;
        }
        t.check(ok, "p(" + std::to_string(a) + "n+" + std::to_string(b) + ") = 0 mod " + std::to_string(mod) +
                        " for " + std::to_string(count) + " values of n");
    }
    t.check(p.coeff(4) == Rat(5) && p.coeff(199) == Rat(mpq_class("3646072432125")), "p(4) = 5, p(199) = 3646072432125");
}

void criterion10(Tally& t) {
    Gen g(kSeed);
    constexpr std::int64_t d = 24;

    int ok = 0;
    for (int i = 0; i < kInstances; ++i) {
        const RatQExp f = g.series(d, 8 * d, 6);
        const RatQExp h = g.series(d, 6 * d, 6);
        const Rat k1 = g.any_rat();
        const Rat k2 = g.any_rat();
        const RatQExp lhs = serre_D(f * h, k1 + k2);
        const RatQExp rhs = serre_D(f, k1) * h + f * serre_D(h, k2);
        ok += agree_below(lhs, rhs, (f * h).order());
    }
    t.check(ok == kInstances, "D_{k1+k2}(f g) = D_{k1}(f) g + f D_{k2}(g): " + std::to_string(ok) + "/" +
                                  std::to_string(kInstances));

    ok = 0;
    for (int i = 0; i < kInstances; ++i) {
        const CoeffFrac a = g.frac();
        const CoeffFrac b = g.frac();
        ok += euler_w(a * b) == euler_w(a) * b + a * euler_w(b);
    }
    t.check(ok == kInstances, "euler_w(a b) = euler_w(a) b + a euler_w(b): " + std::to_string(ok) + "/" +
                                  std::to_string(kInstances));

    int parity = 0;
    int parity_total = 0;
    auto odd = [&](const JacobiQExp& f) {
        ++parity_total;
        parity += subst_neg_s(f) == -f;
    };
    for (int l = 1; l <= 13; l += 2) {
        const Precision p = Precision::q_order(6, level_denom(l));
        const JacobiQExp a = appell(l, p);
        odd(a);
        odd(jacobi_theta(l, p));
        odd(crank_series(l, p));
        odd(heat_apply(HeatOp{l, Rat(1)}, a));
        const ThetaSystem sys = solve_F(l, default_solve_order(l));
        const JacobiQExp big_p = assemble_P(sys, p);
        odd(big_p);
        ++parity_total;
        const JacobiQExp closed(l, pow(jacobi_theta(l, p).series(), static_cast<unsigned>(l)) * big_p.series());
        parity += subst_neg_s(closed) == closed;
    }
    odd(rank_series(Precision::q_order(6, 72)));
    for (int i = 0; i < kInstances; ++i) {
        const JacobiQExp f(5, g.frac_series(level_denom(5), 4 * level_denom(5), 5));
        const HeatOp op{5, g.small_rat()};
        ++parity_total;
        parity += subst_neg_s(subst_neg_s(f)) == f && heat_apply(op, subst_neg_s(f)) == subst_neg_s(heat_apply(op, f));
    }
    t.check(parity == parity_total, "s -> -s parity and commutation with heat operators: " + std::to_string(parity) +
                                        "/" + std::to_string(parity_total));

    ok = 0;
    for (int i = 0; i < kInstances; ++i) {
        const int l = 2 * static_cast<int>(g.integer(0, 12)) + 1;
        const int r = static_cast<int>(g.integer(-2L * l, 3L * l));
        const RatQExp th = theta_lr(l, r, Precision::q_order(g.integer(4, 30), level_denom(l)));
        const std::int64_t cls = 3L * (l - 2 * r) * (l - 2 * r);
        ok += std::all_of(th.terms().begin(), th.terms().end(),
                          [&](const auto& kv) { return (kv.first - cls) % level_denom(l) == 0; });
    }
    t.check(ok == kInstances,
            "theta_{l,r} exponents lie in 3(l-2r)^2/(24l) + Z: " + std::to_string(ok) + "/" + std::to_string(kInstances));

    ok = 0;
    for (int i = 0; i < kInstances; ++i) {
        const std::int64_t na = g.integer(2, 8) * d + g.integer(0, d - 1);
        const std::int64_t nb = g.integer(2, 8) * d + g.integer(0, d - 1);
        const RatQExp a_full = g.series(d, na + 6 * d, 10);
        const RatQExp b_full = g.series(d, nb + 6 * d, 10);
        const RatQExp a = a_full.truncated(na);
        const RatQExp b = b_full.truncated(nb);
        const RatQExp prod = a * b;
        const std::int64_t declared = std::min(na + b.valuation(), nb + a.valuation());
        // junk at or beyond the declared operand orders must not reach below the product order
        RatQExp a_junk(Precision{d, na + 3 * d});
        RatQExp b_junk(Precision{d, nb + 3 * d});
        for (const auto& [m, c] : a.terms())
            a_junk.add_term(m, c);
        for (const auto& [m, c] : b.terms())
            b_junk.add_term(m, c);
        for (int j = 0; j < 4; ++j) {
            a_junk.add_term(na + g.integer(0, 3 * d - 1), g.small_rat());
            b_junk.add_term(nb + g.integer(0, 3 * d - 1), g.small_rat());
        }
        ok += prod.order() == declared && agree_below(prod, a_full * b_full, declared) &&
              agree_below(prod, a_junk * b_junk, declared);
    }
    t.check(ok == kInstances, "product order min(Na + val b, Nb + val a) is exact: " + std::to_string(ok) + "/" +
                                  std::to_string(kInstances));
}

struct Spec {
    int id;
    const char* title;
    void (*body)(Tally&);
};

const std::vector<Spec>& specs() {
    static const std::vector<Spec> all = {
        {1, "level 5 table: F4 head and identification, F2 = 0 to order 30", criterion1},
        {2, "level 7, 9, 11, 13 tables", criterion2},
        {3, "level 3 system and the rank-crank PDE", criterion3},
        {4, "Garvan's PDE and the operator reduction", criterion4},
        {5, "theta^l P + (l-1)! f0 eta^(3l) = 0 for l = 1 .. 13", criterion5},
        {6, "det T_l = detB eta^((l-1)(l-2)/2)", criterion6},
        {7, "shift identity for l = 1, 3, 5, 7", criterion7},
        {8, "eta, Eisenstein and theta identity suite", criterion8},
        {9, "partition congruences mod 5, 7, 11", criterion9},
        {10, "randomized property suites", criterion10},
    };
    return all;
}

} // namespace

CriterionResult run_one(int id) {
    for (const auto& s : specs()) {
        if (s.id != id)
            continue;
        CriterionResult r;
        r.id = s.id;
        r.title = s.title;
        r.passed = true;
        Tally t{r};
        try {
            s.body(t);
        } catch (const std::exception& e) {
            t.check(false, std::string("exception: ") + e.what());
        }
        return r;
    }
    throw Error("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (const auto& s : specs())
        out.push_back(run_one(s.id));
    return out;
}

std::string format(const CriterionResult& r, bool with_details) {
    std::string out = std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + "\n";
    if (with_details)
        for (const auto& d : r.details)
            out += "    " + d + "\n";
    return out;
}

} // namespace appell::acceptance
