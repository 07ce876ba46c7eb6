#include "appell/jacobi.hpp"

#include <cmath>
#include <functional>

#include "appell/modforms.hpp"

namespace appell {

namespace {

CoeffFrac s_power(int e) { return CoeffFrac(LaurentPoly::monomial(Rat(1), e)); }

/// 1 - s^2
const LaurentPoly& one_minus_w() {
    static const LaurentPoly p = LaurentPoly(1) - LaurentPoly::monomial(Rat(1), 2);
    return p;
}

void require_level(const JacobiQExp& a, const JacobiQExp& b) {
    if (a.level() != b.level())
        throw LevelMismatch("combining level " + std::to_string(a.level()) + " and level " +
                            std::to_string(b.level()) + " series");
}

void require_grid(Precision p, std::int64_t multiple_of, const char* what) {
    if (p.denom % multiple_of != 0)
        throw Error(std::string(what) + " needs an exponent grid divisible by " + std::to_string(multiple_of));
}

/// sum_n (-1)^n s^prefix q^(e(n)) / (1 - s^2 q^(n + pole_shift)), each term
/// expanded geometrically in the region |q| < |w| < 1; e(n) is an integer.
FracQExp lerch_sum(int prefix, int pole_shift, const std::function<std::int64_t(std::int64_t)>& e, Precision p) {
    FracQExp out(p);
    const std::int64_t d = p.denom;
    // least q-exponent contributed by term n
    auto least = [&](std::int64_t n) {
        const std::int64_t k = n + pole_shift;
        return k >= 0 ? e(n) : e(n) - k;
    };
    auto add_term_n = [&](std::int64_t n) {
        const Rat sign(n % 2 == 0 ? 1 : -1);
        const std::int64_t k = n + pole_shift;
        const std::int64_t base = e(n);
        if (k == 0) {
            out.add_term(base * d, CoeffFrac(LaurentPoly::monomial(sign, prefix), one_minus_w()));
        } else if (k > 0) {
            // 1/(1 - w q^k) = sum_{m >= 0} w^m q^(km)
            for (std::int64_t m = 0; (base + k * m) * d < p.order; ++m)
                out.add_term((base + k * m) * d,
                             CoeffFrac(LaurentPoly::monomial(sign, prefix + 2 * static_cast<int>(m))));
        } else {
            // 1/(1 - w q^k) = -sum_{m >= 1} w^(-m) q^(-km)
            for (std::int64_t m = 1; (base - k * m) * d < p.order; ++m)
                out.add_term((base - k * m) * d,
                             CoeffFrac(LaurentPoly::monomial(-sign, prefix - 2 * static_cast<int>(m))));
        }
    };
    // e is a convex quadratic, so once a term lies past the order and the
    // least exponents are increasing, every further n does too.
    for (std::int64_t n = 0;; ++n) {
        if (least(n) * d >= p.order && least(n + 1) >= least(n))
            break;
        add_term_n(n);
    }
    for (std::int64_t n = -1;; --n) {
        if (least(n) * d >= p.order && least(n - 1) >= least(n))
            break;
        add_term_n(n);
    }
    return out;
}

/// Coefficients of prod_{n=1}^{len-1} (1 - q^n) / ((1 - w q^n)(1 - w^-1 q^n)), integer grid.
std::vector<LaurentPoly> crank_product(std::int64_t len) {
    std::vector<LaurentPoly> c(static_cast<std::size_t>(std::max<std::int64_t>(len, 0)));
    if (len == 0)
        return c;
    c[0] = LaurentPoly(1);
    const LaurentPoly w = LaurentPoly::monomial(Rat(1), 2);
    const LaurentPoly w_inv = LaurentPoly::monomial(Rat(1), -2);
    const auto ulen = static_cast<std::size_t>(len);
    for (std::size_t n = 1; n < ulen; ++n) {
        for (std::size_t j = ulen - 1; j >= n; --j)
            c[j] -= c[j - n];
        for (std::size_t j = n; j < ulen; ++j)
            c[j] += w * c[j - n];
        for (std::size_t j = n; j < ulen; ++j)
            c[j] += w_inv * c[j - n];
    }
    return c;
}

RatQExp e2_for(const FracQExp& f) {
    return eisenstein(2, Precision{f.denom(), f.order() - std::min<std::int64_t>(0, f.valuation())});
}

Rat factorial(int n) {
    Rat out(1);
    for (int i = 2; i <= n; ++i)
        out *= Rat(i);
    return out;
}

IdentityCheck all_of(std::string name, const std::vector<IdentityCheck>& checks) {
    IdentityCheck out;
    out.name = std::move(name);
    out.passed = true;
    out.order = checks.empty() ? Rat() : checks.front().order;
    for (const auto& c : checks) {
        if (c.order < out.order)
            out.order = c.order;
        if (!c.passed && out.passed) {
            out.passed = false;
            out.first_offender = c.name + ": " + c.first_offender;
        }
    }
    return out;
}

} // namespace

FracQExp lift(const RatQExp& f) {
    return f.map_coeffs([](const Rat& c) { return CoeffFrac(c); });
}

JacobiQExp JacobiQExp::times(const RatQExp& g) const { return {level_, series_ * lift(g)}; }

JacobiQExp operator+(const JacobiQExp& a, const JacobiQExp& b) {
    require_level(a, b);
    return {a.level_, a.series_ + b.series_};
}

JacobiQExp operator*(const JacobiQExp& a, const JacobiQExp& b) {
    require_level(a, b);
    return {a.level_, a.series_ * b.series_};
}

JacobiQExp subst_neg_s(const JacobiQExp& f) {
    return {f.level(), f.series().map_coeffs([](const CoeffFrac& c) { return subst_neg_s(c); })};
}

JacobiQExp appell(int l, Precision p) {
    if (l < 1 || l % 2 == 0)
        throw Error("Appell level must be an odd positive integer");
    const std::int64_t ll = l;
    return {l, lerch_sum(l, 0, [ll](std::int64_t n) { return ll * n * (n + 1) / 2; }, p)};
}

JacobiQExp shifted_appell(int l, Precision p) {
    if (l < 1 || l % 2 == 0)
        throw Error("Appell level must be an odd positive integer");
    const std::int64_t ll = l;
    // w^(-l/2) sum_n (-1)^n q^(l n(n+1)/2) / (1 - w q^(n+1)): the z -> z + tau
    // substitution applied to each term of the defining sum before expansion
    return {l, lerch_sum(-l, 1, [ll](std::int64_t n) { return ll * n * (n + 1) / 2; }, p)};
}

JacobiQExp jacobi_theta(int level, Precision p) {
    require_grid(p, 8, "Jacobi theta");
    const std::int64_t scale = p.denom / 8;
    FracQExp out(p);
    for (std::int64_t x = 1; x * x * scale < p.order; x += 2) {
        // x = 2n + 1 for n >= 0 and -x = 2n + 1 for n = -(x+1)/2
        const long n = (x - 1) / 2;
        out.add_term(x * x * scale, CoeffFrac(LaurentPoly::monomial(Rat(n % 2 == 0 ? 1 : -1), static_cast<int>(x))));
        const long nn = -(x + 1) / 2;
        out.add_term(x * x * scale,
                     CoeffFrac(LaurentPoly::monomial(Rat(nn % 2 == 0 ? 1 : -1), -static_cast<int>(x))));
    }
    return {level, out};
}

JacobiQExp crank_series(int level, Precision p) {
    require_grid(p, 24, "crank series");
    const std::int64_t d = p.denom;
    const std::int64_t offset = d / 24;
    const auto prod = crank_product(std::max<std::int64_t>(0, ceil_div(p.order + offset, d)));
    FracQExp out(p);
    for (std::size_t n = 0; n < prod.size(); ++n)
        if (!prod[n].is_zero())
            out.add_term(static_cast<std::int64_t>(n) * d - offset, CoeffFrac(prod[n].shifted(1), one_minus_w()));
    return {level, out};
}

JacobiQExp rank_series(Precision p) {
    require_grid(p, 24, "rank series");
    const std::int64_t d = p.denom;
    const std::int64_t offset = d / 24;
    const Precision integral{1, std::max<std::int64_t>(0, ceil_div(p.order + offset, d))};
    // R/(1 - w) = (1/(q)_inf) sum_n (-1)^n q^(n(3n+1)/2) / (1 - w q^n)
    const FracQExp sum = lerch_sum(0, 0, [](std::int64_t n) { return n * (3 * n + 1) / 2; }, integral);
    const FracQExp body = sum * lift(partition_series(integral));
    const FracQExp out = body.rebased(d).shifted(-offset).map_coeffs([](const CoeffFrac& c) { return c * s_power(1); });
    return {3, out.truncated(p.order)};
}

JacobiQExp heat_apply(const HeatOp& op, const JacobiQExp& f) {
    if (op.level != f.level())
        throw LevelMismatch("heat operator of level " + std::to_string(op.level) + " applied to a level " +
                            std::to_string(f.level()) + " series");
    const FracQExp& s = f.series();
    FracQExp out = qderive(s).scaled(Rat(2L * op.level)) +
                   s.map_coeffs([](const CoeffFrac& c) { return euler_w(euler_w(c)); });
    const Rat e2_weight = Rat(op.level) * (Rat(2) * op.index - Rat(1)) / Rat(12);
    if (!e2_weight.is_zero())
        out -= (lift(e2_for(s)) * s).scaled(e2_weight);
    return {f.level(), out};
}

JacobiQExp heat_ladder(int l, int kmax, const JacobiQExp& f) {
    JacobiQExp out = f;
    for (int j = 1; j <= kmax; ++j)
        out = heat_apply(HeatOp{l, Rat(2 * j - 1)}, out);
    return out;
}

JacobiQExp assemble_P(const ThetaSystem& sys, Precision p) {
    const int l = sys.level;
    const int h = sys.size();
    JacobiQExp ladder = appell(l, p);
    JacobiQExp total(l, FracQExp(p));
    for (int k = 0; k <= h; ++k) {
        const int j = l - 2 * k - 1;
        auto it = sys.f_expr.find(j);
        if (it == sys.f_expr.end())
            throw Error("theta system has no identified f_" + std::to_string(j));
        if (!it->second.is_zero())
            total = total + ladder.times(it->second.evaluate(Precision{p.denom, p.order}));
        if (k < h)
            ladder = heat_apply(HeatOp{l, Rat(2 * k + 1)}, ladder);
    }
    if (total.order() < p.order)
        throw InsufficientOrder("P is only known below q^(" + total.series().order_q().str() + ")");
    return total;
}

template <class C>
IdentityCheck check_vanishes(std::string name, const QExp<C>& residual, Rat target) {
    const Rat scaled = target * Rat(residual.denom());
    if (!scaled.is_integer())
        throw Error("target order is off the series grid");
    const std::int64_t limit = scaled.num().get_si();
    if (residual.order() < limit)
        throw InsufficientOrder(name + ": residual known below q^(" + residual.order_q().str() +
                                ") only, need q^(" + target.str() + ")");
    IdentityCheck out;
    out.name = std::move(name);
    out.order = target;
    if (auto bad = first_nonzero_below(residual, limit)) {
        out.passed = false;
        out.first_offender = "q^(" + Rat(bad->first, residual.denom()).str() + "): " + bad->second.str();
    } else {
        out.passed = true;
    }
    return out;
}

template IdentityCheck check_vanishes<Rat>(std::string, const QExp<Rat>&, Rat);
template IdentityCheck check_vanishes<CoeffFrac>(std::string, const QExp<CoeffFrac>&, Rat);

IdentityCheck verify_main(const ThetaSystem& sys, std::int64_t n) {
    const int l = sys.level;
    const Precision p = Precision::q_order(n, level_denom(l));
    const JacobiQExp big_p = assemble_P(sys, p);
    const JacobiQExp theta = jacobi_theta(l, p);
    const JacobiQExp lhs = JacobiQExp(l, pow(theta.series(), static_cast<unsigned>(l))) * big_p;
    const Rat f0 = sys.f_expr.at(0).coeff(0, 0);
    const RatQExp rhs = pow(eta_series(p), static_cast<unsigned>(3 * l)).scaled(factorial(l - 1) * f0);
    return check_vanishes("theta^" + std::to_string(l) + "*P + " + std::to_string(l - 1) + "!*f0*eta^" +
                              std::to_string(3 * l) + " = 0 (level " + std::to_string(l) + ")",
                          lhs.series() + lift(rhs), Rat(n));
}

IdentityCheck verify_shift(int l, std::int64_t n) {
    const std::int64_t d = level_denom(l);
    const Precision p = Precision::q_order(n, d);
    FracQExp sum = appell(l, p).series() + shifted_appell(l, p).series();
    for (int r = 0; r < l; ++r) {
        const std::int64_t e = 3L * (2 * r - l) * (2 * r - l);
        const RatQExp th = theta_lr(l, r, Precision{d, p.order + e});
        const CoeffFrac mono = s_power(2 * r - l);
        sum += lift(th).shifted(-e).map_coeffs([&mono](const CoeffFrac& c) { return c * mono; });
    }
    return check_vanishes("shift identity (level " + std::to_string(l) + ")", sum, Rat(n));
}

IdentityCheck operator_reduction_check(const JacobiQExp& g) {
    const int l = g.level();
    const Rat ll(l);
    const JacobiQExp lhs = heat_apply({l, Rat(3, 2)}, heat_apply({l, Rat(-1, 2)}, g));
    const HeatOp pure{l, Rat(1, 2)};
    const RatQExp e2 = e2_for(g.series());
    const RatQExp bracket = qderive(e2) - (e2 * e2).scaled(Rat(1, 12));
    const JacobiQExp rhs = heat_apply(pure, heat_apply(pure, g)) + g.times(bracket).scaled(ll * ll / Rat(3));
    return check_vanishes("H_{3/2} H_{-1/2} = H^2 + (l^2/3)(E2' - E2^2/12) (level " + std::to_string(l) + ")",
                          (lhs - rhs).series(), g.series().order_q());
}

std::vector<IdentityCheck> garvan_checks(std::int64_t n) {
    constexpr int l = 5;
    const std::int64_t d = level_denom(l);
    const Precision pm = Precision::q_order(n + 1, d);
    const Rat target(n);
    const JacobiQExp a5 = appell(l, pm);
    const RatQExp eta = eta_series(pm);
    const RatQExp eta3 = pow(eta, 3);
    const JacobiQExp g5 = a5.times(invert(eta3));
    const JacobiQExp crank = crank_series(l, pm);
    const FracQExp crank5 = pow(crank.series(), 5);
    const RatQExp e4 = eisenstein(4, pm);
    const HeatOp pure{l, Rat(1, 2)};

    std::vector<IdentityCheck> out;
    const JacobiQExp garvan = heat_apply(pure, heat_apply(pure, g5)) - g5.times(e4) -
                              JacobiQExp(l, crank5 * lift(pow(eta, 2))).scaled(Rat(24));
    out.push_back(check_vanishes("(H^2 - E4) G5 = 24 eta^2 C^5", garvan.series(), target));
    out.push_back(operator_reduction_check(g5));
    const JacobiQExp h31 = heat_ladder(l, 2, a5) - a5.times(e4).scaled(Rat(11, 36)) -
                           JacobiQExp(l, crank5 * lift(pow(eta, 5))).scaled(Rat(24));
    out.push_back(check_vanishes("(H_3 H_1 - (11/36) E4) A5 = 24 eta^5 C^5", h31.series(), target));
    const JacobiQExp h1 = heat_apply({l, Rat(1)}, a5) - heat_apply({l, Rat(-1, 2)}, g5).times(eta3);
    out.push_back(check_vanishes("H_1 A5 = eta^3 H_{-1/2} G5", h1.series(), target));
    return out;
}

IdentityCheck verify_garvan(std::int64_t n) { return all_of("Garvan PDE (level 5)", garvan_checks(n)); }

std::vector<IdentityCheck> rank_crank_checks(std::int64_t n) {
    constexpr int l = 3;
    const std::int64_t d = level_denom(l);
    const Precision pm = Precision::q_order(n + 1, d);
    const Rat target(n);
    const JacobiQExp rank = rank_series(pm);
    const JacobiQExp a3 = appell(l, pm);
    const RatQExp eta = eta_series(pm);
    const RatQExp eta_inv = invert(eta);
    const FracQExp crank3 = pow(crank_series(l, pm).series(), 3);
    const HeatOp pure{l, Rat(1, 2)};
    const JacobiQExp two_eta2_c3 = JacobiQExp(l, crank3 * lift(pow(eta, 2))).scaled(Rat(2));

    std::vector<IdentityCheck> out;
    out.push_back(check_vanishes("H R = 2 eta^2 C^3", (heat_apply(pure, rank) - two_eta2_c3).series(), target));

    const JacobiQExp tail(l, FracQExp::monomial(s_power(1), -d / 24, pm));
    out.push_back(check_vanishes("R = A3/eta + s q^(-1/24)", (rank - a3.times(eta_inv) - tail).series(), target));
    out.push_back(check_vanishes("H s q^(-1/24) = 0", heat_apply(pure, tail).series(), target));

    const JacobiQExp h1a3 = heat_apply({l, Rat(1)}, a3);
    out.push_back(check_vanishes(
        "H_1 A3 = 2 eta^3 C^3", (h1a3 - JacobiQExp(l, crank3 * lift(pow(eta, 3))).scaled(Rat(2))).series(), target));

    const JacobiQExp via_quotient = heat_apply(pure, a3.times(eta_inv));
    const JacobiQExp via_product = h1a3.times(eta_inv) + a3.times(serre_D(eta_inv, Rat(-1, 2))).scaled(Rat(6));
    out.push_back(check_vanishes("H_{1/2}(A3/eta) = (H_1 A3)/eta + 6 A3 D_{-1/2}(1/eta)",
                                 (via_quotient - via_product).series(), target));
    out.push_back(
        check_vanishes("H_{1/2}(A3/eta) = 2 eta^2 C^3", (via_quotient - two_eta2_c3).series(), target));
    return out;
}

IdentityCheck verify_rank_crank(std::int64_t n) { return all_of("Rank-Crank PDE (level 3)", rank_crank_checks(n)); }

std::vector<IdentityCheck> identity_checks(std::optional<std::int64_t> n) {
    auto at = [&n](std::int64_t fallback) { return n.value_or(fallback); };
    std::vector<IdentityCheck> out;
    {
        // C starts at q^(-1/24), so the product loses that much order
        const Precision p = Precision::q_order(at(12) + 1, 24);
        const FracQExp prod = jacobi_theta(1, p).series() * crank_series(1, p).series();
        out.push_back(check_vanishes("theta*C = -eta^2", prod + lift(pow(eta_series(p), 2)), Rat(at(12))));
    }
    const Precision p20 = Precision::q_order(at(20), 24);
    const RatQExp eta = eta_series(p20);
    for (int k = 1; k <= 8; ++k)
        out.push_back(check_vanishes("D_{" + Rat(k, 2).str() + "}(eta^" + std::to_string(k) + ") = 0",
                                     serre_D(pow(eta, static_cast<unsigned>(k)), Rat(k, 2)), Rat(at(20))));
    {
        const Precision p{1, at(20)};
        const RatQExp e2 = eisenstein(2, p);
        out.push_back(check_vanishes("q d/dq E2 - E2^2/12 = -E4/12",
                                     qderive(e2) - (e2 * e2).scaled(Rat(1, 12)) + eisenstein(4, p).scaled(Rat(1, 12)),
                                     Rat(at(20))));
        out.push_back(check_vanishes("24 q d/dq eta = E2*eta", qderive(eta).scaled(Rat(24)) - eisenstein(2, p20) * eta,
                                     Rat(at(20))));
    }
    {
        const Precision p{1, at(12)};
        const RatQExp delta = delta_series(p);
        out.push_back(check_vanishes("Delta = eta^24", delta - pow(eta_series(Precision::q_order(at(12), 24)), 24),
                                     Rat(at(12))));
        const RatQExp e4 = eisenstein(4, p);
        const RatQExp e6 = eisenstein(6, p);
        out.push_back(check_vanishes("1728*Delta = E4^3 - E6^2", delta.scaled(Rat(1728)) - pow(e4, 3) + e6 * e6,
                                     Rat(at(12))));
    }
    return out;
}

std::optional<int> pole_order_at_one(const CoeffFrac& c) {
    static const LaurentPoly factor = LaurentPoly::monomial(Rat(1), 2) - LaurentPoly(1);
    LaurentPoly d = c.den();
    int k = 0;
    while (!d.is_constant()) {
        auto q = poly::try_div_exact(d, factor);
        if (!q)
            return std::nullopt;
        d = *std::move(q);
        ++k;
    }
    return k;
}

} // namespace appell
