#include "appell/theta_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace appell {

namespace {

void require_odd_level(int l) {
    if (l < 1 || l % 2 == 0)
        throw Error("level must be an odd positive integer, got " + std::to_string(l));
}

/// alpha_i * 24l, the exponent numerator of the leading term of theta_{l,i}.
std::int64_t leading_numerator(int l, int i) {
    const std::int64_t x = l - 2 * i;
    return 3 * x * x;
}

/// Largest X >= 0 with X^2 * scale < order, or -1 if none.
std::int64_t max_abs_root(std::int64_t order, std::int64_t scale) {
    if (order <= 0)
        return -1;
    auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(order) / static_cast<double>(scale)));
    while (x > 0 && x * x * scale >= order)
        --x;
    while ((x + 1) * (x + 1) * scale < order)
        ++x;
    return x;
}

} // namespace

RatQExp theta_lr(int l, int r, Precision p) {
    require_odd_level(l);
    const std::int64_t ll = l;
    if (p.denom % (8 * ll) != 0)
        throw Error("theta_{l,r} needs an exponent grid divisible by 8l");
    const std::int64_t scale = p.denom / (8 * ll);
    RatQExp out(p);
    const std::int64_t bound = max_abs_root(p.order, scale);
    if (bound < 0)
        return out;
    // x = 2ln - l + 2r with |x| <= bound
    const std::int64_t lo = ceil_div(-bound + ll - 2 * r, 2 * ll);
    const std::int64_t hi = floor_div(bound + ll - 2 * r, 2 * ll);
    for (std::int64_t n = lo; n <= hi; ++n) {
        const std::int64_t x = 2 * ll * n - ll + 2 * r;
        out.add_term(x * x * scale, Rat(n % 2 == 0 ? 1 : -1));
    }
    return out;
}

VandermondeData vandermonde(int l) {
    require_odd_level(l);
    VandermondeData v;
    v.level = l;
    for (int i = 1; i <= (l - 1) / 2; ++i)
        v.alphas.emplace_back(static_cast<long>(l - 2 * i) * (l - 2 * i), 8L * l);
    for (std::size_t i = 0; i < v.alphas.size(); ++i)
        for (std::size_t j = i + 1; j < v.alphas.size(); ++j)
            v.detB *= v.alphas[j] - v.alphas[i];
    return v;
}

ThetaSystem build_T(int l, std::int64_t n) {
    require_odd_level(l);
    ThetaSystem sys;
    sys.level = l;
    sys.order = n;
    const Precision p = Precision::q_order(n, level_denom(l));
    const int h = sys.size();
    for (int r = 1; r <= h; ++r)
        sys.theta.push_back(theta_lr(l, r, p));
    sys.T.assign(static_cast<std::size_t>(h), {});
    for (int i = 0; i < h; ++i) {
        auto& row = sys.T[static_cast<std::size_t>(i)];
        row.push_back(sys.theta[static_cast<std::size_t>(i)]);
        for (int k = 1; k < h; ++k)
            row.push_back(serre_D(row.back(), Rat(4 * (k - 1) + 1, 2)));
    }
    return sys;
}

RatQExp series_det(const SeriesMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return RatQExp::constant(Rat(1), Precision{1, std::numeric_limits<std::int32_t>::max()});
    if (n > 20)
        throw Error("series_det: matrix too large for subset expansion");
    // minors[S] = det of rows S against columns 0 .. |S|-1
    std::vector<RatQExp> minors(std::size_t{1} << n);
    for (std::size_t i = 0; i < n; ++i)
        minors[std::size_t{1} << i] = m[i][0];
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const int k = __builtin_popcountll(mask);
        if (k < 2)
            continue;
        RatQExp acc;
        bool first = true;
        int pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t{1} << i)))
                continue;
            RatQExp term = m[i][static_cast<std::size_t>(k - 1)] * minors[mask & ~(std::size_t{1} << i)];
            if ((pos + k - 1) % 2 != 0)
                term = -term;
            acc = first ? term : acc + term;
            first = false;
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

std::vector<RatQExp> solve_series_system(SeriesMatrix m, std::vector<RatQExp> rhs) {
    const std::size_t n = m.size();
    std::vector<RatQExp> pivot_inv(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        for (std::size_t r = c; r < n; ++r)
            if (!m[r][c].is_zero() && (best == n || m[r][c].valuation() < m[best][c].valuation()))
                best = r;
        if (best == n)
            throw Error("series system is singular to the available order");
        std::swap(m[best], m[c]);
        std::swap(rhs[best], rhs[c]);
        pivot_inv[c] = invert(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero())
                continue;
            const RatQExp factor = m[r][c] * pivot_inv[c];
            for (std::size_t j = c + 1; j < n; ++j)
                m[r][j] -= factor * m[c][j];
            rhs[r] -= factor * rhs[c];
            m[r][c] = RatQExp::zero(m[r][c].precision());
        }
    }
    std::vector<RatQExp> x(n);
    for (std::size_t i = n; i-- > 0;) {
        RatQExp acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= m[i][j] * x[j];
        x[i] = acc * pivot_inv[i];
    }
    return x;
}

std::vector<RatQExp> solve_series_cramer(const SeriesMatrix& m, const std::vector<RatQExp>& rhs) {
    const RatQExp inv = invert(series_det(m));
    std::vector<RatQExp> x;
    for (std::size_t j = 0; j < m.size(); ++j) {
        SeriesMatrix mj = m;
        for (std::size_t i = 0; i < m.size(); ++i)
            mj[i][j] = rhs[i];
        x.push_back(series_det(mj) * inv);
    }
    return x;
}

RatQExp det_T(int l, std::int64_t n) {
    require_odd_level(l);
    if (l < 3)
        throw Error("det_T needs level >= 3");
    const ThetaSystem sys = build_T(l, n);
    const RatQExp det = series_det(sys.T);
    const auto power = static_cast<unsigned>((l - 1) * (l - 2) / 2);
    const RatQExp eta = eta_series(Precision::q_order(n, level_denom(l)));
    const RatQExp expected = pow(eta, power).scaled(vandermonde(l).detB);
    const RatQExp diff = det - expected;
    if (auto bad = first_nonzero_below(diff, diff.order()))
        throw DeterminantMismatch("det T_" + std::to_string(l) + " differs from detB*eta^" + std::to_string(power) +
                                  " at q^(" + Rat(bad->first, diff.denom()).str() + ") by " + bad->second.str());
    return det;
}

SeriesMatrix plain_derivative_matrix(int l, std::int64_t n) {
    require_odd_level(l);
    const Precision p = Precision::q_order(n, level_denom(l));
    const int h = (l - 1) / 2;
    SeriesMatrix m(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) {
        auto& row = m[static_cast<std::size_t>(i)];
        row.push_back(theta_lr(l, i + 1, p));
        for (int k = 1; k < h; ++k)
            row.push_back(qderive(row.back()));
    }
    return m;
}

std::int64_t default_solve_order(int l) {
    require_odd_level(l);
    int maxdim = 0;
    for (int j = 0; j <= l - 1; j += 2)
        maxdim = std::max(maxdim, modular_forms_dimension(j));
    const std::int64_t shift = l >= 3 ? ceil_div(leading_numerator(l, 1), level_denom(l)) : 0;
    return std::max<std::int64_t>(30, maxdim + 5 + shift + 1);
}

ThetaSystem solve_F(int l, std::int64_t n) {
    ThetaSystem sys = build_T(l, n);
    sys.vandermonde = vandermonde(l);
    const int h = sys.size();
    const std::int64_t denom = level_denom(l);

    std::map<int, RatQExp> solved;
    if (h > 0) {
        // Move row i onto integer exponents by removing q^(alpha_i); the
        // constant-term matrix is then B up to column operations, so every
        // pivot has valuation zero and no precision is lost.
        SeriesMatrix m = sys.T;
        std::vector<RatQExp> rhs;
        for (int i = 0; i < h; ++i) {
            const std::int64_t shift = -leading_numerator(l, i + 1);
            auto& row = m[static_cast<std::size_t>(i)];
            const RatQExp top = serre_D(row.back(), Rat(4 * (h - 1) + 1, 2));
            rhs.push_back((-top).shifted(shift));
            for (auto& e : row)
                e = e.shifted(shift);
        }
        const auto x = solve_series_system(std::move(m), std::move(rhs));
        for (int k = 0; k < h; ++k)
            solved[l - 2 * k - 1] = x[static_cast<std::size_t>(k)];
    }

    std::int64_t f_order = n;
    for (const auto& [j, s] : solved)
        f_order = std::min(f_order, ceil_div(s.order(), denom));
    sys.F[0] = RatQExp::constant(Rat(1), Precision{1, f_order});
    sys.F_expr[0] = ModularFormExpr::one();
    for (const auto& [j, s] : solved) {
        if (s.valuation() < 0)
            throw Inconsistent("F_" + std::to_string(j) + " has a pole at infinity: leading term q^(" +
                               Rat(s.valuation(), denom).str() + ")");
        RatQExp coarse;
        try {
            coarse = s.coarsened(1);
        } catch (const Error&) {
            throw Inconsistent("F_" + std::to_string(j) + " has non-integral q-exponents");
        }
        sys.F_expr[j] = identify(coarse, j);
        sys.F[j] = std::move(coarse);
    }
    for (const auto& [j, s] : sys.F) {
        const int k = (l - 1 - j) / 2;
        const Rat scale = Rat(2L * l).pow(-k);
        sys.f[j] = s.scaled(scale);
        sys.f_expr[j] = sys.F_expr[j].scaled(scale);
    }
    return sys;
}

bool leading_matrix_check(int l) {
    require_odd_level(l);
    if (l < 3)
        throw Error("leading_matrix_check needs level >= 3");
    const int h = (l - 1) / 2;
    const std::int64_t denom = level_denom(l);
    const std::int64_t n = ceil_div(leading_numerator(l, 1), denom) + 2;
    const SeriesMatrix m = plain_derivative_matrix(l, n);
    const VandermondeData v = vandermonde(l);
    for (int i = 0; i < h; ++i) {
        const std::int64_t lead = leading_numerator(l, i + 1);
        for (int k = 0; k < h; ++k) {
            const RatQExp& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (e.valuation() < lead)
                return false;
            if (e.coeff(lead) != v.alphas[static_cast<std::size_t>(i)].pow(k))
                return false;
        }
    }
    return true;
}

} // namespace appell
