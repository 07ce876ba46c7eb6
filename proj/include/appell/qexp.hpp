#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "appell/coeff_frac.hpp"
#include "appell/errors.hpp"
#include "appell/rat.hpp"

namespace appell {

/// Exponent grid and truncation bound: exponents are m/denom with integer m,
/// and a series with this precision is exact for every m < order.
struct Precision {
    std::int64_t denom = 1;
    std::int64_t order = 0;

    /// Exact below q^n on the grid 1/denom.
    static constexpr Precision q_order(std::int64_t n, std::int64_t denom) { return {denom, n * denom}; }
};

/// Truncated q-expansion sum_m c_m q^(m/D) over a coefficient ring C
/// (Rat or CoeffFrac), exact for all m < order. Terms are stored sparsely in
/// ascending exponent; no zero coefficient and no term at or beyond the order
/// is ever stored.
template <class C>
class QExp {
public:
    using Coeff = C;
    using Terms = std::map<std::int64_t, C>;

    QExp() = default;
    explicit QExp(Precision p) : denom_(p.denom), order_(p.order) {
        if (denom_ <= 0)
            throw Error("exponent denominator must be positive");
    }

    static QExp zero(Precision p) { return QExp(p); }
    static QExp constant(C c, Precision p) { return monomial(std::move(c), 0, p); }
    /// c * q^(m/D).
    static QExp monomial(C c, std::int64_t m, Precision p) {
        QExp out(p);
        out.set(m, std::move(c));
        return out;
    }
    static QExp from_terms(Precision p, const Terms& terms) {
        QExp out(p);
        for (const auto& [m, c] : terms)
            out.set(m, c);
        return out;
    }

    [[nodiscard]] std::int64_t denom() const { return denom_; }
    [[nodiscard]] std::int64_t order() const { return order_; }
    [[nodiscard]] Precision precision() const { return {denom_, order_}; }
    /// Truncation order as a q-exponent.
    [[nodiscard]] Rat order_q() const { return Rat(order_, denom_); }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Least stored exponent numerator; the order for the zero series.
    [[nodiscard]] std::int64_t valuation() const { return terms_.empty() ? order_ : terms_.begin()->first; }

    /// Coefficient of q^(m/D); throws OrderExceeded unless m < order.
    [[nodiscard]] C coeff(std::int64_t m) const {
        if (m >= order_)
            throw OrderExceeded("coefficient q^(" + Rat(m, denom_).str() + ") requested beyond truncation q^(" +
                                order_q().str() + ")");
        auto it = terms_.find(m);
        return it == terms_.end() ? C() : it->second;
    }

    /// Adds c at exponent m, dropping it beyond the order.
    void add_term(std::int64_t m, const C& c) {
        if (m >= order_ || c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Same series on the grid 1/(k*D).
    [[nodiscard]] QExp rebased(std::int64_t new_denom) const {
        if (new_denom == denom_)
            return *this;
        if (new_denom <= 0 || new_denom % denom_ != 0)
            throw Error("rebase target " + std::to_string(new_denom) + " is not a multiple of " +
                        std::to_string(denom_));
        const std::int64_t k = new_denom / denom_;
        QExp out(Precision{new_denom, order_ * k});
        for (const auto& [m, c] : terms_)
            out.terms_.emplace_hint(out.terms_.end(), m * k, c);
        return out;
    }

    /// Same series on the coarser grid 1/new_denom; every stored exponent
    /// must lie on it.
    [[nodiscard]] QExp coarsened(std::int64_t new_denom) const {
        if (new_denom <= 0 || denom_ % new_denom != 0)
            throw Error("cannot coarsen grid " + std::to_string(denom_) + " to " + std::to_string(new_denom));
        const std::int64_t k = denom_ / new_denom;
        QExp out(Precision{new_denom, ceil_div(order_, k)});
        for (const auto& [m, c] : terms_) {
            if (m % k != 0)
                throw Error("exponent q^(" + Rat(m, denom_).str() + ") is off the grid 1/" + std::to_string(new_denom));
            out.terms_.emplace_hint(out.terms_.end(), m / k, c);
        }
        return out;
    }

    /// Lowers the order to min(order, new_order).
    [[nodiscard]] QExp truncated(std::int64_t new_order) const {
        QExp out(Precision{denom_, std::min(order_, new_order)});
        for (const auto& [m, c] : terms_) {
            if (m >= out.order_)
                break;
            out.terms_.emplace_hint(out.terms_.end(), m, c);
        }
        return out;
    }

    /// Multiplication by q^(k/D); exact, so the order moves with it.
    [[nodiscard]] QExp shifted(std::int64_t k) const {
        QExp out(Precision{denom_, order_ + k});
        for (const auto& [m, c] : terms_)
            out.terms_.emplace_hint(out.terms_.end(), m + k, c);
        return out;
    }

    /// Applies f to every coefficient, keeping grid and order.
    template <class F>
    [[nodiscard]] auto map_coeffs(F&& f) const {
        using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
        QExp<R> out(precision());
        for (const auto& [m, c] : terms_)
            out.add_term(m, f(c));
        return out;
    }

    QExp operator-() const {
        QExp out = *this;
        for (auto& [m, c] : out.terms_)
            c = -c;
        return out;
    }

    friend QExp operator+(const QExp& a, const QExp& b) {
        const std::int64_t d = std::lcm(a.denom_, b.denom_);
        const QExp x = a.rebased(d);
        const QExp y = b.rebased(d);
        QExp out = x.truncated(y.order_);
        for (const auto& [m, c] : y.terms_) {
            if (m >= out.order_)
                break;
            out.add_term(m, c);
        }
        return out;
    }
    friend QExp operator-(const QExp& a, const QExp& b) { return a + (-b); }

    friend QExp operator*(const QExp& a, const QExp& b) {
        const std::int64_t d = std::lcm(a.denom_, b.denom_);
        const QExp x = a.rebased(d);
        const QExp y = b.rebased(d);
        const std::int64_t vx = x.valuation();
        const std::int64_t vy = y.valuation();
        QExp out(Precision{d, std::min(x.order_ + vy, y.order_ + vx)});
        for (const auto& [mx, cx] : x.terms_) {
            if (mx + vy >= out.order_)
                break;
            for (const auto& [my, cy] : y.terms_) {
                if (mx + my >= out.order_)
                    break;
                out.add_term(mx + my, cx * cy);
            }
        }
        return out;
    }

    QExp& operator+=(const QExp& o) { return *this = *this + o; }
    QExp& operator-=(const QExp& o) { return *this = *this - o; }
    QExp& operator*=(const QExp& o) { return *this = *this * o; }

    /// Scalar multiple; keeps the order.
    template <class S>
    [[nodiscard]] QExp scaled(const S& s) const {
        QExp out(precision());
        for (const auto& [m, c] : terms_) {
            C v = c * s;
            if (!v.is_zero())
                out.terms_.emplace_hint(out.terms_.end(), m, std::move(v));
        }
        return out;
    }

    /// Structural equality after rebasing to a common grid (orders must agree).
    friend bool operator==(const QExp& a, const QExp& b) {
        const std::int64_t d = std::lcm(a.denom_, b.denom_);
        const QExp x = a.rebased(d);
        const QExp y = b.rebased(d);
        return x.order_ == y.order_ && x.terms_ == y.terms_;
    }

private:
    void set(std::int64_t m, C c) {
        if (m < order_ && !c.is_zero())
            terms_[m] = std::move(c);
    }

    std::int64_t denom_ = 1;
    std::int64_t order_ = 0;
    Terms terms_;
};

using RatQExp = QExp<Rat>;

/// Multiplicative inverse. With valuation v and order N the result has
/// valuation -v and order N - 2v, so a * invert(a) = 1 exactly below q^((N-v)/D).
template <class C>
QExp<C> invert(const QExp<C>& a) {
    if (a.is_zero())
        throw NonUnitLeadingCoefficient("cannot invert a series with no known nonzero coefficient");
    const std::int64_t v = a.valuation();
    const C& lead = a.terms().begin()->second;
    C lead_inv;
    try {
        lead_inv = C(1) / lead;
    } catch (const DivisionByZero&) {
        throw NonUnitLeadingCoefficient("leading coefficient is not invertible");
    }
    const QExp<C> u = a.shifted(-v);
    const std::int64_t n = u.order();
    std::int64_t step = 0;
    for (const auto& [m, c] : u.terms())
        step = std::gcd(step, m);
    if (step == 0)
        step = n > 0 ? n : 1;

    // b_m = -(1/u_0) * sum_{0 < j <= m} u_j b_{m-j}
    typename QExp<C>::Terms b;
    b.emplace(0, lead_inv);
    for (std::int64_t m = step; m < n; m += step) {
        C acc;
        for (auto it = std::next(u.terms().begin()); it != u.terms().end() && it->first <= m; ++it) {
            auto bj = b.find(m - it->first);
            if (bj != b.end())
                acc += it->second * bj->second;
        }
        if (!acc.is_zero())
            b.emplace(m, -(acc * lead_inv));
    }
    return QExp<C>::from_terms(Precision{a.denom(), n}, b).shifted(-v);
}

/// q * d/dq: scales the coefficient of q^(m/D) by m/D.
template <class C>
QExp<C> qderive(const QExp<C>& a) {
    QExp<C> out(a.precision());
    for (const auto& [m, c] : a.terms())
        out.add_term(m, c * Rat(m, a.denom()));
    return out;
}

/// a^k for k >= 0 by repeated squaring; the order follows the product rule.
template <class C>
QExp<C> pow(const QExp<C>& a, unsigned k) {
    if (k == 0)
        return QExp<C>::constant(C(1), a.precision());
    QExp<C> result;
    QExp<C> base = a;
    bool first = true;
    while (k) {
        if (k & 1u) {
            result = first ? base : result * base;
            first = false;
        }
        k >>= 1u;
        if (k)
            base = base * base;
    }
    return result;
}

/// Exponent and coefficient of the lowest nonzero term below q^(limit/D).
template <class C>
std::optional<std::pair<std::int64_t, C>> first_nonzero_below(const QExp<C>& a, std::int64_t limit) {
    if (a.is_zero() || a.valuation() >= limit)
        return std::nullopt;
    return *a.terms().begin();
}

} // namespace appell
