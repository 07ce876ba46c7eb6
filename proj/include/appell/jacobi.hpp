#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "appell/coeff_frac.hpp"
#include "appell/qexp.hpp"
#include "appell/theta_system.hpp"

namespace appell {

using FracQExp = QExp<CoeffFrac>;

/// q-expansion whose coefficients are exact rational functions of s = w^(1/2),
/// tagged with the level that fixes the heat-operator normalization.
class JacobiQExp {
public:
    JacobiQExp() = default;
    JacobiQExp(int level, FracQExp series) : level_(level), series_(std::move(series)) {}

    [[nodiscard]] int level() const { return level_; }
    [[nodiscard]] const FracQExp& series() const { return series_; }
    [[nodiscard]] std::int64_t denom() const { return series_.denom(); }
    [[nodiscard]] std::int64_t order() const { return series_.order(); }

    [[nodiscard]] JacobiQExp scaled(const Rat& c) const { return {level_, series_.scaled(c)}; }
    /// Multiplication by a one-variable series.
    [[nodiscard]] JacobiQExp times(const RatQExp& g) const;
    [[nodiscard]] JacobiQExp truncated(std::int64_t order) const { return {level_, series_.truncated(order)}; }

    JacobiQExp operator-() const { return {level_, -series_}; }
    friend JacobiQExp operator+(const JacobiQExp& a, const JacobiQExp& b);
    friend JacobiQExp operator-(const JacobiQExp& a, const JacobiQExp& b) { return a + (-b); }
    friend JacobiQExp operator*(const JacobiQExp& a, const JacobiQExp& b);
    friend bool operator==(const JacobiQExp&, const JacobiQExp&) = default;

private:
    int level_ = 1;
    FracQExp series_;
};

/// A one-variable series viewed as having s-free coefficients.
FracQExp lift(const RatQExp& f);

/// f with s -> -s in every coefficient (z -> z + 1).
JacobiQExp subst_neg_s(const JacobiQExp& f);

/// Level-l Appell function w^(l/2) sum_n (-1)^(ln) q^(l n(n+1)/2) / (1 - w q^n).
JacobiQExp appell(int l, Precision p);

/// A_l(z + tau) e^(-2 pi i l z - pi i l tau), expanded termwise from its defining sum.
JacobiQExp shifted_appell(int l, Precision p);

/// Jacobi theta sum_n (-1)^n w^(n+1/2) q^((n+1/2)^2/2); grid divisible by 8.
JacobiQExp jacobi_theta(int level, Precision p);

/// Modified crank generating function w^(1/2) q^(-1/24) C(w;q) / (1 - w).
JacobiQExp crank_series(int level, Precision p);

/// Modified rank generating function, level tag 3.
JacobiQExp rank_series(Precision p);

/// H_k = (l/(pi i)) d/dtau + (1/(2 pi i)^2) d^2/dz^2 - (l(2k-1)/12) E2.
/// The pure heat operator of level l is H_{1/2}.
struct HeatOp {
    int level = 1;
    Rat index{1, 2};
};

JacobiQExp heat_apply(const HeatOp& op, const JacobiQExp& f);

/// H_{2k-1} ... H_3 H_1 f.
JacobiQExp heat_ladder(int l, int kmax, const JacobiQExp& f);

/// P = sum_k f_{l-2k-1} H^k A_l, with the f_j taken from their identified forms.
JacobiQExp assemble_P(const ThetaSystem& sys, Precision p);

/// Outcome of checking that a series vanishes below a given q-order.
struct IdentityCheck {
    std::string name;
    bool passed = false;
    /// the q-order the identity was checked to
    Rat order;
    /// "q^(a/b): coeff" of the lowest surviving term, when it failed
    std::string first_offender;

    explicit operator bool() const { return passed; }
};

/// Checks that `residual` vanishes below q^(target/D); InsufficientOrder
/// when the residual is not known that far.
template <class C>
IdentityCheck check_vanishes(std::string name, const QExp<C>& residual, Rat target);

/// theta^l P + (l-1)! f_0 eta^(3l) = 0 below q^n.
IdentityCheck verify_main(const ThetaSystem& sys, std::int64_t n);

/// A_l + shifted A_l + sum_{r=0}^{l-1} s^(2r-l) q^(-(2r-l)^2/(8l)) theta_{l,r} = 0 below q^n.
IdentityCheck verify_shift(int l, std::int64_t n);

/// (H^2 - E4) G_5 = 24 eta^2 C^5 with G_5 = A_5 / eta^3; see garvan_checks for the sub-identities.
IdentityCheck verify_garvan(std::int64_t n);
std::vector<IdentityCheck> garvan_checks(std::int64_t n);

/// H_{3/2} H_{-1/2} g - H^2 g - (25/3)(q d/dq E2 - E2^2/12) g = 0 for a level-5 series g.
IdentityCheck operator_reduction_check(const JacobiQExp& g);

/// H R = 2 eta^2 C^3 at level 3; see rank_crank_checks for the sub-identities.
IdentityCheck verify_rank_crank(std::int64_t n);
std::vector<IdentityCheck> rank_crank_checks(std::int64_t n);

/// theta C = -eta^2, D_{k/2} eta^k = 0 for k = 1..8, q d/dq E2 - E2^2/12 = -E4/12,
/// 24 q d/dq eta = E2 eta, Delta = eta^24 and 1728 Delta = E4^3 - E6^2, to
/// orders 12, 20, 20, 20, 12, 12 unless n overrides them all.
std::vector<IdentityCheck> identity_checks(std::optional<std::int64_t> n = std::nullopt);

/// Largest power of (1 - s^2) dividing the denominator of c, or nullopt if
/// the denominator has any other factor.
std::optional<int> pole_order_at_one(const CoeffFrac& c);

} // namespace appell
