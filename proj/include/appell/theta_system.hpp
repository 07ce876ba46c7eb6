#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "appell/modforms.hpp"
#include "appell/qexp.hpp"

namespace appell {

using SeriesMatrix = std::vector<std::vector<RatQExp>>;

/// Exponent grid used for level-l work: 24 * l.
constexpr std::int64_t level_denom(int l) { return 24 * static_cast<std::int64_t>(l); }

/// theta_{l,r} = sum_n (-1)^n q^((2ln - l + 2r)^2 / (8l)). The grid must be a
/// multiple of 8l.
RatQExp theta_lr(int l, int r, Precision p);

/// Nodes alpha_i = (l - 2i)^2 / (8l), i = 1 .. (l-1)/2, with the
/// Vandermonde determinant prod_{i<j} (alpha_j - alpha_i).
struct VandermondeData {
    int level = 0;
    std::vector<Rat> alphas;
    Rat detB{1};
};

VandermondeData vandermonde(int l);

/// theta vector, the matrix of its iterated Serre derivatives, and the
/// solved forms F_j with their rescalings f_j.
struct ThetaSystem {
    int level = 1;
    /// q-order the theta functions were expanded to.
    std::int64_t order = 0;
    std::vector<RatQExp> theta;
    /// T[i][k] = D^k theta_{l,i+1}.
    SeriesMatrix T;
    /// Keyed by weight j = 0, 2, ..., l-1; integer-exponent series.
    std::map<int, RatQExp> F;
    std::map<int, RatQExp> f;
    std::map<int, ModularFormExpr> F_expr;
    std::map<int, ModularFormExpr> f_expr;
    VandermondeData vandermonde;

    [[nodiscard]] int size() const { return (level - 1) / 2; }
};

/// theta and T filled in, for odd l >= 1, q-order n.
ThetaSystem build_T(int l, std::int64_t n);

/// Determinant of a square series matrix by Laplace expansion over column
/// prefixes; the order follows from the product and sum rules.
RatQExp series_det(const SeriesMatrix& m);

/// Solves m x = rhs by elimination over series fractions, choosing in each
/// column the remaining entry of least valuation as pivot.
std::vector<RatQExp> solve_series_system(SeriesMatrix m, std::vector<RatQExp> rhs);

/// Same system by Cramer's rule; used to cross-check the elimination.
std::vector<RatQExp> solve_series_cramer(const SeriesMatrix& m, const std::vector<RatQExp>& rhs);

/// det T_l, checked against detB * eta^((l-1)(l-2)/2) to the computed
/// order; throws DeterminantMismatch otherwise.
RatQExp det_T(int l, std::int64_t n);

/// Matrix with columns (q d/dq)^k Theta_l, k = 0 .. (l-3)/2.
SeriesMatrix plain_derivative_matrix(int l, std::int64_t n);

/// Smallest q-order for which solve_F can identify every F_j.
std::int64_t default_solve_order(int l);

/// Full solve: F_0 = 1 and (F_{l-1}, ..., F_2) = -T^{-1} D^{(l-1)/2} Theta;
/// every F_j is checked holomorphic at infinity and identified in the
/// E4^a E6^b basis. Throws InsufficientOrder or Inconsistent.
ThetaSystem solve_F(int l, std::int64_t n);

/// After removing q^(alpha_i) from row i, column k of the plain-derivative
/// matrix starts with alpha_i^k.
bool leading_matrix_check(int l);

} // namespace appell
