#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "appell/qexp.hpp"

namespace appell {

/// Dedekind eta, q^(1/24) * prod (1 - q^n). The grid must be a multiple of 24.
RatQExp eta_series(Precision p);

/// E_k = 1 + c_k sum sigma_{k-1}(n) q^n for k in {2, 4, 6, 8, 10, 12}.
RatQExp eisenstein(int k, Precision p);

/// Delta = (E4^3 - E6^2) / 1728 = q - 24 q^2 + ...
RatQExp delta_series(Precision p);

/// sum p(n) q^n = q^(1/24) / eta.
RatQExp partition_series(Precision p);

/// Serre-type derivative q d/dq - (k/12) E2. E2 is expanded far enough that
/// the product keeps the order of f.
RatQExp serre_D(const RatQExp& f, const Rat& k);

/// D_{2k-3/2} ... D_{5/2} D_{1/2} f; the identity for k = 0.
RatQExp iter_D(const RatQExp& f, int k);

/// dim M_k(SL2(Z)); zero for odd, negative, or k = 2.
int modular_forms_dimension(int weight);

/// Exponent pairs (a, b) with 4a + 6b = weight, ordered by increasing b.
std::vector<std::pair<int, int>> monomial_basis(int weight);

/// Rational combination of monomials E4^a E6^b of one weight.
class ModularFormExpr {
public:
    using Key = std::pair<int, int>;

    ModularFormExpr() = default;
    explicit ModularFormExpr(int weight);
    ModularFormExpr(int weight, const std::map<Key, Rat>& coeffs);

    /// The constant form 1 of weight 0.
    static ModularFormExpr one() { return ModularFormExpr(0, {{{0, 0}, Rat(1)}}); }

    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] const std::map<Key, Rat>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Rat coeff(int a, int b) const;

    /// q-expansion on the given grid.
    [[nodiscard]] RatQExp evaluate(Precision p) const;
    [[nodiscard]] ModularFormExpr scaled(const Rat& c) const;
    /// e.g. "-11/3600*E4" or "3/2*E4^3 - 1/5*E6^2".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ModularFormExpr&, const ModularFormExpr&) = default;

private:
    int weight_ = 0;
    std::map<Key, Rat> coeffs_;
};

/// Expresses f in the monomial basis of the given weight. The leading
/// dim-many integer-exponent coefficients determine the combination; every
/// further available coefficient must agree, else Inconsistent. At least
/// dim + 5 coefficients are needed, else InsufficientOrder.
ModularFormExpr identify(const RatQExp& f, int weight);

/// Coefficients c_j of f = sum_j c_j E_{w-12j} Delta^j, j = 0 .. dim-1
/// (E_0 = 1, E_14 = E4^2 E6). Supported for weights up to 14.
std::vector<Rat> eisenstein_delta_presentation(const ModularFormExpr& f);

/// q d/dq E2 - E2^2/12 + E4/12 = 0 below q^n.
bool ramanujan_E2_identity_check(int n);

} // namespace appell
