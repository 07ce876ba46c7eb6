#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "appell/rat.hpp"

namespace appell {

/// Laurent polynomial in s = w^(1/2) over the rationals.
///
/// Stored densely from the lowest nonzero exponent to the highest; both ends
/// are nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Rat c);
    LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly monomial(Rat c, int exponent);
    static LaurentPoly from_terms(const std::map<int, Rat>& terms);
    /// Coefficients c[0], c[1], ... of s^low, s^(low+1), ...
    static LaurentPoly from_dense(int low, std::vector<Rat> coeffs);

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Lowest exponent; 0 for the zero polynomial.
    [[nodiscard]] int low() const { return low_; }
    [[nodiscard]] int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] Rat coeff(int exponent) const;
    [[nodiscard]] const Rat& leading() const { return c_.back(); }
    [[nodiscard]] const Rat& trailing() const { return c_.front(); }
    [[nodiscard]] const std::vector<Rat>& dense() const { return c_; }
    [[nodiscard]] std::map<int, Rat> terms() const;
    [[nodiscard]] bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0].is_one(); }

    /// Multiplication by s^k.
    [[nodiscard]] LaurentPoly shifted(int k) const;
    /// s * d/ds.
    [[nodiscard]] LaurentPoly euler() const;
    /// s -> -s.
    [[nodiscard]] LaurentPoly subst_neg() const;
    /// Divides by s^low(), leaving an ordinary polynomial with nonzero constant term.
    [[nodiscard]] LaurentPoly stripped() const { return shifted(-low_); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Human-readable form, e.g. "s^3 - 2*s + 1/2*s^-1".
    [[nodiscard]] std::string str() const;

private:
    void trim();

    int low_ = 0;
    std::vector<Rat> c_;
};

/// Ordinary univariate polynomial algorithms; arguments must have low() >= 0.
namespace poly {

/// Quotient of an exact division; throws Error if the remainder is nonzero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient when b divides a, nullopt otherwise.
std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd over the rationals; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Rational c such that a / c has coprime integer coefficients and a
/// positive leading coefficient (so c carries the sign of a).
Rat content(const LaurentPoly& a);

} // namespace poly

} // namespace appell
