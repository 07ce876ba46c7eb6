#pragma once

#include <string>

#include "appell/laurent_poly.hpp"
#include "appell/rat.hpp"

namespace appell {

/// Rational function in s = w^(1/2) in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term,
/// coprime integer coefficients and positive leading coefficient; all powers
/// of s live in the numerator, which is coprime to the denominator. Equal
/// rational functions therefore compare equal structurally.
class CoeffFrac {
public:
    CoeffFrac() : den_(1) {}
    CoeffFrac(long c) : num_(Rat(c)), den_(1) {}
    CoeffFrac(Rat c) : num_(std::move(c)), den_(1) {}
    CoeffFrac(LaurentPoly num) : num_(std::move(num)), den_(1) {}
    /// Throws DivisionByZero when den is zero.
    CoeffFrac(LaurentPoly num, LaurentPoly den);

    [[nodiscard]] const LaurentPoly& num() const { return num_; }
    [[nodiscard]] const LaurentPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] bool is_laurent() const { return den_.is_one(); }
    /// True when the value is a rational constant.
    [[nodiscard]] bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    [[nodiscard]] CoeffFrac inverse() const;

    CoeffFrac operator-() const;
    CoeffFrac& operator+=(const CoeffFrac& o) { return *this = *this + o; }
    CoeffFrac& operator-=(const CoeffFrac& o) { return *this = *this - o; }
    CoeffFrac& operator*=(const CoeffFrac& o) { return *this = *this * o; }
    CoeffFrac& operator*=(const Rat& c);

    friend CoeffFrac operator+(const CoeffFrac& a, const CoeffFrac& b);
    friend CoeffFrac operator-(const CoeffFrac& a, const CoeffFrac& b) { return a + (-b); }
    friend CoeffFrac operator*(const CoeffFrac& a, const CoeffFrac& b);
    friend CoeffFrac operator/(const CoeffFrac& a, const CoeffFrac& b);
    friend CoeffFrac operator*(CoeffFrac a, const Rat& c) { return a *= c; }
    friend CoeffFrac operator*(const Rat& c, CoeffFrac a) { return a *= c; }
    friend bool operator==(const CoeffFrac&, const CoeffFrac&) = default;

    /// "num" or "(num)/(den)".
    [[nodiscard]] std::string str() const;

private:
    struct Raw {};
    CoeffFrac(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    /// Enforces the primitive-denominator convention on an already coprime pair.
    static CoeffFrac scaled(LaurentPoly num, LaurentPoly den);

    LaurentPoly num_;
    LaurentPoly den_;
};

/// w * d/dw = (1/2) s * d/ds applied to a rational function.
CoeffFrac euler_w(const CoeffFrac& f);

/// f(-s).
CoeffFrac subst_neg_s(const CoeffFrac& f);

} // namespace appell
