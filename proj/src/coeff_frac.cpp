#include "appell/coeff_frac.hpp"

#include "appell/errors.hpp"

namespace appell {

namespace {

/// n / g for a polynomial g known to divide n * s^(-low(n)).
LaurentPoly div_laurent(const LaurentPoly& n, const LaurentPoly& g) {
    if (g.is_one())
        return n;
    return poly::div_exact(n.stripped(), g).shifted(n.low());
}

LaurentPoly gcd_with(const LaurentPoly& n, const LaurentPoly& den) {
    if (den.is_one() || n.is_zero())
        return LaurentPoly(1);
    return poly::gcd(n.stripped(), den);
}

} // namespace

CoeffFrac::CoeffFrac(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero())
        throw DivisionByZero();
    if (num.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    num = num.shifted(-den.low());
    den = den.stripped();
    const LaurentPoly g = gcd_with(num, den);
    *this = scaled(div_laurent(num, g), poly::div_exact(den, g));
}

CoeffFrac CoeffFrac::scaled(LaurentPoly num, LaurentPoly den) {
    if (num.is_zero())
        return {};
    const Rat c = poly::content(den);
    if (!c.is_one()) {
        const Rat inv = c.inverse();
        num *= inv;
        den *= inv;
    }
    return CoeffFrac(Raw{}, std::move(num), std::move(den));
}

CoeffFrac CoeffFrac::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    return CoeffFrac(den_, num_);
}

CoeffFrac CoeffFrac::operator-() const { return CoeffFrac(Raw{}, -num_, den_); }

CoeffFrac& CoeffFrac::operator*=(const Rat& c) {
    num_ *= c;
    if (num_.is_zero())
        den_ = LaurentPoly(1);
    return *this;
}

CoeffFrac operator+(const CoeffFrac& a, const CoeffFrac& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_.is_one() && b.den_.is_one())
        return CoeffFrac(a.num_ + b.num_);
    // With one side Laurent the sum is already reduced.
    if (b.den_.is_one())
        return CoeffFrac(CoeffFrac::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_one())
        return b + a;
    if (a.den_ == b.den_) {
        const LaurentPoly t = a.num_ + b.num_;
        const LaurentPoly g = gcd_with(t, a.den_);
        return CoeffFrac::scaled(div_laurent(t, g), poly::div_exact(a.den_, g));
    }
    const LaurentPoly g = poly::gcd(a.den_, b.den_);
    if (g.is_one())
        return CoeffFrac::scaled(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const LaurentPoly ad = poly::div_exact(a.den_, g);
    const LaurentPoly bd = poly::div_exact(b.den_, g);
    const LaurentPoly t = a.num_ * bd + b.num_ * ad;
    const LaurentPoly g2 = gcd_with(t, g);
    return CoeffFrac::scaled(div_laurent(t, g2), poly::div_exact(ad * b.den_, g2));
}

CoeffFrac operator*(const CoeffFrac& a, const CoeffFrac& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.den_.is_one() && b.den_.is_one())
        return CoeffFrac(a.num_ * b.num_);
    const LaurentPoly g1 = gcd_with(a.num_, b.den_);
    const LaurentPoly g2 = gcd_with(b.num_, a.den_);
    return CoeffFrac::scaled(div_laurent(a.num_, g1) * div_laurent(b.num_, g2),
                             poly::div_exact(a.den_, g2) * poly::div_exact(b.den_, g1));
}

CoeffFrac operator/(const CoeffFrac& a, const CoeffFrac& b) { return a * b.inverse(); }

std::string CoeffFrac::str() const {
    if (den_.is_one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

CoeffFrac euler_w(const CoeffFrac& f) {
    static const Rat half(1, 2);
    if (f.is_laurent())
        return CoeffFrac(f.num().euler() * half);
    const LaurentPoly n = f.num().euler() * f.den() - f.num() * f.den().euler();
    return CoeffFrac(n * half, f.den() * f.den());
}

CoeffFrac subst_neg_s(const CoeffFrac& f) {
    if (f.is_laurent())
        return CoeffFrac(f.num().subst_neg());
    return CoeffFrac(f.num().subst_neg(), f.den().subst_neg());
}

} // namespace appell
