#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace appell {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (optional leading sign, no decimals).
    static Rat parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] mpz_class num() const { return v_.get_num(); }
    [[nodiscard]] mpz_class den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& value() const { return v_; }

    [[nodiscard]] Rat inverse() const;
    [[nodiscard]] Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    [[nodiscard]] Rat pow(long e) const;

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Floor of a/b for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

} // namespace appell
