#include "appell/laurent_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "appell/errors.hpp"

namespace appell {

LaurentPoly::LaurentPoly(Rat c) {
    if (!c.is_zero())
        c_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(Rat c, int exponent) {
    LaurentPoly p(std::move(c));
    if (!p.is_zero())
        p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rat>& terms) {
    LaurentPoly p;
    if (terms.empty())
        return p;
    p.low_ = terms.begin()->first;
    p.c_.assign(static_cast<std::size_t>(terms.rbegin()->first - p.low_ + 1), Rat());
    for (const auto& [e, c] : terms)
        p.c_[static_cast<std::size_t>(e - p.low_)] = c;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Rat> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (c_.empty())
        low_ = 0;
}

Rat LaurentPoly::coeff(int exponent) const {
    if (exponent < low_ || exponent > high())
        return Rat();
    return c_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, Rat> LaurentPoly::terms() const {
    std::map<int, Rat> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            out.emplace(low_ + static_cast<int>(i), c_[i]);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero())
        p.low_ += k;
    return p;
}

LaurentPoly LaurentPoly::euler() const {
    LaurentPoly p = *this;
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        p.c_[i] *= Rat(low_ + static_cast<long>(i));
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::subst_neg() const {
    LaurentPoly p = *this;
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        if ((low_ + static_cast<long>(i)) % 2 != 0)
            p.c_[i] = -p.c_[i];
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.c_)
        c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rat());
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        const mpq_class& x = a.c_[i].value();
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j] += x * b.c_[j].value();
    }
    std::vector<Rat> out;
    out.reserve(acc.size());
    for (auto& v : acc)
        out.emplace_back(std::move(v));
    return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

std::string LaurentPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        const int e = low_ + i;
        Rat mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << "*";
        os << "s";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

namespace poly {

namespace {

using ZPoly = std::vector<mpz_class>; // index = degree, trimmed

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void require_poly(const LaurentPoly& a) {
    if (!a.is_zero() && a.low() < 0)
        throw Error("polynomial operation on a Laurent polynomial with negative exponents");
}

/// Primitive integer polynomial proportional to a; sign of leading coefficient kept.
ZPoly to_primitive(const LaurentPoly& a) {
    const Rat c = content(a);
    ZPoly out(static_cast<std::size_t>(a.high() + 1));
    for (int e = a.low(); e <= a.high(); ++e) {
        const Rat v = a.coeff(e) / c;
        out[static_cast<std::size_t>(e)] = v.num();
    }
    return out;
}

mpz_class content_z(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void make_primitive(ZPoly& p) {
    const mpz_class g = content_z(p);
    if (g > 1)
        for (auto& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Pseudo-remainder of a by b.
ZPoly prem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const mpz_class la = a.back();
        for (auto& c : a)
            c *= lb;
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

constexpr std::uint64_t kPrime = 4294967291ULL;

std::vector<std::uint64_t> reduce_mod(const ZPoly& p) {
    std::vector<std::uint64_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), kPrime);
    return out;
}

std::uint64_t inv_mod(std::uint64_t a) {
    std::uint64_t r = 1, e = kPrime - 2;
    while (e) {
        if (e & 1)
            r = r * a % kPrime;
        a = a * a % kPrime;
        e >>= 1;
    }
    return r;
}

/// Degree of gcd(a, b) over Z/p; both must keep their degree mod p.
std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto trim_mod = [](std::vector<std::uint64_t>& p) {
        while (!p.empty() && p.back() == 0)
            p.pop_back();
    };
    while (!b.empty()) {
        const std::uint64_t inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            const std::size_t shift = a.size() - b.size();
            const std::uint64_t f = a.back() * inv % kPrime;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + kPrime - f * b[j] % kPrime) % kPrime;
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

LaurentPoly from_zpoly(const ZPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.size());
    for (const auto& x : p)
        c.emplace_back(x);
    return LaurentPoly::from_dense(0, std::move(c));
}

} // namespace

Rat content(const LaurentPoly& a) {
    if (a.is_zero())
        return Rat(1);
    mpz_class g = 0, l = 1;
    for (const auto& c : a.dense()) {
        if (c.is_zero())
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.value().get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
    }
    Rat c(g, l);
    return a.leading().sign() < 0 ? -c : c;
}

std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    require_poly(a);
    require_poly(b);
    if (b.is_zero())
        throw DivisionByZero();
    if (a.is_zero())
        return LaurentPoly();
    if (b.is_constant())
        return a * b.leading().inverse();
    const int db = b.high();
    if (a.high() < db)
        return std::nullopt;
    std::vector<Rat> r(static_cast<std::size_t>(a.high() + 1));
    for (int e = a.low(); e <= a.high(); ++e)
        r[static_cast<std::size_t>(e)] = a.coeff(e);
    std::vector<Rat> q(static_cast<std::size_t>(a.high() - db + 1));
    const Rat inv = b.leading().inverse();
    const auto& bd = b.dense();
    const int bl = b.low();
    for (int k = a.high() - db; k >= 0; --k) {
        const Rat f = r[static_cast<std::size_t>(k + db)] * inv;
        if (f.is_zero())
            continue;
        q[static_cast<std::size_t>(k)] = f;
        for (std::size_t j = 0; j < bd.size(); ++j)
            r[static_cast<std::size_t>(k + bl) + j] -= f * bd[j];
    }
    for (const auto& x : r)
        if (!x.is_zero())
            return std::nullopt;
    return LaurentPoly::from_dense(0, std::move(q));
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_div_exact(a, b);
    if (!q)
        throw Error("inexact polynomial division");
    return *std::move(q);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    require_poly(a);
    require_poly(b);
    if (a.is_zero() && b.is_zero())
        return {};
    if (a.is_zero())
        return b * b.leading().inverse();
    if (b.is_zero())
        return a * a.leading().inverse();
    if (a.is_constant() || b.is_constant())
        return LaurentPoly(1);

    ZPoly x = to_primitive(a);
    ZPoly y = to_primitive(b);
    if (x.size() < y.size())
        std::swap(x, y);

    // A degree-0 gcd modulo a prime that keeps both degrees certifies coprimality.
    if (mpz_fdiv_ui(x.back().get_mpz_t(), kPrime) != 0 && mpz_fdiv_ui(y.back().get_mpz_t(), kPrime) != 0 &&
        gcd_degree_mod(reduce_mod(x), reduce_mod(y)) == 0)
        return LaurentPoly(1);

    while (!y.empty()) {
        ZPoly r = prem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    LaurentPoly g = from_zpoly(x);
    return g * g.leading().inverse();
}

} // namespace poly

} // namespace appell
