#pragma once

// Independent reference computations. Nothing here calls the library's
// series arithmetic; everything is plain integer/rational bookkeeping.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Coefficients of prod_{n>=1} (1 - q^n) below q^n_max from the
/// pentagonal number theorem.
inline std::vector<long> euler_product(int n_max) {
    std::vector<long> c(static_cast<std::size_t>(n_max), 0);
    for (long k = -n_max; k <= n_max; ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e >= 0 && e < n_max)
            c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

/// p(0) .. p(n_max-1) by Euler's pentagonal recurrence.
inline std::vector<mpz_class> partitions(int n_max) {
    std::vector<mpz_class> p(static_cast<std::size_t>(n_max), 0);
    p[0] = 1;
    for (int n = 1; n < n_max; ++n) {
        mpz_class acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

inline mpz_class sigma(long n, unsigned k) {
    mpz_class s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_class t;
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
            s += t;
        }
    return s;
}

/// Dense product of integer polynomials truncated below n.
inline std::vector<mpz_class> mul_trunc(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                        std::size_t n) {
    std::vector<mpz_class> c(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// Two-variable monomials: (s-exponent, q-exponent numerator) -> coefficient.
using Terms2 = std::map<std::pair<long, long>, mpq_class>;

/// Brute-force Appell expansion without the n = 0 pole term:
/// s^l sum_{n != 0} (-1)^(ln) q^(l n(n+1)/2) / (1 - s^2 q^n) in |q| < |w| < 1,
/// enumerating |n| <= n_max and geometric indices m <= m_max, keeping
/// q-exponents below q_limit (integer grid).
inline Terms2 appell_without_pole(long l, long n_max, long m_max, long q_limit) {
    Terms2 t;
    for (long n = -n_max; n <= n_max; ++n) {
        if (n == 0)
            continue;
        const long base = l * n * (n + 1) / 2;
        const long sign = ((l * n) % 2 == 0) ? 1 : -1;
        if (n > 0) {
            for (long m = 0; m <= m_max; ++m)
                if (base + n * m < q_limit)
                    t[{l + 2 * m, base + n * m}] += sign;
        } else {
            for (long m = 1; m <= m_max; ++m)
                if (base - n * m < q_limit)
                    t[{l - 2 * m, base - n * m}] -= sign;
        }
    }
    for (auto it = t.begin(); it != t.end();)
        it = it->second == 0 ? t.erase(it) : std::next(it);
    return t;
}

/// s q^(1/8) prod_{n>=1} (1 - q^n)(1 - s^2 q^n)(1 - s^-2 q^(n-1)) on the
/// grid q^(1/8), exponents below q_limit / 8.
inline Terms2 triple_product(long q_limit) {
    // exponents here are (s-power, q-power in units of 1)
    Terms2 acc;
    acc[{1, 0}] = 1;
    const long n_max = q_limit / 8 + 2;
    auto times = [&](long s_pow, long q_pow) {
        Terms2 out;
        for (const auto& [k, c] : acc) {
            out[k] += c;
            if (k.second + q_pow <= n_max)
                out[{k.first + s_pow, k.second + q_pow}] -= c;
        }
        acc.swap(out);
    };
    for (long n = 1; n <= n_max; ++n) {
        times(0, n);
        times(2, n);
        times(-2, n - 1);
    }
    Terms2 out;
    for (const auto& [k, c] : acc) {
        const long e8 = 8 * k.second + 1;
        if (c != 0 && e8 < q_limit)
            out[{k.first, e8}] = c;
    }
    return out;
}

} // namespace oracle
