#include "appell/modforms.hpp"

#include <sstream>

namespace appell {

namespace {

/// Number of integer exponents n >= 0 with n * denom < order.
std::int64_t integer_slots(Precision p) { return p.order > 0 ? ceil_div(p.order, p.denom) : 0; }

void require_grid(Precision p, std::int64_t multiple_of, const char* what) {
    if (p.denom % multiple_of != 0)
        throw Error(std::string(what) + " needs an exponent grid divisible by " + std::to_string(multiple_of));
}

Rat eisenstein_constant(int k) {
    switch (k) {
    case 2: return Rat(-24);
    case 4: return Rat(240);
    case 6: return Rat(-504);
    case 8: return Rat(480);
    case 10: return Rat(-264);
    case 12: return Rat(65520, 691);
    default: throw UnsupportedWeight("no Eisenstein series of weight " + std::to_string(k));
    }
}

/// prod_{n >= 1} (1 - q^n) on the integer grid, first `len` coefficients.
std::vector<mpz_class> euler_product(std::int64_t len) {
    std::vector<mpz_class> c(static_cast<std::size_t>(std::max<std::int64_t>(len, 0)));
    if (len == 0)
        return c;
    c[0] = 1;
    for (std::int64_t n = 1; n < len; ++n)
        for (std::int64_t j = len - 1; j >= n; --j)
            c[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j - n)];
    return c;
}

/// Solves a square rational system by Gaussian elimination; throws if singular.
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw Error("singular basis matrix in modular form identification");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rat inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero())
                continue;
            const Rat f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// Integer-exponent coefficients 0 .. count-1 of f; f must live on integer exponents.
std::vector<Rat> integer_coefficients(const RatQExp& f, std::int64_t count) {
    std::vector<Rat> out(static_cast<std::size_t>(count));
    for (const auto& [m, c] : f.terms()) {
        if (m % f.denom() != 0 || m < 0)
            throw Inconsistent("series has a term q^(" + Rat(m, f.denom()).str() +
                               ") outside the nonnegative integer exponents of a modular form");
        const std::int64_t n = m / f.denom();
        if (n < count)
            out[static_cast<std::size_t>(n)] = c;
    }
    return out;
}

/// Solves f = sum c_j basis_j on the first basis.size() coefficients and checks the rest.
std::vector<Rat> match_in_basis(const RatQExp& f, const std::vector<RatQExp>& basis, const std::string& what) {
    const std::int64_t avail = integer_slots(f.precision());
    const std::size_t dim = basis.size();
    if (avail < static_cast<std::int64_t>(dim) + 5)
        throw InsufficientOrder("identifying " + what + " needs " + std::to_string(dim + 5) +
                                " coefficients, only " + std::to_string(avail) + " available");
    const std::vector<Rat> target = integer_coefficients(f, avail);
    std::vector<std::vector<Rat>> cols;
    cols.reserve(dim);
    for (const auto& g : basis)
        cols.push_back(integer_coefficients(g, avail));

    std::vector<Rat> x;
    if (dim > 0) {
        std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim));
        std::vector<Rat> b(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j)
                a[i][j] = cols[j][i];
            b[i] = target[i];
        }
        x = solve_rational(std::move(a), std::move(b));
    }
    for (std::int64_t i = 0; i < avail; ++i) {
        Rat v;
        for (std::size_t j = 0; j < dim; ++j)
            v += x[j] * cols[j][static_cast<std::size_t>(i)];
        if (v != target[static_cast<std::size_t>(i)])
            throw Inconsistent(what + " is not in the span: coefficient of q^" + std::to_string(i) + " is " +
                               target[static_cast<std::size_t>(i)].str() + ", basis fit gives " + v.str());
    }
    return x;
}

} // namespace

RatQExp eta_series(Precision p) {
    require_grid(p, 24, "eta");
    const std::int64_t offset = p.denom / 24;
    const auto prod = euler_product(std::max<std::int64_t>(0, ceil_div(p.order - offset, p.denom)));
    RatQExp out(p);
    for (std::size_t n = 0; n < prod.size(); ++n)
        if (prod[n] != 0)
            out.add_term(static_cast<std::int64_t>(n) * p.denom + offset, Rat(prod[n]));
    return out;
}

RatQExp eisenstein(int k, Precision p) {
    const Rat ck = eisenstein_constant(k);
    const std::int64_t len = integer_slots(p);
    std::vector<mpz_class> sigma(static_cast<std::size_t>(std::max<std::int64_t>(len, 0)));
    for (std::int64_t d = 1; d < len; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
        for (std::int64_t m = d; m < len; m += d)
            sigma[static_cast<std::size_t>(m)] += dk;
    }
    RatQExp out = RatQExp::constant(Rat(1), p);
    for (std::int64_t n = 1; n < len; ++n)
        out.add_term(n * p.denom, ck * Rat(sigma[static_cast<std::size_t>(n)]));
    return out;
}

RatQExp delta_series(Precision p) {
    const RatQExp e4 = eisenstein(4, p);
    const RatQExp e6 = eisenstein(6, p);
    return (e4 * e4 * e4 - e6 * e6).scaled(Rat(1, 1728));
}

RatQExp partition_series(Precision p) {
    const auto prod = euler_product(integer_slots(p));
    RatQExp euler(Precision{1, static_cast<std::int64_t>(prod.size())});
    for (std::size_t n = 0; n < prod.size(); ++n)
        if (prod[n] != 0)
            euler.add_term(static_cast<std::int64_t>(n), Rat(prod[n]));
    return invert(euler).rebased(p.denom).truncated(p.order);
}

RatQExp serre_D(const RatQExp& f, const Rat& k) {
    if (k.is_zero())
        return qderive(f);
    const std::int64_t need = f.order() - std::min<std::int64_t>(0, f.valuation());
    const RatQExp e2 = eisenstein(2, Precision{f.denom(), need});
    return qderive(f) - (e2 * f).scaled(k / Rat(12));
}

RatQExp iter_D(const RatQExp& f, int k) {
    RatQExp out = f;
    for (int j = 0; j < k; ++j)
        out = serre_D(out, Rat(4 * j + 1, 2));
    return out;
}

int modular_forms_dimension(int weight) {
    if (weight < 0 || weight % 2 != 0 || weight == 2)
        return 0;
    return weight % 12 == 2 ? weight / 12 : weight / 12 + 1;
}

std::vector<std::pair<int, int>> monomial_basis(int weight) {
    std::vector<std::pair<int, int>> out;
    if (weight < 0 || weight % 2 != 0)
        return out;
    for (int b = 0; 6 * b <= weight; ++b)
        if ((weight - 6 * b) % 4 == 0)
            out.emplace_back((weight - 6 * b) / 4, b);
    return out;
}

ModularFormExpr::ModularFormExpr(int weight) : weight_(weight) {
    if (weight < 0 || weight % 2 != 0)
        throw UnsupportedWeight("modular form weight must be a nonnegative even integer");
}

ModularFormExpr::ModularFormExpr(int weight, const std::map<Key, Rat>& coeffs) : ModularFormExpr(weight) {
    for (const auto& [key, c] : coeffs) {
        if (key.first < 0 || key.second < 0 || 4 * key.first + 6 * key.second != weight)
            throw UnsupportedWeight("monomial E4^" + std::to_string(key.first) + " E6^" + std::to_string(key.second) +
                                    " does not have weight " + std::to_string(weight));
        if (!c.is_zero())
            coeffs_[key] = c;
    }
}

Rat ModularFormExpr::coeff(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? Rat() : it->second;
}

RatQExp ModularFormExpr::evaluate(Precision p) const {
    RatQExp out(p);
    if (coeffs_.empty())
        return out;
    const RatQExp e4 = eisenstein(4, p);
    const RatQExp e6 = eisenstein(6, p);
    for (const auto& [key, c] : coeffs_)
        out += (pow(e4, static_cast<unsigned>(key.first)) * pow(e6, static_cast<unsigned>(key.second))).scaled(c);
    return out;
}

ModularFormExpr ModularFormExpr::scaled(const Rat& c) const {
    std::map<Key, Rat> out;
    for (const auto& [key, v] : coeffs_)
        out[key] = v * c;
    return ModularFormExpr(weight_, out);
}

std::string ModularFormExpr::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : coeffs_) {
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        const Rat mag = c.abs();
        const auto [a, b] = key;
        if (a == 0 && b == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << "*";
        if (a > 0)
            os << "E4" << (a > 1 ? "^" + std::to_string(a) : "");
        if (a > 0 && b > 0)
            os << "*";
        if (b > 0)
            os << "E6" << (b > 1 ? "^" + std::to_string(b) : "");
    }
    return os.str();
}

ModularFormExpr identify(const RatQExp& f, int weight) {
    const auto keys = monomial_basis(weight);
    if (weight < 0 || weight % 2 != 0)
        throw UnsupportedWeight("cannot identify a form of weight " + std::to_string(weight));
    const Precision grid{1, integer_slots(f.precision())};
    std::vector<RatQExp> basis;
    for (const auto& [a, b] : keys)
        basis.push_back(ModularFormExpr(weight, {{{a, b}, Rat(1)}}).evaluate(grid));
    const auto x = match_in_basis(f, basis, "weight-" + std::to_string(weight) + " q-expansion");
    std::map<ModularFormExpr::Key, Rat> coeffs;
    for (std::size_t j = 0; j < basis.size(); ++j)
        coeffs[keys[j]] = x[j];
    return ModularFormExpr(weight, coeffs);
}

std::vector<Rat> eisenstein_delta_presentation(const ModularFormExpr& f) {
    const int w = f.weight();
    const int dim = modular_forms_dimension(w);
    if (w > 14)
        throw UnsupportedWeight("Eisenstein/Delta presentation is only available up to weight 14");
    const Precision grid{1, dim + 6};
    const RatQExp delta = delta_series(grid);
    std::vector<RatQExp> basis;
    for (int j = 0; j < dim; ++j) {
        const int r = w - 12 * j;
        RatQExp e = r == 0    ? RatQExp::constant(Rat(1), grid)
                    : r == 14 ? ModularFormExpr(14, {{{2, 1}, Rat(1)}}).evaluate(grid)
                              : eisenstein(r, grid);
        basis.push_back(e * pow(delta, static_cast<unsigned>(j)));
    }
    return match_in_basis(f.evaluate(grid), basis, "Eisenstein/Delta rewrite");
}

bool ramanujan_E2_identity_check(int n) {
    const Precision p = Precision::q_order(n, 1);
    const RatQExp e2 = eisenstein(2, p);
    const RatQExp e4 = eisenstein(4, p);
    const RatQExp lhs = qderive(e2) - (e2 * e2).scaled(Rat(1, 12)) + e4.scaled(Rat(1, 12));
    return lhs.order() >= p.order && lhs.is_zero();
}

} // namespace appell
