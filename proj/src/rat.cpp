#include "appell/rat.hpp"

#include <cctype>
#include <ostream>

#include "appell/errors.hpp"

namespace appell {

Rat::Rat(long n, long d) {
    if (d == 0)
        throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0)
        throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw Error("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rat(parse_integer(num));
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw Error("malformed rational: '" + std::string(text) + "'");
    return Rat(parse_integer(num), parse_integer(den));
}

Rat Rat::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace appell
