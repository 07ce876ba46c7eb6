#include "appell/serialize.hpp"

#include <sstream>

namespace appell {

namespace {

std::string exponent_str(std::int64_t m, std::int64_t denom) {
    const Rat e(m, denom);
    return "q^(" + e.num().get_str() + "/" + e.den().get_str() + ")";
}

template <class C>
std::string text_lines(const QExp<C>& f) {
    std::string out;
    for (const auto& [m, c] : f.terms())
        out += exponent_str(m, f.denom()) + ": " + c.str() + "\n";
    return out;
}

template <class C>
Json series_json(const QExp<C>& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back(Json::array({m, to_json(c)}));
    return Json{{"D", f.denom()}, {"N", f.order()}, {"terms", std::move(terms)}};
}

template <class C, class F>
QExp<C> series_from(const Json& j, F&& coeff) {
    QExp<C> out(Precision{j.at("D").get<std::int64_t>(), j.at("N").get<std::int64_t>()});
    for (const auto& t : j.at("terms")) {
        const auto m = t.at(0).get<std::int64_t>();
        if (m >= out.order())
            throw Error("serialized term q^(" + Rat(m, out.denom()).str() + ") lies beyond the order");
        out.add_term(m, coeff(t.at(1)));
    }
    return out;
}

SystemReport::Entry make_entry(int j, const RatQExp& s, const ModularFormExpr& e, std::int64_t head) {
    SystemReport::Entry out;
    out.j = j;
    out.expr = e;
    for (const auto& [m, c] : s.terms()) {
        if (m >= head)
            break;
        out.series_head.emplace_back(m, c);
    }
    return out;
}

Json entry_json(const SystemReport::Entry& e) {
    Json head = Json::array();
    for (const auto& [n, c] : e.series_head)
        head.push_back(Json::array({n, to_json(c)}));
    return Json{{"j", e.j}, {"series_head", std::move(head)}, {"expr", to_json(e.expr)}};
}

SystemReport::Entry entry_from(const Json& j) {
    SystemReport::Entry out;
    out.j = j.at("j").get<int>();
    for (const auto& t : j.at("series_head"))
        out.series_head.emplace_back(t.at(0).get<std::int64_t>(), rat_from_json(t.at(1)));
    out.expr = form_from_json(j.at("expr"), out.j);
    return out;
}

} // namespace

std::string to_text(const RatQExp& f) { return text_lines(f); }
std::string to_text(const FracQExp& f) { return text_lines(f); }

std::string head_str(const RatQExp& f, std::int64_t terms) {
    const std::int64_t limit = std::min(terms, f.order());
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (m >= limit)
            break;
        const Rat mag = first ? c : c.abs();
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        if (m == 0)
            os << mag;
        else {
            if (!mag.is_one())
                os << (mag == Rat(-1) ? std::string("-") : mag.str() + "*");
            os << "q";
            if (m != 1)
                os << "^" << m;
        }
        first = false;
    }
    if (first)
        os << "0";
    os << " + O(q^" << limit << ")";
    return os.str();
}

Json to_json(const Rat& x) { return x.str(); }

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json::array({e, c.str()}));
    return out;
}

Json to_json(const CoeffFrac& c) { return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }
Json to_json(const RatQExp& f) { return series_json(f); }
Json to_json(const FracQExp& f) { return series_json(f); }

Json to_json(const ModularFormExpr& e) {
    Json out = Json::array();
    for (const auto& [key, c] : e.coeffs())
        out.push_back(Json{{"a", key.first}, {"b", key.second}, {"coeff", c.str()}});
    return out;
}

Rat rat_from_json(const Json& j) {
    if (!j.is_string())
        throw Error("rational must be serialized as a \"p/q\" string");
    return Rat::parse(j.get<std::string>());
}

LaurentPoly laurent_from_json(const Json& j) {
    std::map<int, Rat> terms;
    for (const auto& t : j)
        terms[t.at(0).get<int>()] += rat_from_json(t.at(1));
    return LaurentPoly::from_terms(terms);
}

CoeffFrac frac_from_json(const Json& j) {
    if (j.is_string())
        return CoeffFrac(rat_from_json(j));
    return CoeffFrac(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

RatQExp rat_series_from_json(const Json& j) { return series_from<Rat>(j, rat_from_json); }
FracQExp frac_series_from_json(const Json& j) { return series_from<CoeffFrac>(j, frac_from_json); }

ModularFormExpr form_from_json(const Json& j, int weight) {
    std::map<ModularFormExpr::Key, Rat> coeffs;
    for (const auto& t : j)
        coeffs[{t.at("a").get<int>(), t.at("b").get<int>()}] = rat_from_json(t.at("coeff"));
    return ModularFormExpr(weight, coeffs);
}

SystemReport make_report(const ThetaSystem& sys, std::int64_t head_terms) {
    SystemReport r;
    r.level = sys.level;
    r.order = sys.order;
    r.detB = sys.vandermonde.detB;
    // descending weight, matching the usual table layout
    for (auto it = sys.F.rbegin(); it != sys.F.rend(); ++it)
        r.F.push_back(make_entry(it->first, it->second, sys.F_expr.at(it->first), head_terms));
    for (auto it = sys.f.rbegin(); it != sys.f.rend(); ++it)
        r.f.push_back(make_entry(it->first, it->second, sys.f_expr.at(it->first), head_terms));
    return r;
}

Json to_json(const SystemReport& r) {
    Json big_f = Json::array();
    Json small_f = Json::array();
    for (const auto& e : r.F)
        big_f.push_back(entry_json(e));
    for (const auto& e : r.f)
        small_f.push_back(entry_json(e));
    return Json{{"level", r.level},      {"order", r.order}, {"F", std::move(big_f)},
                {"f", std::move(small_f)}, {"detB", to_json(r.detB)}};
}

SystemReport report_from_json(const Json& j) {
    SystemReport r;
    r.level = j.at("level").get<int>();
    r.order = j.at("order").get<std::int64_t>();
    for (const auto& e : j.at("F"))
        r.F.push_back(entry_from(e));
    for (const auto& e : j.at("f"))
        r.f.push_back(entry_from(e));
    r.detB = rat_from_json(j.at("detB"));
    return r;
}

} // namespace appell
