#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "appell/jacobi.hpp"
#include "appell/modforms.hpp"
#include "appell/theta_system.hpp"

namespace appell {

using Json = nlohmann::ordered_json;

/// One "q^(a/b): coeff" line per stored term, ascending, exponent reduced.
std::string to_text(const RatQExp& f);
std::string to_text(const FracQExp& f);

/// Short human form c0 + c1*q + ... of an integer-exponent series, with a
/// trailing "+ O(q^n)".
std::string head_str(const RatQExp& f, std::int64_t terms);

Json to_json(const Rat& x);
Json to_json(const LaurentPoly& p);
Json to_json(const CoeffFrac& c);
/// {"D": int, "N": int, "terms": [[m, coeff], ...]}
Json to_json(const RatQExp& f);
Json to_json(const FracQExp& f);
/// [{"a": int, "b": int, "coeff": "p/q"}, ...]
Json to_json(const ModularFormExpr& e);

Rat rat_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
CoeffFrac frac_from_json(const Json& j);
RatQExp rat_series_from_json(const Json& j);
FracQExp frac_series_from_json(const Json& j);
ModularFormExpr form_from_json(const Json& j, int weight);

/// Exported view of a solved theta system.
struct SystemReport {
    struct Entry {
        int j = 0;
        /// (n, c_n) for the nonzero c_n with n below the head length
        std::vector<std::pair<std::int64_t, Rat>> series_head;
        ModularFormExpr expr;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    int level = 1;
    std::int64_t order = 0;
    std::vector<Entry> F;
    std::vector<Entry> f;
    Rat detB{1};

    friend bool operator==(const SystemReport&, const SystemReport&) = default;
};

SystemReport make_report(const ThetaSystem& sys, std::int64_t head_terms);
Json to_json(const SystemReport& r);
SystemReport report_from_json(const Json& j);

} // namespace appell
