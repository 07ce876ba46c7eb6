#include "appell/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "appell/acceptance.hpp"
#include "appell/modforms.hpp"
#include "appell/serialize.hpp"
#include "appell/theta_system.hpp"

namespace appell::cli {

namespace {

const std::map<std::string, Target> kTargets = {
    {"pde", Target::pde},       {"det", Target::det},
    {"shift", Target::shift},   {"garvan", Target::garvan},
    {"rank-crank", Target::rank_crank}, {"identities", Target::identities},
    {"all", Target::all},
};

const std::map<std::string, SeriesName> kSeries = {
    {"eta", SeriesName::eta},     {"E2", SeriesName::E2},       {"E4", SeriesName::E4},
    {"E6", SeriesName::E6},       {"E8", SeriesName::E8},       {"E10", SeriesName::E10},
    {"E12", SeriesName::E12},     {"delta", SeriesName::delta}, {"theta", SeriesName::theta},
    {"appell-q0", SeriesName::appell_q0},
};

const std::map<std::string, Format> kFormats = {{"text", Format::text}, {"json", Format::json}};

IdentityCheck failed(std::string name, const std::string& why) {
    IdentityCheck c;
    c.name = std::move(name);
    c.first_offender = why;
    return c;
}

/// Runs one check, turning library errors (too little order, determinant
/// mismatch) into failed results.
template <class F>
void attempt(std::vector<IdentityCheck>& out, const std::string& name, F&& body) {
    try {
        body();
    } catch (const Error& e) {
        out.push_back(failed(name, e.what()));
    }
}

std::string delta_presentation(const ModularFormExpr& e) {
    const std::vector<Rat> c = eisenstein_delta_presentation(e);
    std::string out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero())
            continue;
        const int w = e.weight() - 12 * static_cast<int>(j);
        std::string mono;
        if (w > 0)
            mono = "E" + std::to_string(w);
        if (j > 0)
            mono += std::string(mono.empty() ? "" : "*") + "Delta" + (j > 1 ? "^" + std::to_string(j) : "");
        const Rat mag = out.empty() ? c[j] : c[j].abs();
        if (!out.empty())
            out += c[j].sign() < 0 ? " - " : " + ";
        out += mono.empty() ? mag.str() : mag.str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

void print_solve(const ThetaSystem& sys, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::json) {
        out << to_json(make_report(sys, cfg.head)).dump(2) << "\n";
        return;
    }
    out << "level " << sys.level << ", solved below q^" << sys.order << "\n";
    out << "detB = " << sys.vandermonde.detB << "\n";
    auto block = [&](const char* name, const std::map<int, RatQExp>& series,
                     const std::map<int, ModularFormExpr>& exprs) {
        for (auto it = exprs.rbegin(); it != exprs.rend(); ++it) {
            const auto& [j, e] = *it;
            out << name << "_" << j << " = " << (e.is_zero() ? "0" : e.str()) << "\n";
            if (j >= 12 && j <= 14 && !e.is_zero())
                out << "    = " << delta_presentation(e) << "\n";
            if (j > 0)
                out << "    = " << head_str(series.at(j), cfg.head) << "\n";
        }
    };
    block("F", sys.F, sys.F_expr);
    block("f", sys.f, sys.f_expr);
}

RatQExp named_series(const RunConfig& cfg, std::int64_t n) {
    switch (cfg.series_name) {
    case SeriesName::eta:
        return eta_series(Precision::q_order(n, 24));
    case SeriesName::E2:
        return eisenstein(2, {1, n});
    case SeriesName::E4:
        return eisenstein(4, {1, n});
    case SeriesName::E6:
        return eisenstein(6, {1, n});
    case SeriesName::E8:
        return eisenstein(8, {1, n});
    case SeriesName::E10:
        return eisenstein(10, {1, n});
    case SeriesName::E12:
        return eisenstein(12, {1, n});
    case SeriesName::delta:
        return delta_series({1, n});
    case SeriesName::theta:
        return theta_lr(cfg.level, cfg.r, Precision::q_order(n, level_denom(cfg.level)));
    case SeriesName::appell_q0:
        break;
    }
    throw Error("not a one-variable series");
}

Json check_json(const IdentityCheck& c) {
    Json j{{"name", c.name}, {"passed", c.passed}, {"order", c.order.str()}};
    if (!c.passed)
        j["first_offender"] = c.first_offender;
    return j;
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& args, std::string* help) {
    RunConfig cfg;
    CLI::App app{"Exact q-series verification of level-l rank-crank type PDEs", "appell"};
    app.require_subcommand(1);

    std::int64_t order = 0;
    auto add_common = [&](CLI::App* sub, bool with_order) {
        sub->add_option("--level,-l", cfg.level, "odd level l >= 1")->capture_default_str();
        if (with_order)
            sub->add_option("--order,-n", order, "q-order (default depends on the check)");
        sub->add_option("--format", cfg.format, "text or json")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    CLI::App* solve = app.add_subcommand("solve", "solve the theta system for F_j and f_j");
    add_common(solve, true);
    solve->add_option("--head", cfg.head, "q-coefficients shown per F_j")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "verify identities and report the first offending coefficient");
    add_common(verify, true);
    verify->add_option("--target,-t", cfg.target, "pde, det, shift, garvan, rank-crank, identities or all")
        ->transform(CLI::CheckedTransformer(kTargets, CLI::ignore_case));

    CLI::App* series = app.add_subcommand("series", "print a named q-expansion");
    add_common(series, true);
    series->add_option("--series-name,-s", cfg.series_name,
                       "eta, E2, E4, E6, E8, E10, E12, delta, theta or appell-q0")
        ->required()
        ->transform(CLI::CheckedTransformer(kSeries));
    series->add_option("--r", cfg.r, "theta index r, 1 <= r <= (l-1)/2")->capture_default_str();

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        std::ostringstream os;
        app.exit(e, os, os);
        if (help)
            *help = os.str();
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    if (help)
        help->clear();

    if (solve->parsed())
        cfg.command = Command::solve;
    else if (verify->parsed())
        cfg.command = Command::verify;
    else if (series->parsed())
        cfg.command = Command::series;
    else
        cfg.command = Command::selftest;
    for (CLI::App* sub : {solve, verify, series})
        if (sub->parsed() && sub->count("--order"))
            cfg.order = order;
    validate(cfg);
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (cfg.level < 1 || cfg.level % 2 == 0)
        throw UsageError("--level must be an odd integer >= 1, got " + std::to_string(cfg.level));
    if (cfg.order && *cfg.order < 4)
        throw UsageError("--order must be at least 4, got " + std::to_string(*cfg.order));
    if (cfg.head < 1)
        throw UsageError("--head must be positive");
    if (cfg.command == Command::series && cfg.series_name == SeriesName::theta) {
        const int h = (cfg.level - 1) / 2;
        if (cfg.r < 1 || cfg.r > h)
            throw UsageError("--r must lie in 1.." + std::to_string(h) + " for level " + std::to_string(cfg.level));
    }
    if (cfg.command == Command::verify) {
        if (cfg.target == Target::det && cfg.level < 3)
            throw UsageError("the determinant identity needs --level >= 3");
        const bool needs_eight = cfg.target == Target::garvan || cfg.target == Target::rank_crank ||
                                 (cfg.target == Target::all && (cfg.level == 3 || cfg.level == 5));
        if (needs_eight && cfg.order && *cfg.order < 8)
            throw UsageError("the rank-crank and Garvan checks need --order >= 8");
    }
}

std::vector<IdentityCheck> run_verification(Target target, int level, std::optional<std::int64_t> order) {
    std::vector<IdentityCheck> out;
    const bool all = target == Target::all;
    auto append = [&out](const std::vector<IdentityCheck>& v) { out.insert(out.end(), v.begin(), v.end()); };

    if (all || target == Target::pde)
        attempt(out, "main identity (level " + std::to_string(level) + ")", [&] {
            out.push_back(verify_main(solve_F(level, default_solve_order(level)), order.value_or(12)));
        });
    if ((all && level >= 3) || target == Target::det) {
        const std::int64_t n = order.value_or(15);
        const auto power = (level - 1) * (level - 2) / 2;
        const std::string name = "det T_" + std::to_string(level) + " = " + vandermonde(level).detB.str() +
                                 "*eta^" + std::to_string(power);
        attempt(out, name, [&] {
            det_T(level, n);
            IdentityCheck c;
            c.name = name;
            c.passed = true;
            c.order = Rat(n);
            out.push_back(c);
        });
    }
    if (all || target == Target::shift)
        attempt(out, "shift identity (level " + std::to_string(level) + ")",
                [&] { out.push_back(verify_shift(level, order.value_or(10))); });
    if (all || target == Target::identities)
        attempt(out, "identity suite", [&] { append(identity_checks(order)); });
    if ((all && level == 3) || target == Target::rank_crank)
        attempt(out, "Rank-Crank PDE", [&] { append(rank_crank_checks(order.value_or(12))); });
    if ((all && level == 5) || target == Target::garvan)
        attempt(out, "Garvan PDE", [&] { append(garvan_checks(order.value_or(10))); });
    return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        switch (cfg.command) {
        case Command::solve: {
            const ThetaSystem sys = solve_F(cfg.level, cfg.order.value_or(default_solve_order(cfg.level)));
            print_solve(sys, cfg, out);
            return 0;
        }
        case Command::verify: {
            const auto checks = run_verification(cfg.target, cfg.level, cfg.order);
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
            if (cfg.format == Format::json) {
                Json arr = Json::array();
                for (const auto& c : checks)
                    arr.push_back(check_json(c));
                out << Json{{"passed", ok}, {"checks", std::move(arr)}}.dump(2) << "\n";
            } else {
                for (const auto& c : checks) {
                    out << (c.passed ? "PASS " : "FAIL ") << c.name;
                    if (c.passed)
                        out << " (below q^(" << c.order << "))";
                    else
                        out << ": " << c.first_offender;
                    out << "\n";
                }
            }
            return ok ? 0 : 1;
        }
        case Command::series: {
            const std::int64_t n = cfg.order.value_or(8);
            if (cfg.series_name == SeriesName::appell_q0) {
                const FracQExp a = appell(cfg.level, Precision::q_order(1, level_denom(cfg.level))).series();
                out << (cfg.format == Format::json ? to_json(a).dump(2) + "\n" : to_text(a));
            } else {
                const RatQExp f = named_series(cfg, n);
                out << (cfg.format == Format::json ? to_json(f).dump(2) + "\n" : to_text(f));
            }
            return 0;
        }
        case Command::selftest: {
            const auto results = acceptance::run_all();
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
            if (cfg.format == Format::json) {
                Json arr = Json::array();
                for (const auto& r : results)
                    arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
                out << Json{{"passed", ok}, {"criteria", std::move(arr)}}.dump(2) << "\n";
            } else {
                for (const auto& r : results)
                    out << acceptance::format(r);
            }
            return ok ? 0 : 1;
        }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string help;
    try {
        cfg = parse_args(args, &help);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for the list of options.\n";
        return 2;
    }
    if (!help.empty()) {
        out << help;
        return 0;
    }
    return run(cfg, out, err);
}

} // namespace appell::cli
