#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "appell/acceptance.hpp"
#include "appell/cli.hpp"
#include "appell/serialize.hpp"

namespace py = pybind11;
using namespace appell;

namespace {

cli::Target parse_target(const std::string& s) {
    static const std::map<std::string, cli::Target> names = {
        {"pde", cli::Target::pde},       {"det", cli::Target::det},
        {"shift", cli::Target::shift},   {"garvan", cli::Target::garvan},
        {"rank-crank", cli::Target::rank_crank}, {"identities", cli::Target::identities},
        {"all", cli::Target::all},
    };
    const auto it = names.find(s);
    if (it == names.end())
        throw cli::UsageError("unknown target '" + s + "'");
    return it->second;
}

py::dict check_dict(const IdentityCheck& c) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["order"] = c.order.str();
    d["first_offender"] = c.first_offender;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-series and heat-operator identities for Appell functions";

    static py::exception<Error> base(m, "AppellError", PyExc_ValueError);
    static py::exception<cli::UsageError> usage(m, "UsageError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const cli::UsageError& e) {
            py::set_error(usage, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::main_entry(args, out, err);
            }
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (status, stdout, stderr).");

    m.def(
        "solve_json",
        [](int level, std::int64_t order, std::int64_t head) {
            const std::int64_t n = order > 0 ? order : default_solve_order(level);
            std::string s;
            {
                py::gil_scoped_release release;
                s = to_json(make_report(solve_F(level, n), head)).dump();
            }
            return s;
        },
        py::arg("level"), py::arg("order") = 0, py::arg("head") = 4);

    m.def(
        "verify",
        [](const std::string& target, int level, std::optional<std::int64_t> order) {
            cli::RunConfig cfg;
            cfg.command = cli::Command::verify;
            cfg.target = parse_target(target);
            cfg.level = level;
            cfg.order = order;
            cli::validate(cfg);
            std::vector<IdentityCheck> checks;
            {
                py::gil_scoped_release release;
                checks = cli::run_verification(cfg.target, level, order);
            }
            py::list out;
            for (const auto& c : checks)
                out.append(check_dict(c));
            return out;
        },
        py::arg("target") = "all", py::arg("level") = 3, py::arg("order") = std::nullopt);

    m.def(
        "eisenstein_json", [](int k, std::int64_t n) { return to_json(eisenstein(k, Precision{1, n})).dump(); },
        py::arg("k"), py::arg("n"));
    m.def("eta_json", [](std::int64_t n) { return to_json(eta_series(Precision::q_order(n, 24))).dump(); },
          py::arg("n"));
    m.def(
        "partition_numbers",
        [](std::int64_t n) {
            const RatQExp p = partition_series(Precision{1, n});
            std::vector<std::string> out;
            for (std::int64_t i = 0; i < n; ++i)
                out.push_back(p.coeff(i).str());
            return out;
        },
        py::arg("n"), "p(0), ..., p(n-1) as decimal strings.");
    m.def("vandermonde_det", [](int level) { return vandermonde(level).detB.str(); }, py::arg("level"));

    m.def("acceptance", []() {
        std::vector<acceptance::CriterionResult> rs;
        {
            py::gil_scoped_release release;
            rs = acceptance::run_all();
        }
        py::list out;
        for (const auto& r : rs) {
            py::dict d;
            d["id"] = r.id;
            d["title"] = r.title;
            d["passed"] = r.passed;
            d["details"] = r.details;
            out.append(d);
        }
        return out;
    });
}
