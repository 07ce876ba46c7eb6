#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "appell/errors.hpp"
#include "appell/jacobi.hpp"

namespace appell::cli {

enum class Command { solve, verify, series, selftest };
enum class Target { pde, det, shift, garvan, rank_crank, identities, all };
enum class SeriesName { eta, E2, E4, E6, E8, E10, E12, delta, theta, appell_q0 };
enum class Format { text, json };

struct RunConfig {
    Command command = Command::selftest;
    int level = 3;
    /// unset means each check's default order
    std::optional<std::int64_t> order;
    Target target = Target::all;
    SeriesName series_name = SeriesName::eta;
    int r = 1;
    Format format = Format::text;
    /// q-coefficients shown per F_j by solve
    std::int64_t head = 4;
};

/// Invalid flags or values; exit status 2.
struct UsageError : Error {
    using Error::Error;
};

/// Parses argv (without the program name). --help is reported through
/// `help` and leaves the returned config unused.
RunConfig parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

/// Checks the cross-field invariants; throws UsageError.
void validate(const RunConfig& cfg);

std::vector<IdentityCheck> run_verification(Target target, int level, std::optional<std::int64_t> order);

/// Exit status 0 when everything passed, 1 on a failed or unverifiable check.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to status 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace appell::cli
