#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyprism {

enum class Check { decomposition, ls_spectrum, minors, coeffs, kfstar, tau, gutman, ratio, lemma22 };

/// Per-check numeric tolerances.
inline constexpr double kDecompositionTolerance = 1e-8;  // absolute, eigenvalue by eigenvalue
inline constexpr double kKfStarTolerance = 1e-9;         // relative, numeric routes vs closed form
inline constexpr double kTreeProbeTolerance = 1e-6;        // relative, float spanning-tree probe

std::string check_name(Check check);
/// "all" or a comma-separated list of check names.
std::vector<Check> parse_checks(const std::string& spec);
const std::vector<Check>& all_checks();

/// One (n, check) outcome.
///
/// pass <=> exact checks compare equal, numeric checks stay within their
/// tolerance. Rows with pattern_regime == false (n = 1) are informational.
struct VerificationRow {
    std::size_t n = 0;
    std::string check;
    std::vector<std::pair<std::string, std::string>> values;  // route name -> value
    std::optional<double> max_relative_delta;                 // numeric checks
    bool exact = false;
    bool pass = false;
    bool pattern_regime = true;
    std::string note;
};

/// Never throws for valid n; an exception inside a route becomes a failed row.
VerificationRow run_check(Check check, std::size_t n);

/// Rows ordered by (n, check) whatever the schedule; `jobs` bounds worker threads.
std::vector<VerificationRow> run_verification(std::size_t min_n, std::size_t max_n,
                                              const std::vector<Check>& checks, unsigned jobs = 1);

/// True iff every pattern-regime row passes.
bool suite_passes(const std::vector<VerificationRow>& rows);

std::string format_rows(const std::vector<VerificationRow>& rows);

/// Closed-form table for n = 2..max_n: n, kf_star_exact, tau_exact,
/// gutman_exact, ratio_decimal (20 digits), pattern_regime.
std::string sweep_csv(std::size_t max_n, unsigned jobs = 1);

/// n = 1 comparison between brute force and the closed forms.
struct BoundaryFinding {
    std::string tau_exact;
    std::string tau_closed;
    bool tau_agrees;
    double kf_star_numeric;
    std::string kf_star_closed;
    bool kf_star_agrees;
    double reduced_reconstruction_error;
    std::string summary;
};

BoundaryFinding boundary_finding();

}  // namespace polyprism
