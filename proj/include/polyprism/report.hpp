#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyprism/graph.hpp"
#include "polyprism/invariants.hpp"
#include "polyprism/rational.hpp"

namespace polyprism {

/// Closed-form values for a strong prism, next to the brute-force numbers.
struct ClosedFormFields {
    bool pattern_regime;
    Rational kf_star;
    Rational kf_star_reduced_spectra;
    BigInt tau;
    BigInt gutman;
    bool kf_star_agrees;  // within kSpectralTolerance of the resistance route
    bool tau_agrees;
    bool gutman_agrees;
};

struct InvariantReport {
    std::string family;
    std::size_t n = 0;
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    BigInt wiener;
    BigInt gutman;
    TwoRouteValue kf{};
    TwoRouteValue kf_star{};
    SpanningTreeCount tau{};
    std::optional<bool> pattern_regime;  // set for prism-polyomino only
    std::optional<ClosedFormFields> closed_forms;
    std::vector<std::string> warnings;
};

/// 1e-9 relative: agreement threshold between spectral and resistance routes.
inline constexpr double kSpectralTolerance = 1e-9;

/// Computes every invariant of `g`. `family`/`n` only label the report.
InvariantReport compute_report(const Graph& g, const std::string& family, std::size_t n);

/// Builds the family graph and computes its report; with `exact` set and a
/// prism-polyomino family, closed-form fields are filled in.
InvariantReport compute_report(GraphFamily family, std::size_t n, bool exact);

/// JSON object with fields wiener, gutman, kf, kf_star, tau, routes, deltas.
/// Exact integers and rationals are strings. `timestamp` adds generated_at.
std::string report_to_json(const InvariantReport& report, bool timestamp = false);

std::string report_csv_header();
std::string report_to_csv_row(const InvariantReport& report);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace polyprism
