#include "polyprism/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "polyprism/closed_forms.hpp"

namespace polyprism {

namespace {

using Json = nlohmann::ordered_json;

Json exact_field(const Rational& value) {
    return Json{{"rational", value.to_string()}, {"decimal", value.to_decimal(20)}};
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
        if (std::strtod(buffer, nullptr) == value) break;
    }
    return buffer;
}

InvariantReport compute_report(const Graph& g, const std::string& family, std::size_t n) {
    InvariantReport report;
    report.family = family;
    report.n = n;
    report.n_vertices = g.order();
    report.n_edges = g.size();

    const DistanceMatrix d = distance_matrix(g);
    report.wiener = wiener(d);
    report.gutman = gutman(g, d);
    const ResistanceMatrix r = resistance_matrix(g);
    report.kf = kirchhoff_index(g, r);
    report.kf_star = degree_kirchhoff_index(g, r);
    report.tau = spanning_trees(g);

    if (report.kf.relative_delta > kSpectralTolerance) {
        report.warnings.push_back("kf routes differ by " + format_double(report.kf.relative_delta));
    }
    if (report.kf_star.relative_delta > kSpectralTolerance) {
        report.warnings.push_back("kf_star routes differ by " + format_double(report.kf_star.relative_delta));
    }
    if (report.tau.spectral_diverged) {
        report.warnings.push_back("spectral spanning-tree probe differs from the exact count by " +
                                  format_double(report.tau.relative_delta));
    }
    return report;
}

InvariantReport compute_report(GraphFamily family, std::size_t n, bool exact) {
    const Graph g = make_family(family, n);
    InvariantReport report = compute_report(g, family_name(family), n);
    if (family != GraphFamily::prism_polyomino) return report;

    report.pattern_regime = n >= 2;
    if (n < 2) {
        report.warnings.push_back(
            "pattern-regime: false; n = 1 is 5-regular, outside the 5/7 degree pattern the closed forms assume");
    }
    if (exact) {
        const Rational kf_star = kfstar_closed(n).value;
        ClosedFormFields fields{
            n >= 2,
            kf_star,
            kfstar_via_reduced_spectra(n).value,
            tau_closed(n).value.to_integer(),
            gutman_closed(n).value.to_integer(),
            relative_delta(kf_star.to_double(), report.kf_star.resistance_route) <= kSpectralTolerance,
            false,
            false,
        };
        fields.tau_agrees = fields.tau == report.tau.exact;
        fields.gutman_agrees = fields.gutman == report.gutman;
        report.closed_forms = std::move(fields);
    }
    return report;
}

std::string report_to_json(const InvariantReport& report, bool timestamp) {
    Json doc;
    doc["graph"] = {{"family", report.family},
                    {"n", report.n},
                    {"n_vertices", report.n_vertices},
                    {"n_edges", report.n_edges}};
    doc["wiener"] = to_string(report.wiener);
    doc["gutman"] = to_string(report.gutman);
    doc["kf"] = report.kf.resistance_route;
    doc["kf_star"] = report.kf_star.resistance_route;
    doc["tau"] = to_string(report.tau.exact);
    doc["routes"] = {
        {"kf", {{"resistance", report.kf.resistance_route}, {"spectral", report.kf.spectral_route}}},
        {"kf_star", {{"resistance", report.kf_star.resistance_route}, {"spectral", report.kf_star.spectral_route}}},
        {"tau", {{"matrix_tree", to_string(report.tau.exact)}, {"spectral", report.tau.spectral}}},
    };
    doc["deltas"] = {{"kf", report.kf.relative_delta},
                     {"kf_star", report.kf_star.relative_delta},
                     {"tau", report.tau.relative_delta}};
    if (report.pattern_regime) doc["pattern_regime"] = *report.pattern_regime;
    if (report.closed_forms) {
        const auto& cf = *report.closed_forms;
        doc["closed_forms"] = {
            {"pattern_regime", cf.pattern_regime},
            {"kf_star", exact_field(cf.kf_star)},
            {"kf_star_reduced_spectra", exact_field(cf.kf_star_reduced_spectra)},
            {"tau", to_string(cf.tau)},
            {"gutman", to_string(cf.gutman)},
            {"agrees", {{"kf_star", cf.kf_star_agrees}, {"tau", cf.tau_agrees}, {"gutman", cf.gutman_agrees}}},
        };
    }
    doc["warnings"] = report.warnings;
    if (timestamp) doc["generated_at"] = utc_now();
    return doc.dump(2) + "\n";
}

std::string report_csv_header() {
    return "family,n,n_vertices,n_edges,wiener,gutman,kf,kf_star,tau,kf_spectral,kf_star_spectral,"
           "tau_spectral,delta_kf,delta_kf_star,delta_tau\n";
}

std::string report_to_csv_row(const InvariantReport& report) {
    std::ostringstream out;
    out << report.family << ',' << report.n << ',' << report.n_vertices << ',' << report.n_edges << ','
        << to_string(report.wiener) << ',' << to_string(report.gutman) << ','
        << format_double(report.kf.resistance_route) << ',' << format_double(report.kf_star.resistance_route)
        << ',' << to_string(report.tau.exact) << ',' << format_double(report.kf.spectral_route) << ','
        << format_double(report.kf_star.spectral_route) << ',' << format_double(report.tau.spectral) << ','
        << format_double(report.kf.relative_delta) << ',' << format_double(report.kf_star.relative_delta) << ','
        << format_double(report.tau.relative_delta) << '\n';
    return out.str();
}

}  // namespace polyprism
