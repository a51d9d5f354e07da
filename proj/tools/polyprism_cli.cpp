#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyprism/error.hpp"
#include "polyprism/graph.hpp"
#include "polyprism/report.hpp"
#include "polyprism/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

const char* kFooter =
    "Tolerances: spectral routes 1e-9 relative (kf, kf_star vs closed form), block decomposition 1e-8 "
    "absolute per eigenvalue, spanning-tree float probe 1e-6 relative. Exact checks compare rationals "
    "for equality.\n"
    "Exit codes: 0 success, 1 verification failure, 2 usage error.";

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw polyprism::Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw polyprism::Error("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong prisms of linear polyomino chains: invariants and closed-form checks"};
    app.footer(kFooter);
    app.require_subcommand(1);

    const std::vector<std::string> families{"polyomino", "prism-polyomino", "cycle", "path", "complete"};

    std::string gen_family;
    std::size_t gen_n = 0;
    std::string gen_format = "json";
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Write a graph as DOT or JSON");
    gen->add_option("--family", gen_family, "Graph family")->required()->check(CLI::IsMember(families));
    gen->add_option("--n", gen_n, "Squares for polyomino families, order otherwise")->required();
    gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"dot", "json"}));
    gen->add_option("--output,-o", gen_output, "Output file (default: standard output)");

    std::string inv_family;
    std::size_t inv_n = 0;
    bool inv_exact = false;
    bool inv_csv = false;
    bool inv_no_timestamp = false;
    auto* inv = app.add_subcommand("invariants", "Compute the invariant report of one graph");
    inv->add_option("--family", inv_family, "Graph family")->required()->check(CLI::IsMember(families));
    inv->add_option("--n", inv_n, "Squares for polyomino families, order otherwise")->required();
    inv->add_flag("--exact", inv_exact, "Include closed-form values (prism-polyomino)");
    inv->add_flag("--csv", inv_csv, "Emit a CSV header and row instead of JSON");
    inv->add_flag("--no-timestamp", inv_no_timestamp, "Omit the generated_at field");

    std::size_t min_n = 2;
    std::size_t max_n = 12;
    std::string checks = "all";
    unsigned jobs = 1;
    auto* verify = app.add_subcommand("verify", "Check the closed forms against independent routes");
    verify->add_option("--min-n", min_n, "Smallest chain length")->check(CLI::PositiveNumber);
    verify->add_option("--max-n", max_n, "Largest chain length")->check(CLI::PositiveNumber);
    verify->add_option("--checks", checks,
                       "'all' or comma list of: decomposition, ls-spectrum, minors, coeffs, kfstar, tau, "
                       "gutman, ratio, lemma22");
    verify->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::size_t sweep_max = 100;
    std::string sweep_output;
    unsigned sweep_jobs = 1;
    auto* sweep = app.add_subcommand("sweep", "Tabulate the closed forms for n = 2..max-n as CSV");
    sweep->add_option("--max-n", sweep_max, "Largest chain length (>= 2)")->required();
    sweep->add_option("--output,-o", sweep_output, "Output file (default: standard output)");
    sweep->add_option("--jobs,-j", sweep_jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            const auto g = polyprism::make_family(polyprism::parse_family(gen_family), gen_n);
            const std::string text = gen_format == "dot" ? polyprism::to_dot(g) : polyprism::to_json(g);
            write_output(gen_output, text);
            (gen_output.empty() ? std::cerr : std::cout)
                << "vertices: " << g.order() << "\nedges: " << g.size() << "\n";
            return kExitOk;
        }
        if (*inv) {
            const auto report = polyprism::compute_report(polyprism::parse_family(inv_family), inv_n, inv_exact);
            if (inv_csv) {
                std::cout << polyprism::report_csv_header() << polyprism::report_to_csv_row(report);
            } else {
                std::cout << polyprism::report_to_json(report, !inv_no_timestamp);
            }
            return kExitOk;
        }
        if (*verify) {
            if (min_n > max_n) throw polyprism::InvalidParameter("--min-n must not exceed --max-n");
            const auto rows = polyprism::run_verification(min_n, max_n, polyprism::parse_checks(checks), jobs);
            std::cout << polyprism::format_rows(rows);
            const bool ok = polyprism::suite_passes(rows);
            if (!ok) {
                for (const auto& row : rows) {
                    if (row.pattern_regime && !row.pass) {
                        std::cerr << "FAILED " << row.check << " at n=" << row.n;
                        for (const auto& [k, v] : row.values) std::cerr << ' ' << k << '=' << v;
                        if (!row.note.empty()) std::cerr << " (" << row.note << ')';
                        std::cerr << '\n';
                    }
                }
            }
            return ok ? kExitOk : kExitVerificationFailure;
        }
        if (*sweep) {
            write_output(sweep_output, polyprism::sweep_csv(sweep_max, sweep_jobs));
            return kExitOk;
        }
    } catch (const polyprism::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
