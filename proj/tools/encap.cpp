// encap: encapsulation metrics for uniform systems and real codebases.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 source scan failure.

#include "encap/curve.hpp"
#include "encap/error.hpp"
#include "encap/graph.hpp"
#include "encap/ingest.hpp"
#include "encap/report.hpp"
#include "encap/table2.hpp"
#include "encap/uniform.hpp"
#include "encap/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

enum ExitCode : int { kOk = 0, kInputError = 1, kVerifyFailed = 2, kScanFailed = 3 };

struct UniformArgs {
    encap::Count n = 0, r = 0, p = 0;
    std::string format = "table";
};

struct LimitArgs {
    std::optional<encap::Count> p, x, violational, total;
};

struct AnalyzeArgs {
    std::optional<std::string> manifest, java;
    std::string format = "table";
};

struct CurveArgs {
    encap::CurveRequest req;
    std::string out;
};

int run_uniform(const UniformArgs& a) {
    const auto sys = encap::UniformSystem::make(a.n, a.r, a.p);
    std::cout << encap::render_uniform(sys, encap::parse_format(a.format));
    return kOk;
}

int run_limit(const LimitArgs& a) {
    const bool by_size = a.p || a.x;
    const bool by_ihv = a.violational || a.total;
    if (by_size == by_ihv) {
        throw encap::InvalidInput("give exactly one of (--p and --x) or (--violational and --total)");
    }
    if (by_size) {
        if (!a.p || !a.x) throw encap::InvalidInput("--p and --x must be given together");
        std::cout << encap::render_fraction(encap::ce_limit_fixed_size(*a.p, *a.x));
    } else {
        if (!a.violational || !a.total) throw encap::InvalidInput("--violational and --total must be given together");
        std::cout << encap::render_fraction(encap::ce_limit_ihv(*a.violational, *a.total));
    }
    return kOk;
}

int run_analyze(const AnalyzeArgs& a) {
    if (a.manifest.has_value() == a.java.has_value()) {
        throw encap::InvalidInput("give exactly one of --manifest or --java");
    }
    const encap::Format format = encap::parse_format(a.format);
    if (a.manifest) {
        const encap::UnitGraph g = encap::read_manifest_file(*a.manifest);
        std::cout << encap::render_analysis(encap::metrics_for_graph(g), format);
        return kOk;
    }
    const encap::ScanResult scan = encap::scan_java_tree(*a.java);
    std::cerr << encap::render_scan_diagnostics(scan.diagnostics);
    std::cout << encap::render_analysis(encap::metrics_for_graph(scan.graph), format);
    return kOk;
}

int run_curve(const CurveArgs& a) {
    const encap::CurveSeries curve = encap::make_curve(a.req);
    if (a.out == "-") {
        encap::write_curve_csv(curve, std::cout);
        return kOk;
    }
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw encap::InvalidInput(fmt::format("cannot write '{}'", a.out));
    encap::write_curve_csv(curve, out);
    if (!out.flush()) throw encap::InvalidInput(fmt::format("error writing '{}'", a.out));
    return kOk;
}

int run_verify(encap::Count max_n) {
    const auto suites = encap::run_verification(max_n);
    std::cout << encap::render_verification(suites);
    return encap::all_passed(suites) ? kOk : kVerifyFailed;
}

int run_table2() {
    const auto rows = encap::compare_table2();
    std::cout << encap::render_table2(rows);
    return encap::table2_passes(rows) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Encapsulation metrics: P.S.C., configuration efficiency and its limit"};
    app.require_subcommand(1);

    UniformArgs uniform;
    auto* uniform_cmd = app.add_subcommand("uniform", "Metrics of a uniform system of n units in r regions");
    uniform_cmd->add_option("--n", uniform.n, "Program units")->required();
    uniform_cmd->add_option("--r", uniform.r, "Regions (must divide n)")->required();
    uniform_cmd->add_option("--p", uniform.p, "Public units per region")->required();
    uniform_cmd->add_option("--format", uniform.format, "table or json")->capture_default_str();

    LimitArgs limit;
    auto* limit_cmd = app.add_subcommand("limit", "Configuration efficiency limit of an indefinitely large system");
    limit_cmd->add_option("--p", limit.p, "Public units per region");
    limit_cmd->add_option("--x", limit.x, "Units per region");
    limit_cmd->add_option("--violational", limit.violational, "Public units in the whole system");
    limit_cmd->add_option("--total", limit.total, "Units in the whole system");

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Metrics of a real system");
    analyze_cmd->add_option("--manifest", analyze.manifest, "CSV manifest: unit,region,violational");
    analyze_cmd->add_option("--java", analyze.java, "Root of a Java source tree");
    analyze_cmd->add_option("--format", analyze.format, "table or json")->capture_default_str();

    CurveArgs curve;
    auto* curve_cmd = app.add_subcommand("curve", "Efficiency against size for fixed-size regions (CSV)");
    curve_cmd->add_option("--x", curve.req.x, "Units per region")->required();
    curve_cmd->add_option("--p", curve.req.p, "Public units per region")->required();
    curve_cmd->add_option("--n-start", curve.req.n_start, "Smallest system size")->required();
    curve_cmd->add_option("--n-end", curve.req.n_end, "Largest system size")->required();
    curve_cmd->add_option("--points", curve.req.points, "Number of samples")->required();
    curve_cmd->add_flag("--log-spacing", curve.req.log_spacing, "Space samples geometrically");
    curve_cmd->add_option("--out", curve.out, "Output CSV path, '-' for stdout")->required();

    encap::Count max_n = 200;
    auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force oracle suites");
    verify_cmd->add_option("--max-n", max_n, "Largest system size checked")->capture_default_str();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in reference data");
    fixtures_cmd->require_subcommand(1);
    auto* table2_cmd = fixtures_cmd->add_subcommand("table2", "Compare C.E. with 1 - I.H.V. on nine published systems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*uniform_cmd) return run_uniform(uniform);
        if (*limit_cmd) return run_limit(limit);
        if (*analyze_cmd) return run_analyze(analyze);
        if (*curve_cmd) return run_curve(curve);
        if (*verify_cmd) return run_verify(max_n);
        if (*table2_cmd) return run_table2();
    } catch (const encap::ScanError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kScanFailed;
    } catch (const encap::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
