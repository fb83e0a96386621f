// hodgespec command line: analyze complexes, print Laplacian spectra, and
// verify whole catalogs of generated/loaded complexes against exact oracles.
//
// Exit codes: 0 = all checks pass, 1 = mathematical violation, 2 = usage or
// parse error.

#include "hodgespec/catalog.hpp"
#include "hodgespec/complex_io.hpp"
#include "hodgespec/errors.hpp"
#include "hodgespec/generators.hpp"
#include "hodgespec/invariants.hpp"
#include "hodgespec/report.hpp"
#include "hodgespec/spectra.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    int cap = hodgespec::kDefaultVertexCap;
    double tol = hodgespec::kSpectralTol;
    unsigned jobs = 0;
    std::optional<std::uint64_t> seed_override;
};

hodgespec::LabeledComplex load_input(const std::string& path, const std::string& gen,
                                     const std::optional<std::uint64_t>& seed_override) {
    if (!gen.empty()) {
        hodgespec::GeneratorSpec spec = hodgespec::GeneratorSpec::parse(gen);
        if (seed_override && spec.params.count("seed")) {
            spec.params["seed"] = std::to_string(*seed_override);
        }
        return hodgespec::with_default_labels(hodgespec::build(spec));
    }
    return hodgespec::read_complex_file(path);
}

int run_analyze(const std::string& path, const std::string& gen, const CommonOptions& common,
                bool skip_invariants, bool diagnostics, const std::string& json_path) {
    const hodgespec::LabeledComplex lx = load_input(path, gen, common.seed_override);
    if (lx.complex.is_empty()) {
        std::cerr << "error: input describes an empty complex\n";
        return kExitUsage;
    }
    hodgespec::AnalyzeOptions opts;
    opts.vertex_cap = common.cap;
    opts.tol = common.tol;
    opts.jobs = common.jobs;
    opts.skip_invariants = skip_invariants;
    opts.include_diagnostics = diagnostics;
    const nlohmann::json report = hodgespec::analyze(lx, opts);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return kExitUsage;
        }
        out << report.dump(2) << "\n";
    }
    hodgespec::print_report(std::cout, report);

    // Violations inside an analyze run (a bound failing against its oracle)
    // surface through the exit code as well.
    for (const auto& bound : report.at("bounds")) {
        if (bound.contains("holds") && !bound.at("holds").get<bool>()) return kExitViolation;
    }
    if (report.contains("counting")) {
        const auto& counting = report.at("counting");
        if (!counting.at("product_holds").get<bool>() ||
            !counting.at("lemma_holds").get<bool>()) {
            return kExitViolation;
        }
    }
    if (report.contains("diagnostics") &&
        !report.at("diagnostics").at("all_hold").get<bool>()) {
        return kExitViolation;
    }
    return kExitOk;
}

int run_spectrum(const std::string& path, const std::string& gen, const CommonOptions& common,
                 int j, const std::string& kind_name, bool full_precision) {
    const hodgespec::LabeledComplex lx = load_input(path, gen, common.seed_override);
    hodgespec::OperatorKind kind = hodgespec::OperatorKind::upper;
    if (kind_name == "lower") kind = hodgespec::OperatorKind::lower;
    else if (kind_name == "full") kind = hodgespec::OperatorKind::full;
    else if (kind_name != "upper") {
        std::cerr << "error: --kind must be upper, lower or full\n";
        return kExitUsage;
    }
    const hodgespec::Spectrum s = hodgespec::spectrum(lx.complex, j, kind, common.tol);
    if (full_precision) std::cout << std::setprecision(17);
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (i > 0) std::cout << ' ';
        std::cout << s.eigenvalues[i];
    }
    std::cout << "\n";
    std::cerr << "lambda_max = " << std::setprecision(17) << s.lambda_max() << "\n";
    return kExitOk;
}

int run_verify(const std::string& catalog_path, const CommonOptions& common) {
    std::vector<hodgespec::CatalogEntry> entries;
    if (catalog_path.empty()) {
        entries = hodgespec::default_catalog();
    } else {
        entries = hodgespec::parse_catalog_file(catalog_path);
    }
    hodgespec::CatalogRunOptions opts;
    opts.vertex_cap = common.cap;
    opts.tol = common.tol;
    opts.jobs = common.jobs;
    opts.seed_override = common.seed_override;
    const hodgespec::CatalogResult result = hodgespec::run_catalog(entries, opts);
    hodgespec::print_catalog_summary(std::cout, result);
    return result.all_ok ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher-order Laplacian spectra and spectral independence/chromatic bounds"};
    app.require_subcommand(1);
    // shared flags (--cap, --tol, --jobs, --seed-override) may be given after
    // the subcommand name as well
    app.fallthrough();

    CommonOptions common;
    app.add_option("--cap", common.cap, "vertex cap for exact oracle searches")
        ->capture_default_str();
    app.add_option("--tol", common.tol, "spectral tolerance")->capture_default_str();
    app.add_option("--jobs", common.jobs, "worker threads (0 = hardware)")
        ->capture_default_str();
    std::uint64_t seed_override = 0;
    auto* seed_opt = app.add_option("--seed-override", seed_override,
                                    "replace the seed of every randomized generator");

    std::string input_path, gen_spec, json_path;
    bool skip_invariants = false, diagnostics = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one complex");
    auto* analyze_input =
        analyze->add_option("input", input_path, "face-list file (one face per line)");
    analyze->add_option("--gen", gen_spec, "generator spec, e.g. 'complete_complex n=5 d=2'");
    analyze->add_flag("--skip-invariants", skip_invariants, "skip the exact searches");
    analyze->add_flag("--diagnostics", diagnostics, "include proof-side counting diagnostics");
    analyze->add_option("--json", json_path, "also write the machine report here");

    int spectrum_j = 0;
    std::string kind = "upper";
    bool full_precision = false;
    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of one Laplacian");
    auto* spectrum_input = spectrum->add_option("input", input_path, "face-list file");
    spectrum->add_option("--gen", gen_spec, "generator spec");
    spectrum->add_option("-j,--dim", spectrum_j, "cochain dimension j")->required();
    spectrum->add_option("--kind", kind, "upper | lower | full")->capture_default_str();
    spectrum->add_flag("--full-precision", full_precision, "print 17 significant digits");

    std::string catalog_path;
    CLI::App* verify = app.add_subcommand("verify-catalog",
                                          "check every invariant across a catalog");
    verify->add_option("catalog", catalog_path,
                       "catalog file (omit to run the built-in default catalog)");

    CLI11_PARSE(app, argc, argv);
    if (seed_opt->count() > 0) common.seed_override = seed_override;

    try {
        if (analyze->parsed()) {
            if (analyze_input->count() == 0 && gen_spec.empty()) {
                std::cerr << "error: analyze needs a file or --gen\n";
                return kExitUsage;
            }
            return run_analyze(input_path, gen_spec, common, skip_invariants, diagnostics,
                               json_path);
        }
        if (spectrum->parsed()) {
            if (spectrum_input->count() == 0 && gen_spec.empty()) {
                std::cerr << "error: spectrum needs a file or --gen\n";
                return kExitUsage;
            }
            return run_spectrum(input_path, gen_spec, common, spectrum_j, kind,
                                full_precision);
        }
        if (verify->parsed()) {
            return run_verify(catalog_path, common);
        }
    } catch (const hodgespec::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hodgespec::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hodgespec::DimensionError& e) {
        std::cerr << "dimension error: " << e.what()
                  << " (see --help for which operators are defined where)\n";
        return kExitUsage;
    } catch (const hodgespec::SearchCapError& e) {
        std::cerr << "search cap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hodgespec::PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hodgespec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
