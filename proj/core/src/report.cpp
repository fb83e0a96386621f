#include "hodgespec/report.hpp"

#include "hodgespec/bounds.hpp"
#include "hodgespec/errors.hpp"
#include "hodgespec/invariants.hpp"
#include "hodgespec/spectra.hpp"

#include <cmath>
#include <functional>
#include <ostream>

namespace hodgespec {

namespace {

using nlohmann::json;

json face_to_labels(const Face& f, const LabeledComplex& lx) {
    json arr = json::array();
    for (int v : f.vertices()) arr.push_back(lx.label_of(v));
    return arr;
}

json bound_to_json(const BoundReport& r) {
    json out;
    out["bound_name"] = r.bound_name;
    out["i_upper"] = r.i_upper;
    out["chi_lower_infinite"] = r.chi_lower_infinite;
    if (!r.chi_lower_infinite) out["chi_lower"] = r.chi_lower;
    out["inputs"] = r.inputs;
    if (r.exact_i) out["exact_i"] = *r.exact_i;
    if (r.exact_chi) out["exact_chi"] = *r.exact_chi;
    if (r.holds) out["holds"] = *r.holds;
    return out;
}

json diagnostics_to_json(const ProofDiagnostics& diag, const LabeledComplex& lx) {
    json records = json::array();
    for (const FaceDiagnostic& rec : diag.records) {
        records.push_back({{"face", face_to_labels(rec.face, lx)},
                           {"j", rec.j},
                           {"k_in", rec.k_in},
                           {"k_out", rec.k_out},
                           {"threshold", rec.threshold},
                           {"margin", rec.margin},
                           {"sum_matches", rec.sum_matches},
                           {"covered", rec.covered}});
    }
    return {{"records", std::move(records)},
            {"crossing_edges", diag.crossing_edges},
            {"edge_lower", diag.edge_lower},
            {"edge_upper", diag.edge_upper},
            {"all_hold", diag.all_hold}};
}

} // namespace

json analyze(const LabeledComplex& lx, const AnalyzeOptions& opts) {
    const SimplicialComplex& x = lx.complex;
    if (x.is_empty()) {
        throw ParameterError("cannot analyze an empty complex");
    }
    const int d = x.dim();

    json report;
    report["schema_version"] = kReportSchemaVersion;
    json omissions = json::array();

    // -- complex summary --------------------------------------------------
    json summary;
    summary["n_vertices"] = x.num_vertices();
    summary["vertex_id_bound"] = x.vertex_id_bound();
    summary["dim"] = d;
    json counts = json::array();
    for (int j = 0; j <= d; ++j) counts.push_back(x.face_count(j));
    summary["face_counts"] = std::move(counts);
    json facets = json::array();
    for (const Face& f : x.facets()) facets.push_back(face_to_labels(f, lx));
    summary["facets"] = std::move(facets);

    const RegularityProfile profile = x.regularity_profile();
    summary["regularity"] = {{"is_pure", profile.is_pure},
                             {"is_regular", profile.is_regular},
                             {"degrees_min", profile.degrees_min},
                             {"degrees_max", profile.degrees_max}};
    report["complex"] = std::move(summary);

    // -- spectra -----------------------------------------------------------
    json spectra = json::array();
    for (const Spectrum& s : all_upper_spectra(x, opts.tol, opts.jobs)) {
        spectra.push_back({{"j", s.j},
                           {"kind", to_string(s.kind)},
                           {"eigenvalues", s.eigenvalues},
                           {"lambda_max", s.lambda_max()},
                           {"max_residual", s.max_residual}});
    }
    report["spectra"] = std::move(spectra);

    // -- exact invariants ----------------------------------------------------
    std::optional<int> i_top, chi_top, i_1, chi_1;
    if (opts.skip_invariants) {
        omissions.push_back({{"what", "invariants"}, {"reason", "skipped by request"}});
    } else if (d < 1) {
        omissions.push_back({{"what", "invariants"},
                             {"reason", "no independence levels on a 0-dimensional complex"}});
    } else {
        SearchOptions search{opts.vertex_cap};
        try {
            json invariants = json::array();
            for (int j = 1; j <= d; ++j) {
                const auto [i_val, i_cert] = independence_number(x, j, search);
                const auto [chi_val, chi_cert] = chromatic_number(x, j, search);
                json set = json::array();
                for (int v : i_cert.vertex_set) set.push_back(lx.label_of(v));
                json coloring = json::object();
                for (int v : x.vertices()) {
                    coloring[lx.label_of(v)] = chi_cert.assignment[static_cast<std::size_t>(v)];
                }
                invariants.push_back({{"j", j},
                                      {"independence", i_val},
                                      {"chromatic", chi_val},
                                      {"independent_set", std::move(set)},
                                      {"coloring", std::move(coloring)}});
                if (j == 1) { i_1 = i_val; chi_1 = chi_val; }
                if (j == d) { i_top = i_val; chi_top = chi_val; }
            }
            report["invariants"] = std::move(invariants);
            const CountingReport counting = check_counting_inequalities(x, d, search);
            report["counting"] = {{"chi_1", counting.chi_1},
                                  {"chi_d", counting.chi_d},
                                  {"product_holds", counting.product_holds},
                                  {"lemma_holds", counting.lemma_holds}};
        } catch (const SearchCapError& e) {
            omissions.push_back({{"what", "invariants"}, {"reason", e.what()}});
            i_top.reset(); chi_top.reset(); i_1.reset(); chi_1.reset();
        }
    }

    // -- bounds --------------------------------------------------------------
    json bounds = json::array();
    json skipped = json::array();
    const auto try_bound = [&](const char* name,
                               const std::function<BoundReport()>& eval,
                               const std::optional<int>& exact_i,
                               const std::optional<int>& exact_chi) {
        try {
            BoundReport r = eval();
            if (exact_i && exact_chi) r.attach_exact(*exact_i, *exact_chi);
            bounds.push_back(bound_to_json(r));
        } catch (const PreconditionError& e) {
            skipped.push_back({{"bound_name", name}, {"reason", e.what()}});
        } catch (const DimensionError& e) {
            skipped.push_back({{"bound_name", name}, {"reason", e.what()}});
        }
    };
    try_bound("hoffman-graph", [&] { return hoffman_graph_bound(x, opts.tol); }, i_1, chi_1);
    try_bound("main-hd", [&] { return main_hd_bound(x, opts.tol); }, i_top, chi_top);
    try_bound("local", [&] { return local_bound(x, opts.tol, opts.jobs); }, i_top, chi_top);
    try_bound("complete-skeleton", [&] { return complete_skeleton_bound(x, opts.tol); },
              i_top, chi_top);
    report["bounds"] = std::move(bounds);
    report["skipped_bounds"] = std::move(skipped);

    // -- proof diagnostics -----------------------------------------------------
    if (opts.include_diagnostics) {
        if (profile.is_regular && i_top) {
            SearchOptions search{opts.vertex_cap};
            const auto [i_val, cert] = independence_number(x, d, search);
            (void)i_val;
            report["diagnostics"] =
                diagnostics_to_json(proof_diagnostics(x, cert.vertex_set, opts.tol), lx);
        } else {
            omissions.push_back(
                {{"what", "diagnostics"},
                 {"reason", profile.is_regular
                                ? "requires exact invariants (over cap or skipped)"
                                : "requires a regular complex"}});
        }
    }

    report["omissions"] = std::move(omissions);
    return report;
}

void print_report(std::ostream& out, const json& report) {
    const auto& summary = report.at("complex");
    out << "complex: n=" << summary.at("n_vertices").get<int>()
        << " dim=" << summary.at("dim").get<int>() << " faces=[";
    const auto& counts = summary.at("face_counts");
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (j > 0) out << ' ';
        out << counts[j].get<std::size_t>();
    }
    out << "]\n";
    const auto& reg = summary.at("regularity");
    out << "regularity: pure=" << (reg.at("is_pure").get<bool>() ? "yes" : "no")
        << " regular=" << (reg.at("is_regular").get<bool>() ? "yes" : "no");
    if (!reg.at("degrees_min").empty()) {
        out << " degrees=[";
        for (std::size_t j = 0; j < reg.at("degrees_min").size(); ++j) {
            if (j > 0) out << ' ';
            const int lo = reg.at("degrees_min")[j].get<int>();
            const int hi = reg.at("degrees_max")[j].get<int>();
            out << lo;
            if (hi != lo) out << ".." << hi;
        }
        out << "]";
    }
    out << "\n";

    for (const auto& s : report.at("spectra")) {
        out << "spectrum j=" << s.at("j").get<int>() << " (" << s.at("kind").get<std::string>()
            << "): lambda_max=" << s.at("lambda_max").get<double>() << "  ["
            << s.at("eigenvalues").size() << " eigenvalues]\n";
    }

    if (report.contains("invariants")) {
        for (const auto& inv : report.at("invariants")) {
            out << "invariants j=" << inv.at("j").get<int>()
                << ": independence=" << inv.at("independence").get<int>()
                << " chromatic=" << inv.at("chromatic").get<int>() << "\n";
        }
    }
    if (report.contains("counting")) {
        const auto& c = report.at("counting");
        out << "counting: chi_1=" << c.at("chi_1").get<int>()
            << " chi_d=" << c.at("chi_d").get<int>()
            << " product=" << (c.at("product_holds").get<bool>() ? "ok" : "VIOLATED")
            << " lemma=" << (c.at("lemma_holds").get<bool>() ? "ok" : "VIOLATED") << "\n";
    }

    for (const auto& b : report.at("bounds")) {
        out << "bound " << b.at("bound_name").get<std::string>()
            << ": i_upper=" << b.at("i_upper").get<double>();
        if (b.at("chi_lower_infinite").get<bool>()) {
            out << " chi_lower=degenerate(P<=Q)";
        } else {
            out << " chi_lower=" << b.at("chi_lower").get<double>();
        }
        if (b.contains("exact_i")) {
            out << "  exact: i=" << b.at("exact_i").get<int>()
                << " chi=" << b.at("exact_chi").get<int>()
                << " -> " << (b.at("holds").get<bool>() ? "holds" : "VIOLATED");
        }
        if (b.at("inputs").contains("i_upper_literal")) {
            out << "  [literal variant: i_upper="
                << b.at("inputs").at("i_upper_literal").get<double>() << "]";
        }
        out << "\n";
    }
    for (const auto& s : report.at("skipped_bounds")) {
        out << "bound " << s.at("bound_name").get<std::string>()
            << ": skipped (" << s.at("reason").get<std::string>() << ")\n";
    }
    if (report.contains("diagnostics")) {
        const auto& diag = report.at("diagnostics");
        out << "diagnostics: records=" << diag.at("records").size()
            << " crossing_edges=" << diag.at("crossing_edges").get<long long>()
            << " in [" << diag.at("edge_lower").get<double>() << ", "
            << diag.at("edge_upper").get<double>() << "]"
            << " -> " << (diag.at("all_hold").get<bool>() ? "hold" : "VIOLATED") << "\n";
    }
    for (const auto& o : report.at("omissions")) {
        out << "omitted " << o.at("what").get<std::string>() << ": "
            << o.at("reason").get<std::string>() << "\n";
    }
}

} // namespace hodgespec
