#include "hodgespec/catalog.hpp"

#include "hodgespec/bounds.hpp"
#include "hodgespec/chains.hpp"
#include "hodgespec/errors.hpp"
#include "hodgespec/invariants.hpp"
#include "hodgespec/parallel.hpp"
#include "hodgespec/prng.hpp"
#include "hodgespec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hodgespec {

namespace {

constexpr double kPairingTol = 1e-8;
constexpr double kPsdTol = 1e-9;
constexpr double kReductionTol = 1e-12;

struct EntryChecker {
    const SimplicialComplex& x;
    const CatalogRunOptions& opts;
    EntryResult& result;

    void fail(const std::string& check, const std::string& detail) {
        result.checks.push_back({check, false, detail});
    }
    void pass(const std::string& check) { result.checks.push_back({check, true, {}}); }
    void record(const std::string& check, bool ok, const std::string& detail) {
        if (ok) {
            pass(check);
        } else {
            fail(check, detail);
        }
    }

    void check_structure() {
        const auto violations = x.validate();
        record("closure", violations.empty(),
               violations.empty() ? "" : violations.front());

        bool degrees_ok = true;
        std::ostringstream detail;
        std::vector<int> all_ids(static_cast<std::size_t>(x.vertex_id_bound()));
        for (int v = 0; v < x.vertex_id_bound(); ++v) all_ids[static_cast<std::size_t>(v)] = v;
        for (int j = 0; j <= x.dim() && degrees_ok; ++j) {
            for (const Face& f : x.faces(j)) {
                if (x.degree(f) != static_cast<int>(x.cofaces_into(f, all_ids).size())) {
                    degrees_ok = false;
                    detail << "degree mismatch at " << f;
                    break;
                }
            }
        }
        record("degree-consistency", degrees_ok, detail.str());
    }

    void check_regularity() {
        const RegularityProfile profile = x.regularity_profile();
        bool ok = true;
        std::string detail;
        if (profile.is_regular && !profile.is_pure) {
            ok = false;
            detail = "regular complex classified non-pure";
        }
        if (profile.is_regular) {
            for (std::size_t j = 0; j + 1 < profile.degrees_min.size(); ++j) {
                if (!(profile.degrees_min[j + 1] < profile.degrees_min[j])) {
                    ok = false;
                    detail = "regular degrees are not strictly decreasing";
                }
            }
        }
        record("regularity-coherence", ok, detail);
    }

    void check_cochain_algebra() {
        const int d = x.dim();
        bool ok = true;
        std::ostringstream detail;
        for (int j = 0; j <= d - 1 && ok; ++j) {
            const IncidenceMatrix delta = coboundary_matrix(x, j);
            if (boundary_matrix(x, j) != delta.transposed()) {
                ok = false;
                detail << "boundary != coboundary transpose at j=" << j;
                break;
            }
            // each row of delta_j has exactly j+2 nonzeros, each column deg(F)
            std::vector<int> row_counts(delta.rows, 0), col_counts(delta.cols, 0);
            for (const auto& e : delta.entries) {
                ++row_counts[e.row];
                ++col_counts[e.col];
            }
            for (int c : row_counts) {
                if (c != j + 2) {
                    ok = false;
                    detail << "row nonzero count != j+2 at j=" << j;
                    break;
                }
            }
            const auto& level = x.faces(j);
            for (std::size_t c = 0; c < level.size() && ok; ++c) {
                if (col_counts[c] != x.degree(level[c])) {
                    ok = false;
                    detail << "column nonzero count != degree at j=" << j;
                }
            }
            if (ok && j + 1 <= d - 1) {
                if (!multiply(coboundary_matrix(x, j + 1), delta).is_zero()) {
                    ok = false;
                    detail << "delta_" << j + 1 << " . delta_" << j << " != 0";
                }
            }
        }
        record("cochain-algebra", ok, detail.str());
    }

    void check_spectra() {
        const int d = x.dim();
        bool psd_ok = true, pairing_ok = true, vanish_ok = true, trace_ok = true;
        std::ostringstream psd_detail, pairing_detail, vanish_detail, trace_detail;

        for (int j = 0; j <= d - 1; ++j) {
            const Spectrum up = spectrum(x, j, OperatorKind::upper, opts.tol);
            const double scale = std::max(1.0, std::abs(up.lambda_max()));
            if (up.lambda_min() < -kPsdTol * scale) {
                psd_ok = false;
                psd_detail << "negative eigenvalue " << up.lambda_min() << " at (j=" << j
                           << ", upper)";
            }
            // trace identity: trace(Delta_j^+) = sum of j-face degrees
            long long degree_sum = 0;
            for (const Face& f : x.faces(j)) degree_sum += x.degree(f);
            if (upper_laplacian_matrix(x, j).trace() != degree_sum) {
                trace_ok = false;
                trace_detail << "trace != degree sum at j=" << j;
            }

            const Spectrum low = spectrum(x, j + 1, OperatorKind::lower, opts.tol);
            if (low.lambda_min() < -kPsdTol * std::max(1.0, std::abs(low.lambda_max()))) {
                psd_ok = false;
                psd_detail << "negative eigenvalue at (j=" << j + 1 << ", lower)";
            }
            const auto up_nonzero = nonzero_eigenvalues(up);
            const auto low_nonzero = nonzero_eigenvalues(low);
            if (up_nonzero.size() != low_nonzero.size()) {
                pairing_ok = false;
                pairing_detail << "nonzero multiset sizes differ at j=" << j << " ("
                               << up_nonzero.size() << " vs " << low_nonzero.size() << ")";
            } else {
                for (std::size_t i = 0; i < up_nonzero.size(); ++i) {
                    if (std::abs(up_nonzero[i] - low_nonzero[i]) > kPairingTol) {
                        pairing_ok = false;
                        pairing_detail << "pairing deviation at j=" << j;
                        break;
                    }
                }
            }

            if (j >= 1) {
                // the upper Laplacian vanishes on coboundaries, exactly
                if (!multiply(upper_laplacian_matrix(x, j), coboundary_matrix(x, j - 1))
                         .is_zero()) {
                    vanish_ok = false;
                    vanish_detail << "Delta_" << j << "^+ . delta_" << j - 1 << " != 0";
                }
            }
        }
        record("psd", psd_ok, psd_detail.str());
        if (d >= 1) {
            record("spectrum-pairing", pairing_ok, pairing_detail.str());
            record("coboundary-vanishing", vanish_ok, vanish_detail.str());
        }
        record("trace-identity", trace_ok, trace_detail.str());
    }

    void check_horak_jost() {
        const RegularityProfile profile = x.regularity_profile();
        if (!profile.is_regular) return;
        bool ok = true;
        std::ostringstream detail;
        double min_margin = 0.0;
        bool have_margin = false;
        for (int j = 0; j <= x.dim() - 1; ++j) {
            const double lam = lambda_max(x, j, opts.tol);
            const double floor_value =
                profile.degrees_min[static_cast<std::size_t>(j)] + (j + 1);
            const double margin = lam - floor_value;
            if (!have_margin || margin < min_margin) {
                min_margin = margin;
                have_margin = true;
            }
            if (margin < -kPairingTol) {
                ok = false;
                detail << "lambda_max^" << j << " = " << lam << " below k_j + (j+1) = "
                       << floor_value;
            }
        }
        if (have_margin) result.margins["horak-jost"] = min_margin;
        record("horak-jost", ok, detail.str());
    }

    void check_rayleigh(std::uint64_t seed) {
        bool ok = true;
        std::ostringstream detail;
        SplitMix64 rng(seed);
        for (int j = 0; j <= x.dim() - 1; ++j) {
            const IntMatrix lap = upper_laplacian_matrix(x, j);
            std::vector<long long> f(lap.cols);
            bool nonzero = false;
            for (auto& v : f) {
                v = static_cast<long long>(rng.next_below(11)) - 5;
                nonzero = nonzero || v != 0;
            }
            if (!nonzero) continue;
            long long quad = 0, norm2 = 0;
            for (std::size_t r = 0; r < lap.rows; ++r) {
                long long row_dot = 0;
                for (std::size_t c = 0; c < lap.cols; ++c) row_dot += lap.at(r, c) * f[c];
                quad += row_dot * f[r];
                norm2 += f[r] * f[r];
            }
            const double lam = lambda_max(x, j, opts.tol);
            if (static_cast<double>(quad) >
                (lam + kPairingTol) * static_cast<double>(norm2)) {
                ok = false;
                detail << "Rayleigh quotient exceeds lambda_max at j=" << j;
            }
        }
        record("rayleigh", ok, detail.str());
    }

    // Oracle values for j = 1..d, or empty when over cap / not computed.
    struct OracleValues {
        std::vector<int> independence; // index j-1
        std::vector<int> chromatic;
    };

    std::optional<OracleValues> check_oracles() {
        const int d = x.dim();
        if (d < 1) return std::nullopt;
        if (x.num_vertices() > opts.vertex_cap) {
            result.skipped = true;
            std::ostringstream reason;
            reason << x.num_vertices() << " vertices exceed the oracle cap of "
                   << opts.vertex_cap << "; exact checks skipped";
            result.skip_reason = reason.str();
            return std::nullopt;
        }
        const SearchOptions search{opts.vertex_cap};
        OracleValues values;
        bool certs_ok = true, product_ok = true, floor_ok = true;
        std::ostringstream detail;
        for (int j = 1; j <= d; ++j) {
            const auto [i_val, i_cert] = independence_number(x, j, search);
            const auto [chi_val, chi_cert] = chromatic_number(x, j, search);
            values.independence.push_back(i_val);
            values.chromatic.push_back(chi_val);
            if (!verify_certificate(x, j, i_cert) || i_cert.size != i_val) {
                certs_ok = false;
                detail << "independent-set certificate failed re-verification at j=" << j
                       << "; ";
            }
            if (!verify_certificate(x, j, chi_cert) || chi_cert.num_colors != chi_val) {
                certs_ok = false;
                detail << "coloring certificate failed re-verification at j=" << j << "; ";
            }
            if (static_cast<long long>(i_val) * chi_val < x.num_vertices()) {
                product_ok = false;
                detail << "i_" << j << " * chi_" << j << " < n; ";
            }
            if (i_val < j) {
                floor_ok = false;
                detail << "independence below j at j=" << j << "; ";
            }
        }
        record("oracle-certificates", certs_ok, detail.str());
        record("counting-product", product_ok, detail.str());
        record("independence-floor", floor_ok, detail.str());

        bool monotone_ok = true;
        for (int j = 1; j < d; ++j) {
            if (values.independence[static_cast<std::size_t>(j - 1)] >
                    values.independence[static_cast<std::size_t>(j)] ||
                values.chromatic[static_cast<std::size_t>(j)] >
                    values.chromatic[static_cast<std::size_t>(j - 1)]) {
                monotone_ok = false;
            }
        }
        record("monotonicity", monotone_ok,
               monotone_ok ? "" : "i_j or chi_j not monotone across levels");

        const int chi_1 = values.chromatic.front();
        const int chi_d = values.chromatic.back();
        record("skeleton-lemma", chi_d <= (chi_1 + d - 1) / d,
               "chi_d exceeds ceil(chi_1/d)");
        return values;
    }

    void check_bounds(const std::optional<OracleValues>& oracles) {
        const int d = x.dim();
        if (d < 1) return;
        const RegularityProfile profile = x.regularity_profile();

        const auto compare = [&](const char* label, BoundReport&& report) {
            if (!oracles) return;
            const int exact_i = oracles->independence.back();
            const int exact_chi = oracles->chromatic.back();
            report.attach_exact(exact_i, exact_chi);
            result.margins[std::string(label) + ":i_margin"] = report.i_upper - exact_i;
            if (!report.chi_lower_infinite) {
                result.margins[std::string(label) + ":chi_margin"] =
                    exact_chi - report.chi_lower;
            }
            std::ostringstream detail;
            detail << label << ": i_upper=" << report.i_upper << " vs exact " << exact_i;
            if (!report.chi_lower_infinite) {
                detail << ", chi_lower=" << report.chi_lower << " vs exact " << exact_chi;
            } else {
                detail << ", chi_lower degenerate (P<=Q)";
            }
            record(std::string(label) + "-sound", report.holds.value_or(false), detail.str());
        };

        if (d == 1 && profile.is_regular) {
            BoundReport hoffman = hoffman_graph_bound(x, opts.tol);
            compare("hoffman-graph", std::move(hoffman));
        }
        if (profile.is_regular) {
            BoundReport main = main_hd_bound(x, opts.tol);
            result.margins["main-hd:P_minus_Q"] =
                main.inputs.at("P") - main.inputs.at("Q");
            if (d == 1) {
                const BoundReport hoffman = hoffman_graph_bound(x, opts.tol);
                const double rel =
                    std::abs(main.i_upper - hoffman.i_upper) /
                    std::max(1.0, std::abs(hoffman.i_upper));
                record("main-reduces-to-hoffman", rel <= kReductionTol,
                       "main-hd at d=1 deviates from hoffman-graph");
            }
            compare("main-hd", std::move(main));
        }
        if (d >= 2 && profile.is_pure) {
            compare("local", local_bound(x, opts.tol, 1));
        }
        try {
            compare("complete-skeleton", complete_skeleton_bound(x, opts.tol));
        } catch (const PreconditionError&) {
            // not applicable; fine
        }
    }

    void check_diagnostics(const std::optional<OracleValues>& oracles) {
        if (!oracles) return;
        const RegularityProfile profile = x.regularity_profile();
        if (!profile.is_regular) return;
        const SearchOptions search{opts.vertex_cap};
        const auto [i_val, cert] = independence_number(x, x.dim(), search);
        (void)i_val;
        const ProofDiagnostics diag = proof_diagnostics(x, cert.vertex_set, opts.tol);
        std::ostringstream detail;
        if (!diag.all_hold) {
            detail << "proof-side counting failed: crossing=" << diag.crossing_edges
                   << " in [" << diag.edge_lower << ", " << diag.edge_upper << "]";
        }
        record("proof-diagnostics", diag.all_hold, detail.str());
    }
};

} // namespace

bool EntryResult::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

std::vector<CatalogEntry> parse_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open catalog file: " + path.string());
    }
    const std::filesystem::path base = path.parent_path();
    std::vector<CatalogEntry> entries;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head)) continue;
        if (head == "file" || head == "rawfile") {
            std::string rel;
            if (!(tokens >> rel)) {
                std::ostringstream msg;
                msg << path.string() << ":" << line_number << ": '" << head
                    << "' needs a path";
                throw ParseError(msg.str());
            }
            CatalogEntry entry;
            entry.display_name = head + ":" + rel;
            entry.source = base / rel;
            entry.verbatim = head == "rawfile";
            entries.push_back(std::move(entry));
        } else {
            GeneratorSpec spec = GeneratorSpec::parse(line);
            CatalogEntry entry;
            entry.display_name = spec.to_string();
            entry.source = std::move(spec);
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> entries;
    const auto add_spec = [&entries](const std::string& text) {
        GeneratorSpec spec = GeneratorSpec::parse(text);
        entries.push_back({spec.to_string(), std::move(spec), false});
    };
    for (int d = 1; d <= 3; ++d) {
        for (int n = d + 1; n <= 8; ++n) {
            add_spec("complete_complex n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    }
    for (int d = 1; d <= 3; ++d) {
        add_spec("crosspolytope_boundary d=" + std::to_string(d));
    }
    for (const char* parts : {"3,3", "4,4", "2,2,2", "3,3,3", "2,2,2,2", "1,1,1,1"}) {
        add_spec(std::string("complete_multipartite parts=") + parts);
    }
    for (int seed = 1; seed <= 10; ++seed) {
        add_spec("random_pure n=9 d=2 p=0.45 seed=" + std::to_string(seed));
    }
    for (int seed = 11; seed <= 20; ++seed) {
        add_spec("random_pure n=10 d=2 p=0.35 seed=" + std::to_string(seed));
    }
    return entries;
}

CatalogResult run_catalog(const std::vector<CatalogEntry>& entries,
                          const CatalogRunOptions& opts) {
    CatalogResult result;
    result.entries.resize(entries.size());

    parallel_for(entries.size(), opts.jobs, [&](std::size_t idx) {
        const CatalogEntry& entry = entries[idx];
        EntryResult& out = result.entries[idx];
        out.name = entry.display_name;
        SimplicialComplex x;
        try {
            if (const auto* spec = std::get_if<GeneratorSpec>(&entry.source)) {
                GeneratorSpec actual = *spec;
                if (opts.seed_override && actual.params.count("seed")) {
                    actual.params["seed"] = std::to_string(*opts.seed_override);
                }
                x = build(actual);
            } else {
                x = read_complex_file(std::get<std::filesystem::path>(entry.source),
                                      entry.verbatim)
                        .complex;
            }
        } catch (const Error& e) {
            out.checks.push_back({"build", false, e.what()});
            return;
        }
        out.built = true;
        if (x.is_empty()) {
            out.skipped = true;
            out.skip_reason = "generator produced an empty complex";
            return;
        }

        EntryChecker checker{x, opts, out};
        try {
            checker.check_structure();
            checker.check_regularity();
            checker.check_cochain_algebra();
            checker.check_spectra();
            checker.check_horak_jost();
            checker.check_rayleigh(0xabcdef1234567890ULL + idx);
            const auto oracles = checker.check_oracles();
            checker.check_bounds(oracles);
            checker.check_diagnostics(oracles);
        } catch (const Error& e) {
            // A broken complex (verbatim ingestion) can make later checks
            // throw; keep whatever was recorded and mark the entry failed.
            out.checks.push_back({"aborted", false, e.what()});
        }
    });

    result.all_ok = std::all_of(result.entries.begin(), result.entries.end(),
                                [](const EntryResult& e) { return e.ok(); });
    return result;
}

void print_catalog_summary(std::ostream& out, const CatalogResult& result) {
    std::size_t passed = 0;
    for (const EntryResult& entry : result.entries) {
        if (entry.ok()) ++passed;
    }
    for (const EntryResult& entry : result.entries) {
        out << (entry.ok() ? "[ ok ] " : "[FAIL] ") << std::left << std::setw(44)
            << entry.name;
        if (entry.skipped) {
            out << " (skipped: " << entry.skip_reason << ")";
        } else if (!entry.built) {
            out << " (build failed)";
        } else {
            auto margin = entry.margins.find("main-hd:i_margin");
            if (margin == entry.margins.end()) {
                margin = entry.margins.find("hoffman-graph:i_margin");
            }
            if (margin == entry.margins.end()) {
                margin = entry.margins.find("local:i_margin");
            }
            if (margin != entry.margins.end()) {
                out << " i_margin=" << std::setprecision(3) << std::fixed << margin->second
                    << std::defaultfloat << std::setprecision(6);
            }
        }
        out << "\n";
        for (const CheckResult& check : entry.checks) {
            if (!check.passed) {
                out << "       violation [" << check.name << "] " << check.detail << "\n";
            }
        }
    }
    out << passed << "/" << result.entries.size() << " catalog entries clean\n";
}

} // namespace hodgespec
