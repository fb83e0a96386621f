#pragma once

#include "hodgespec/simplicial_complex.hpp"
#include "hodgespec/spectra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgespec {

/// One evaluated spectral bound: an upper bound on an independence number and
/// the matching lower bound on a chromatic number, plus every input quantity,
/// and (once attach_exact is called) the comparison against exact oracles.
struct BoundReport {
    std::string bound_name; // "hoffman-graph" | "main-hd" | "local" | "complete-skeleton"
    double i_upper = 0.0;
    double chi_lower = 0.0;
    /// Set when the bound's denominator vanished (product of lambdas does not
    /// exceed the degree product); chi_lower is meaningless then.
    bool chi_lower_infinite = false;
    std::map<std::string, double> inputs;

    std::optional<int> exact_i;
    std::optional<int> exact_chi;
    std::optional<bool> holds;

    /// Records oracle values and evaluates the bound against them:
    /// exact_i <= floor(i_upper + 1e-9) and exact_chi >= ceil(chi_lower - 1e-9).
    void attach_exact(int independence, int chromatic);

    /// Integer-rounded i_upper used for oracle comparisons.
    int i_upper_floor() const;
};

/// Hoffman's bound for a k-regular graph (a 1-dimensional complex):
/// i <= (lambda_max - k)/lambda_max * n and chi >= lambda_max/(lambda_max - k).
BoundReport hoffman_graph_bound(const SimplicialComplex& x, double tol = kSpectralTol);

/// The regular-complex bound. With P the product of lambda_max over
/// Delta_0^+..Delta_{d-1}^+ and Q = (k_0+1)(k_1+2)...(k_{d-2}+d-1) k_{d-1}:
/// i_d <= (P-Q)/P * n and chi_d >= P/(P-Q). At d = 1 this is exactly the
/// Hoffman graph bound.
BoundReport main_hd_bound(const SimplicialComplex& x, double tol = kSpectralTol);

/// The star-local variant for pure (not necessarily regular) complexes of
/// dimension >= 2, with k_j the minimum j-face degree and
/// Lambda_l = max over (l-1)-faces F of lambda_max^l(St(F)), the star family
/// the counting argument actually tests against. Headline values use the
/// product P = lambda^0 Lambda_1...Lambda_{d-1} on both sides. The variant
/// built from l-face stars, and the asymmetric formula (denominator without
/// Lambda_1), are recorded in inputs (Lambda_literal_l, i_upper_literal,
/// chi_lower_literal) for audit; the l-face-star reading is not sound (the
/// octahedron violates it), which is why it is not the headline.
BoundReport local_bound(const SimplicialComplex& x, double tol = kSpectralTol,
                        unsigned jobs = 0);

/// Specialization for complexes with complete (d-1)-skeleton and constant
/// top degree k: i_d <= (lambda_max^{d-1} - k)/lambda_max^{d-1} * n. Also
/// re-checks the reduction facts k_j = n-(j+1) and lambda_max^j = n for
/// j <= d-2.
BoundReport complete_skeleton_bound(const SimplicialComplex& x, double tol = kSpectralTol);

/// Per-face record from the proof-side counting argument: for a j-face F
/// inside the independent set, k_in/k_out split F's degree by whether the
/// added vertex stays inside the set, and k_out must reach the spectral
/// threshold (k_j+j+1)...(k_{d-2}+d-1) k_{d-1} / (lambda^{j+1}...lambda^{d-1}).
struct FaceDiagnostic {
    Face face;
    int j = 0;
    int k_in = 0;
    int k_out = 0;
    double threshold = 0.0;
    double margin = 0.0;      // k_out - threshold
    bool sum_matches = false; // k_in + k_out == k_j
    bool covered = false;     // k_out >= 1 (purity)
};

struct ProofDiagnostics {
    std::vector<FaceDiagnostic> records;
    long long crossing_edges = 0; // edges with exactly one endpoint in the set
    double edge_lower = 0.0;      // Q / (lambda^1...lambda^{d-1}) * |I|
    double edge_upper = 0.0;      // lambda^0 * (n-i) * i / n
    bool all_hold = false;
};

/// Evaluates the counting quantities from the main bound's proof on a regular
/// complex and a verified d-independent vertex set. Empty sets are legal and
/// yield vacuous diagnostics.
ProofDiagnostics proof_diagnostics(const SimplicialComplex& x,
                                   const std::vector<int>& independent_set,
                                   double tol = kSpectralTol);

} // namespace hodgespec
