#pragma once

#include "hodgespec/chains.hpp"
#include "hodgespec/simplicial_complex.hpp"

#include <string>
#include <vector>

namespace hodgespec {

/// Default absolute tolerance for eigenvalue assertions, applied after
/// normalizing by the operator's spectral norm.
inline constexpr double kSpectralTol = 1e-8;

enum class OperatorKind { upper, lower, full };

std::string to_string(OperatorKind kind);

/// Full eigenvalue multiset of one Laplacian operator, sorted ascending.
/// All operators here are positive semi-definite, so eigenvalues should not
/// drop below -tolerance (scaled); max_residual records the achieved
/// worst-case ||Mv - lambda v|| of the solve.
struct Spectrum {
    int j = 0;
    OperatorKind kind = OperatorKind::upper;
    std::vector<double> eigenvalues;
    double tolerance = kSpectralTol;
    double max_residual = 0.0;

    double lambda_max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
    double lambda_min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

/// The j-th upper Laplacian Delta_j^+ = boundary_j . coboundary_j, built as
/// the integer Gram matrix delta_jT delta_j. Requires 0 <= j <= dim-1.
IntMatrix upper_laplacian_matrix(const SimplicialComplex& x, int j);

/// The j-th lower Laplacian Delta_j^- = coboundary_{j-1} . boundary_{j-1},
/// built as delta_{j-1} delta_{j-1}T. Requires 1 <= j <= dim.
IntMatrix lower_laplacian_matrix(const SimplicialComplex& x, int j);

/// The full Laplacian Delta_j = Delta_j^- + Delta_j^+; reduces to the defined
/// part at j = 0 and j = dim.
IntMatrix full_laplacian_matrix(const SimplicialComplex& x, int j);

/// Eigenvalues of a symmetric integer matrix, ascending (dense solve).
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);

/// Full spectrum of the requested Laplacian. Throws DimensionError when the
/// operator is undefined for (j, kind); throws Error if the eigensolve
/// residual exceeds tol * ||M||.
Spectrum spectrum(const SimplicialComplex& x, int j, OperatorKind kind,
                  double tol = kSpectralTol);

/// Largest eigenvalue of Delta_j^+.
double lambda_max(const SimplicialComplex& x, int j, double tol = kSpectralTol);

/// Upper spectra for every j = 0..dim-1; the independent eigensolves run on
/// up to `jobs` threads (0 = hardware).
std::vector<Spectrum> all_upper_spectra(const SimplicialComplex& x,
                                        double tol = kSpectralTol, unsigned jobs = 0);

/// The eigenvalues of `s` that are nonzero up to `zero_tol` (scaled by the
/// spectral norm), ascending. Used for the upper/lower spectrum pairing check.
std::vector<double> nonzero_eigenvalues(const Spectrum& s, double zero_tol = 1e-7);

} // namespace hodgespec
