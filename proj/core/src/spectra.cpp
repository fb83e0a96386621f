#include "hodgespec/spectra.hpp"

#include "hodgespec/errors.hpp"
#include "hodgespec/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hodgespec {

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::upper: return "upper";
        case OperatorKind::lower: return "lower";
        case OperatorKind::full: return "full";
    }
    return "?";
}

IntMatrix upper_laplacian_matrix(const SimplicialComplex& x, int j) {
    if (x.is_empty() || j < 0 || j > x.dim() - 1) {
        std::ostringstream msg;
        msg << "upper Laplacian undefined for j=" << j << " on a complex of dimension "
            << x.dim();
        throw DimensionError(msg.str());
    }
    // deltaT delta keeps the operator symmetric PSD by construction.
    return gram(coboundary_matrix(x, j));
}

IntMatrix lower_laplacian_matrix(const SimplicialComplex& x, int j) {
    if (x.is_empty() || j < 1 || j > x.dim()) {
        std::ostringstream msg;
        msg << "lower Laplacian undefined for j=" << j << " on a complex of dimension "
            << x.dim();
        throw DimensionError(msg.str());
    }
    return cogram(coboundary_matrix(x, j - 1));
}

IntMatrix full_laplacian_matrix(const SimplicialComplex& x, int j) {
    if (x.is_empty() || j < 0 || j > x.dim()) {
        std::ostringstream msg;
        msg << "Laplacian undefined for j=" << j << " on a complex of dimension " << x.dim();
        throw DimensionError(msg.str());
    }
    if (j == 0) return upper_laplacian_matrix(x, 0);
    if (j == x.dim()) return lower_laplacian_matrix(x, j);
    return add(lower_laplacian_matrix(x, j), upper_laplacian_matrix(x, j));
}

namespace {

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                static_cast<double>(m.at(r, c));
        }
    }
    return a;
}

} // namespace

std::vector<double> symmetric_eigenvalues(const IntMatrix& m) {
    if (m.rows != m.cols) {
        throw DimensionError("eigensolve of a non-square matrix");
    }
    if (m.rows == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("symmetric eigensolve did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Spectrum spectrum(const SimplicialComplex& x, int j, OperatorKind kind, double tol) {
    IntMatrix m;
    switch (kind) {
        case OperatorKind::upper: m = upper_laplacian_matrix(x, j); break;
        case OperatorKind::lower: m = lower_laplacian_matrix(x, j); break;
        case OperatorKind::full: m = full_laplacian_matrix(x, j); break;
    }

    Spectrum s;
    s.j = j;
    s.kind = kind;
    s.tolerance = tol;
    if (m.rows == 0) return s;

    const Eigen::MatrixXd a = to_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw Error("symmetric eigensolve did not converge");
    }
    const auto& ev = solver.eigenvalues();
    s.eigenvalues.assign(ev.data(), ev.data() + ev.size());

    // ||M|| of a symmetric matrix is its largest absolute eigenvalue.
    const double norm = std::max({1.0, std::abs(s.eigenvalues.front()),
                                  std::abs(s.eigenvalues.back())});
    const Eigen::MatrixXd residual =
        a * solver.eigenvectors() - solver.eigenvectors() * ev.asDiagonal();
    s.max_residual = residual.colwise().norm().maxCoeff();
    if (s.max_residual > tol * norm) {
        std::ostringstream msg;
        msg << "eigensolve residual " << s.max_residual << " exceeds " << tol * norm;
        throw Error(msg.str());
    }
    return s;
}

double lambda_max(const SimplicialComplex& x, int j, double tol) {
    return spectrum(x, j, OperatorKind::upper, tol).lambda_max();
}

std::vector<Spectrum> all_upper_spectra(const SimplicialComplex& x, double tol,
                                        unsigned jobs) {
    if (x.is_empty()) {
        throw DimensionError("no Laplacians on the empty complex");
    }
    std::vector<Spectrum> out(static_cast<std::size_t>(x.dim()));
    parallel_for(out.size(), jobs, [&](std::size_t j) {
        out[j] = spectrum(x, static_cast<int>(j), OperatorKind::upper, tol);
    });
    return out;
}

std::vector<double> nonzero_eigenvalues(const Spectrum& s, double zero_tol) {
    const double scale = std::max(1.0, std::abs(s.lambda_max()));
    std::vector<double> out;
    for (double v : s.eigenvalues) {
        if (std::abs(v) > zero_tol * scale) out.push_back(v);
    }
    return out;
}

} // namespace hodgespec
