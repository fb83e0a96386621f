#pragma once

#include "hodgespec/simplicial_complex.hpp"

#include <utility>
#include <vector>

namespace hodgespec {

/// Witness for an independence number: a largest vertex set spanning no j-face.
struct IndependentSetCertificate {
    std::vector<int> vertex_set; // ascending vertex ids
    int size = 0;
};

/// Witness for a chromatic number: assignment[v] is the color of vertex v
/// (-1 for ids that are not vertices of the complex); colors used are exactly
/// {0..num_colors-1} and no j-face is monochromatic.
struct ColoringCertificate {
    int num_colors = 0;
    std::vector<int> assignment;
};

struct SearchOptions {
    /// Exact searches refuse complexes with more vertices than this.
    int vertex_cap = 24;
};

inline constexpr int kDefaultVertexCap = 24;

/// True iff no j-face of x has all vertices inside `vertex_set`.
/// Requires 1 <= j <= dim.
bool is_independent(const SimplicialComplex& x, int j, const std::vector<int>& vertex_set);

/// Exact j-th independence number by branch-and-bound over the
/// (j+1)-uniform hypergraph of j-faces, with the maximizing set attached.
/// Throws SearchCapError when num_vertices() exceeds the cap.
std::pair<int, IndependentSetCertificate> independence_number(
    const SimplicialComplex& x, int j, const SearchOptions& opts = {});

/// Exact j-th chromatic number: iterative deepening on the color count with
/// backtracking; the first vertex is pinned to color 0 and each vertex may
/// open at most one new color, which breaks color symmetry without losing
/// completeness.
std::pair<int, ColoringCertificate> chromatic_number(
    const SimplicialComplex& x, int j, const SearchOptions& opts = {});

/// Independent re-check of a returned certificate (never trusts the search).
bool verify_certificate(const SimplicialComplex& x, int j,
                        const IndependentSetCertificate& cert);
bool verify_certificate(const SimplicialComplex& x, int j, const ColoringCertificate& cert);

/// The elementary counting relations between n, i_j, chi_j.
struct CountingReport {
    int j = 0;
    int n = 0;
    int independence = 0; // i_j
    int chromatic = 0;    // chi_j
    bool product_holds = false; // n <= i_j * chi_j
    int chi_1 = 0;
    int chi_d = 0;
    bool lemma_holds = false; // chi_d <= ceil(chi_1 / d)
};

/// Evaluates n <= i_j * chi_j for the requested j plus the skeleton lemma
/// chi_d <= ceil(chi_1 / d). Propagates SearchCapError.
CountingReport check_counting_inequalities(const SimplicialComplex& x, int j,
                                           const SearchOptions& opts = {});

} // namespace hodgespec
