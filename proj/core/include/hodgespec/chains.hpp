#pragma once

#include "hodgespec/simplicial_complex.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hodgespec {

/// Canonical ordered basis of the cochain space C^j: all j-faces in
/// lexicographic order, each carrying its ascending-orientation. A cochain is
/// represented by its coordinate vector in this basis.
struct ChainBasis {
    int j = 0;
    std::vector<Face> ordered_faces;

    std::size_t size() const { return ordered_faces.size(); }

    /// Basis position of `f`; throws UnknownFaceError if absent.
    std::size_t index_of(const Face& f) const;
};

ChainBasis chain_basis(const SimplicialComplex& x, int j);

/// Sparse signed incidence matrix with entries in {-1, 0, +1}, stored as
/// triplets sorted by (row, col).
struct IncidenceMatrix {
    struct Entry {
        std::uint32_t row = 0;
        std::uint32_t col = 0;
        int sign = 0;

        bool operator==(const Entry&) const = default;
    };

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Entry> entries;

    IncidenceMatrix transposed() const;

    /// y = M x.
    std::vector<double> apply(std::span<const double> x) const;
    std::vector<long long> apply(std::span<const long long> x) const;

    bool operator==(const IncidenceMatrix&) const = default;
};

/// Matrix of the coboundary map delta_j in canonical bases: rows are
/// (j+1)-faces, columns are j-faces, and the entry for (B, B minus its i-th
/// vertex) is (-1)^i. Requires 0 <= j <= dim-1.
IncidenceMatrix coboundary_matrix(const SimplicialComplex& x, int j);

/// Matrix of the boundary map: the adjoint of delta_j under the unweighted
/// inner product, i.e. exactly the transpose of coboundary_matrix(x, j).
IncidenceMatrix boundary_matrix(const SimplicialComplex& x, int j);

/// Sum over canonical faces of f([A]) g([A]). Lengths must agree.
double inner_product(std::span<const double> f, std::span<const double> g);
long long inner_product(std::span<const long long> f, std::span<const long long> g);

/// Dense integer matrix, row-major. Incidence products are accumulated here
/// so algebraic identities (delta(delta) = 0, adjointness, traces) can be
/// checked exactly, with no floating point involved.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    long long& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    long long at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool is_zero() const;
    long long trace() const;

    bool operator==(const IntMatrix&) const = default;
};

/// a * b over the integers (a.cols must equal b.rows).
IntMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b);
IntMatrix multiply(const IntMatrix& a, const IncidenceMatrix& b);

/// mᵀ m — the Gram matrix of the columns (cols x cols).
IntMatrix gram(const IncidenceMatrix& m);

/// m mᵀ — the Gram matrix of the rows (rows x rows).
IntMatrix cogram(const IncidenceMatrix& m);

IntMatrix add(const IntMatrix& a, const IntMatrix& b);

} // namespace hodgespec
