#include "hodgespec/chains.hpp"

#include "hodgespec/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hodgespec {

std::size_t ChainBasis::index_of(const Face& f) const {
    auto it = std::lower_bound(ordered_faces.begin(), ordered_faces.end(), f);
    if (it == ordered_faces.end() || *it != f) {
        std::ostringstream msg;
        msg << "face " << f << " is not a basis element of C^" << j;
        throw UnknownFaceError(msg.str());
    }
    return static_cast<std::size_t>(it - ordered_faces.begin());
}

ChainBasis chain_basis(const SimplicialComplex& x, int j) {
    if (j < 0 || j > x.dim()) {
        std::ostringstream msg;
        msg << "no cochain space C^" << j << " on a complex of dimension " << x.dim();
        throw DimensionError(msg.str());
    }
    return ChainBasis{j, x.faces(j)};
}

IncidenceMatrix IncidenceMatrix::transposed() const {
    IncidenceMatrix out;
    out.rows = cols;
    out.cols = rows;
    out.entries.reserve(entries.size());
    for (const Entry& e : entries) {
        out.entries.push_back({e.col, e.row, e.sign});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const Entry& a, const Entry& b) {
                  return a.row != b.row ? a.row < b.row : a.col < b.col;
              });
    return out;
}

std::vector<double> IncidenceMatrix::apply(std::span<const double> x) const {
    if (x.size() != cols) {
        throw DimensionError("vector length does not match matrix columns");
    }
    std::vector<double> y(rows, 0.0);
    for (const Entry& e : entries) y[e.row] += e.sign * x[e.col];
    return y;
}

std::vector<long long> IncidenceMatrix::apply(std::span<const long long> x) const {
    if (x.size() != cols) {
        throw DimensionError("vector length does not match matrix columns");
    }
    std::vector<long long> y(rows, 0);
    for (const Entry& e : entries) y[e.row] += e.sign * x[e.col];
    return y;
}

IncidenceMatrix coboundary_matrix(const SimplicialComplex& x, int j) {
    if (j < 0 || j > x.dim() - 1) {
        std::ostringstream msg;
        msg << "coboundary delta_" << j << " undefined on a complex of dimension " << x.dim();
        throw DimensionError(msg.str());
    }
    const auto& rows = x.faces(j + 1);
    const auto& cols = x.faces(j);

    IncidenceMatrix m;
    m.rows = rows.size();
    m.cols = cols.size();
    m.entries.reserve(rows.size() * static_cast<std::size_t>(j + 2));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Face& coface = rows[r];
        for (std::size_t i = 0; i < coface.size(); ++i) {
            const Face sub = coface.facet(i);
            const auto c = x.index_of(sub);
            // Downward closure guarantees every facet is present.
            if (!c) {
                std::ostringstream msg;
                msg << "complex is not downward closed at " << sub;
                throw Error(msg.str());
            }
            m.entries.push_back({static_cast<std::uint32_t>(r),
                                 static_cast<std::uint32_t>(*c),
                                 (i % 2 == 0) ? 1 : -1});
        }
    }
    std::sort(m.entries.begin(), m.entries.end(),
              [](const IncidenceMatrix::Entry& a, const IncidenceMatrix::Entry& b) {
                  return a.row != b.row ? a.row < b.row : a.col < b.col;
              });
    return m;
}

IncidenceMatrix boundary_matrix(const SimplicialComplex& x, int j) {
    return coboundary_matrix(x, j).transposed();
}

double inner_product(std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size()) {
        throw DimensionError("inner product of cochains of different lengths");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * g[i];
    return sum;
}

long long inner_product(std::span<const long long> f, std::span<const long long> g) {
    if (f.size() != g.size()) {
        throw DimensionError("inner product of cochains of different lengths");
    }
    long long sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * g[i];
    return sum;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](long long v) { return v == 0; });
}

long long IntMatrix::trace() const {
    long long t = 0;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

namespace {

// Entry ranges grouped by a key extractor; assumes `entries` sorted by key.
template <typename Key>
std::vector<std::pair<std::size_t, std::size_t>> group_ranges(
        const std::vector<IncidenceMatrix::Entry>& entries, Key key, std::size_t key_bound) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges(key_bound, {0, 0});
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t begin = i;
        const auto k = key(entries[i]);
        while (i < entries.size() && key(entries[i]) == k) ++i;
        ranges[k] = {begin, i};
    }
    return ranges;
}

} // namespace

IntMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    if (a.cols != b.rows) {
        throw DimensionError("incompatible shapes in incidence product");
    }
    IntMatrix out(a.rows, b.cols);
    const auto b_rows = group_ranges(
        b.entries, [](const IncidenceMatrix::Entry& e) { return e.row; }, b.rows);
    for (const auto& ea : a.entries) {
        const auto [begin, end] = b_rows[ea.col];
        for (std::size_t i = begin; i < end; ++i) {
            const auto& eb = b.entries[i];
            out.at(ea.row, eb.col) += static_cast<long long>(ea.sign) * eb.sign;
        }
    }
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IncidenceMatrix& b) {
    if (a.cols != b.rows) {
        throw DimensionError("incompatible shapes in matrix product");
    }
    IntMatrix out(a.rows, b.cols);
    for (const auto& eb : b.entries) {
        for (std::size_t r = 0; r < a.rows; ++r) {
            out.at(r, eb.col) += a.at(r, eb.row) * eb.sign;
        }
    }
    return out;
}

IntMatrix gram(const IncidenceMatrix& m) {
    IntMatrix out(m.cols, m.cols);
    // entries are sorted by row, so each row's nonzeros are contiguous.
    std::size_t i = 0;
    while (i < m.entries.size()) {
        std::size_t begin = i;
        const auto row = m.entries[i].row;
        while (i < m.entries.size() && m.entries[i].row == row) ++i;
        for (std::size_t p = begin; p < i; ++p) {
            for (std::size_t q = begin; q < i; ++q) {
                out.at(m.entries[p].col, m.entries[q].col) +=
                    static_cast<long long>(m.entries[p].sign) * m.entries[q].sign;
            }
        }
    }
    return out;
}

IntMatrix cogram(const IncidenceMatrix& m) {
    return gram(m.transposed());
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw DimensionError("incompatible shapes in matrix sum");
    }
    IntMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
    return out;
}

} // namespace hodgespec
