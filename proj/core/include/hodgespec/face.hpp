#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace hodgespec {

/// A face of an abstract simplicial complex: a nonempty set of vertex ids,
/// stored as a strictly increasing sequence. The ascending order is the
/// canonical orientation; all incidence signs are derived from it.
class Face {
public:
    Face() = default;

    /// Canonicalizes (sorts) the given vertices.
    /// Throws MalformedFaceError on an empty set, a negative id, or a duplicate.
    explicit Face(std::vector<int> vertices);
    Face(std::initializer_list<int> vertices);

    /// Cardinality minus one.
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }

    const std::vector<int>& vertices() const { return verts_; }
    int operator[](std::size_t i) const { return verts_[i]; }

    bool contains(int v) const;
    bool contains_all(const Face& other) const;

    /// The facet obtained by deleting the vertex at `drop_index` (0-based,
    /// ascending order). Requires dim() >= 1.
    Face facet(std::size_t drop_index) const;

    /// The coface obtained by inserting vertex `v` (which must be absent).
    Face joined(int v) const;

    /// Lexicographic order on the vertex sequence; this is the canonical
    /// basis order within each dimension.
    auto operator<=>(const Face&) const = default;

private:
    std::vector<int> verts_;
};

std::ostream& operator<<(std::ostream& os, const Face& f);

} // namespace hodgespec
