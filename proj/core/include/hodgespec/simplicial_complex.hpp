#pragma once

#include "hodgespec/face.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodgespec {

/// Per-dimension degree statistics plus the purity/regularity classification.
///
/// degrees_min[j] / degrees_max[j] hold the extreme degrees over all j-faces,
/// j = 0..dim-1. A complex is regular when min == max >= 1 on every level
/// below the top; regularity implies purity and strictly decreasing k_j.
struct RegularityProfile {
    bool is_pure = false;
    bool is_regular = false;
    std::vector<int> degrees_min;
    std::vector<int> degrees_max;
};

/// A finite abstract simplicial complex: a family of faces over integer
/// vertex ids, closed under taking subsets, indexed by dimension.
///
/// Immutable after construction; every query is read-only and safe to call
/// concurrently. Each dimension level is kept sorted lexicographically, which
/// doubles as the canonical cochain basis order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given facets over the id space {0..n_vertices-1}.
    ///
    /// With include_isolated (the default) every id in the space becomes a
    /// 0-face even when it appears in no facet; star() and random_pure() turn
    /// it off so unused ids stay out of the face set. An empty facet list
    /// yields the empty complex (dim() == -1, is_empty() true).
    static SimplicialComplex from_facets(int n_vertices,
                                         const std::vector<std::vector<int>>& facets,
                                         bool include_isolated = true);

    /// Takes the listed faces verbatim, with no closure and no validation of
    /// the downward-closure invariant. Exists so integrity checkers can ingest
    /// (and then flag) broken face lists; everything else should use
    /// from_facets.
    static SimplicialComplex from_faces_unvalidated(int n_vertices,
                                                    const std::vector<std::vector<int>>& faces);

    /// Largest dimension with a nonempty face set; -1 for the empty complex.
    int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }
    bool is_empty() const { return faces_by_dim_.empty(); }

    /// Size of the vertex id space (ids run below this bound).
    int vertex_id_bound() const { return vertex_id_bound_; }

    /// Number of actual vertices, i.e. |X^0|.
    int num_vertices() const;

    /// Vertex ids of the 0-faces, ascending.
    std::vector<int> vertices() const;

    std::size_t face_count(int j) const;
    std::size_t total_face_count() const;

    /// All j-faces in canonical (lexicographic) order. Requires 0 <= j <= dim().
    const std::vector<Face>& faces(int j) const;

    bool contains(const Face& f) const;

    /// Position of `f` within faces(f.dim()), i.e. its cochain basis index.
    std::optional<std::size_t> index_of(const Face& f) const;

    /// Number of (j+1)-faces containing the j-face `f`.
    /// Throws UnknownFaceError when f is not part of the complex.
    int degree(const Face& f) const;

    /// The closed star of `f`: every face G such that some face of the
    /// complex contains both G and f. Returned on the same vertex id space;
    /// ids outside the star carry no 0-face.
    SimplicialComplex star(const Face& f) const;

    /// All j-faces whose vertices all lie in `vertex_set`.
    /// Requires j <= dim(); an empty result is fine.
    std::vector<Face> faces_within(int j, const std::vector<int>& vertex_set) const;

    /// The cofaces f + {v} that are faces of the complex, over v in `vertex_set`.
    std::vector<Face> cofaces_into(const Face& f, const std::vector<int>& vertex_set) const;

    /// Degree statistics and the purity/regularity classification.
    /// Requires a nonempty complex.
    RegularityProfile regularity_profile() const;

    /// Exhaustive downward-closure and id-range audit; returns human-readable
    /// violations (empty means valid). from_facets output always passes; this
    /// exists for verbatim-ingested face lists.
    std::vector<std::string> validate() const;

    /// The maximal faces.
    std::vector<Face> facets() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex(int vertex_id_bound, std::vector<std::vector<Face>> faces_by_dim)
        : vertex_id_bound_(vertex_id_bound), faces_by_dim_(std::move(faces_by_dim)) {}

    int vertex_id_bound_ = 0;
    std::vector<std::vector<Face>> faces_by_dim_;
};

} // namespace hodgespec
