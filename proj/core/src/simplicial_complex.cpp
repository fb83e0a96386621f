#include "hodgespec/simplicial_complex.hpp"

#include "hodgespec/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodgespec {

namespace {

// Facet sizes beyond this would make the per-facet subset enumeration blow up.
constexpr std::size_t kMaxFacetSize = 20;

std::vector<std::vector<Face>> levels_from_set(const std::set<Face>& all_faces) {
    int dim = -1;
    for (const Face& f : all_faces) dim = std::max(dim, f.dim());
    std::vector<std::vector<Face>> levels(static_cast<std::size_t>(dim + 1));
    for (const Face& f : all_faces) {
        levels[static_cast<std::size_t>(f.dim())].push_back(f);
    }
    // std::set iterates in lexicographic Face order, so each level is sorted.
    return levels;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(int n_vertices,
                                                 const std::vector<std::vector<int>>& facets,
                                                 bool include_isolated) {
    if (n_vertices < 0) {
        throw ParameterError("n_vertices must be non-negative");
    }
    if (facets.empty()) {
        return SimplicialComplex(n_vertices, {});
    }

    std::set<Face> all_faces;
    for (const auto& raw : facets) {
        Face facet(raw); // validates: nonempty, no duplicates, ids >= 0
        if (facet.vertices().back() >= n_vertices) {
            std::ostringstream msg;
            msg << "facet vertex id " << facet.vertices().back()
                << " is outside the id space [0," << n_vertices << ")";
            throw ParameterError(msg.str());
        }
        if (facet.size() > kMaxFacetSize) {
            throw ParameterError("facet too large for closure construction");
        }
        // Insert every nonempty subset of the facet.
        const auto& vs = facet.vertices();
        const std::size_t s = vs.size();
        for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < s; ++i) {
                if (mask & (1u << i)) subset.push_back(vs[i]);
            }
            all_faces.insert(Face(std::move(subset)));
        }
    }
    if (include_isolated) {
        for (int v = 0; v < n_vertices; ++v) {
            all_faces.insert(Face{v});
        }
    }
    return SimplicialComplex(n_vertices, levels_from_set(all_faces));
}

SimplicialComplex SimplicialComplex::from_faces_unvalidated(
        int n_vertices, const std::vector<std::vector<int>>& faces) {
    std::set<Face> all_faces;
    for (const auto& raw : faces) {
        all_faces.insert(Face(raw));
    }
    return SimplicialComplex(n_vertices, levels_from_set(all_faces));
}

int SimplicialComplex::num_vertices() const {
    return is_empty() ? 0 : static_cast<int>(faces_by_dim_[0].size());
}

std::vector<int> SimplicialComplex::vertices() const {
    std::vector<int> out;
    if (is_empty()) return out;
    out.reserve(faces_by_dim_[0].size());
    for (const Face& f : faces_by_dim_[0]) out.push_back(f[0]);
    return out;
}

std::size_t SimplicialComplex::face_count(int j) const {
    if (j < 0 || j > dim()) return 0;
    return faces_by_dim_[static_cast<std::size_t>(j)].size();
}

std::size_t SimplicialComplex::total_face_count() const {
    std::size_t total = 0;
    for (const auto& level : faces_by_dim_) total += level.size();
    return total;
}

const std::vector<Face>& SimplicialComplex::faces(int j) const {
    if (j < 0 || j > dim()) {
        std::ostringstream msg;
        msg << "no faces of dimension " << j << " in a complex of dimension " << dim();
        throw DimensionError(msg.str());
    }
    return faces_by_dim_[static_cast<std::size_t>(j)];
}

bool SimplicialComplex::contains(const Face& f) const {
    return index_of(f).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
    if (f.dim() < 0 || f.dim() > dim()) return std::nullopt;
    const auto& level = faces_by_dim_[static_cast<std::size_t>(f.dim())];
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

int SimplicialComplex::degree(const Face& f) const {
    if (!contains(f)) {
        std::ostringstream msg;
        msg << "face " << f << " is not part of the complex";
        throw UnknownFaceError(msg.str());
    }
    if (f.dim() + 1 > dim()) return 0;
    int count = 0;
    for (int v = 0; v < vertex_id_bound_; ++v) {
        if (!f.contains(v) && contains(f.joined(v))) ++count;
    }
    return count;
}

SimplicialComplex SimplicialComplex::star(const Face& f) const {
    if (!contains(f)) {
        std::ostringstream msg;
        msg << "face " << f << " is not part of the complex";
        throw UnknownFaceError(msg.str());
    }
    // The closed star is the downward closure of the faces containing f.
    std::vector<std::vector<int>> cofaces;
    for (int j = f.dim(); j <= dim(); ++j) {
        for (const Face& g : faces_by_dim_[static_cast<std::size_t>(j)]) {
            if (g.contains_all(f)) cofaces.push_back(g.vertices());
        }
    }
    return from_facets(vertex_id_bound_, cofaces, /*include_isolated=*/false);
}

std::vector<Face> SimplicialComplex::faces_within(int j, const std::vector<int>& vertex_set) const {
    if (j < 0 || j > dim()) {
        std::ostringstream msg;
        msg << "dimension " << j << " out of range for a complex of dimension " << dim();
        throw DimensionError(msg.str());
    }
    std::vector<int> sorted(vertex_set);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Face> out;
    for (const Face& f : faces_by_dim_[static_cast<std::size_t>(j)]) {
        bool inside = true;
        for (int v : f.vertices()) {
            if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(f);
    }
    return out;
}

std::vector<Face> SimplicialComplex::cofaces_into(const Face& f,
                                                  const std::vector<int>& vertex_set) const {
    if (!contains(f)) {
        std::ostringstream msg;
        msg << "face " << f << " is not part of the complex";
        throw UnknownFaceError(msg.str());
    }
    std::vector<int> sorted(vertex_set);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Face> out;
    for (int v : sorted) {
        if (f.contains(v)) continue;
        Face candidate = f.joined(v);
        if (contains(candidate)) out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RegularityProfile SimplicialComplex::regularity_profile() const {
    if (is_empty()) {
        throw DimensionError("regularity profile of the empty complex is undefined");
    }
    const int d = dim();
    RegularityProfile profile;
    profile.degrees_min.assign(static_cast<std::size_t>(d), 0);
    profile.degrees_max.assign(static_cast<std::size_t>(d), 0);

    for (int j = 0; j < d; ++j) {
        int lo = -1, hi = -1;
        for (const Face& f : faces_by_dim_[static_cast<std::size_t>(j)]) {
            const int deg = degree(f);
            if (lo < 0 || deg < lo) lo = deg;
            if (deg > hi) hi = deg;
        }
        profile.degrees_min[static_cast<std::size_t>(j)] = std::max(lo, 0);
        profile.degrees_max[static_cast<std::size_t>(j)] = std::max(hi, 0);
    }

    profile.is_pure = true;
    const auto& top = faces_by_dim_[static_cast<std::size_t>(d)];
    for (int j = 0; j < d && profile.is_pure; ++j) {
        for (const Face& f : faces_by_dim_[static_cast<std::size_t>(j)]) {
            bool covered = false;
            for (const Face& t : top) {
                if (t.contains_all(f)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                profile.is_pure = false;
                break;
            }
        }
    }

    // Degree sequences only exist below dimension 1, so 0-dimensional
    // complexes are never classified regular.
    profile.is_regular = d >= 1;
    for (int j = 0; j < d; ++j) {
        if (profile.degrees_min[static_cast<std::size_t>(j)] !=
                profile.degrees_max[static_cast<std::size_t>(j)] ||
            profile.degrees_min[static_cast<std::size_t>(j)] < 1) {
            profile.is_regular = false;
        }
    }
    return profile;
}

std::vector<std::string> SimplicialComplex::validate() const {
    std::vector<std::string> violations;
    for (int j = 0; j <= dim(); ++j) {
        for (const Face& f : faces_by_dim_[static_cast<std::size_t>(j)]) {
            if (f.dim() != j) {
                std::ostringstream msg;
                msg << "face " << f << " stored at dimension " << j;
                violations.push_back(msg.str());
            }
            if (f.vertices().back() >= vertex_id_bound_) {
                std::ostringstream msg;
                msg << "face " << f << " uses a vertex id outside [0," << vertex_id_bound_ << ")";
                violations.push_back(msg.str());
            }
            if (j >= 1) {
                for (std::size_t i = 0; i < f.size(); ++i) {
                    Face sub = f.facet(i);
                    if (!contains(sub)) {
                        std::ostringstream msg;
                        msg << "downward closure violated: face " << f
                            << " present but its subface " << sub << " is missing";
                        violations.push_back(msg.str());
                    }
                }
            }
        }
    }
    return violations;
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (int j = 0; j <= dim(); ++j) {
        for (const Face& f : faces_by_dim_[static_cast<std::size_t>(j)]) {
            if (j == dim() || degree(f) == 0) out.push_back(f);
        }
    }
    return out;
}

} // namespace hodgespec
