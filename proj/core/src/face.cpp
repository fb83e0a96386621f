#include "hodgespec/face.hpp"

#include "hodgespec/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace hodgespec {

namespace {

std::vector<int> canonicalize(std::vector<int> verts) {
    if (verts.empty()) {
        throw MalformedFaceError("face must have at least one vertex");
    }
    std::sort(verts.begin(), verts.end());
    if (verts.front() < 0) {
        throw MalformedFaceError("face contains a negative vertex id");
    }
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
        std::ostringstream msg;
        msg << "face contains a duplicate vertex id "
            << *std::adjacent_find(verts.begin(), verts.end());
        throw MalformedFaceError(msg.str());
    }
    return verts;
}

} // namespace

Face::Face(std::vector<int> vertices) : verts_(canonicalize(std::move(vertices))) {}

Face::Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

bool Face::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::contains_all(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

Face Face::facet(std::size_t drop_index) const {
    if (dim() < 1) {
        throw MalformedFaceError("a vertex has no facets");
    }
    Face out;
    out.verts_.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i != drop_index) {
            out.verts_.push_back(verts_[i]);
        }
    }
    return out;
}

Face Face::joined(int v) const {
    if (contains(v)) {
        throw MalformedFaceError("vertex already present in face");
    }
    Face out;
    out.verts_.reserve(verts_.size() + 1);
    auto pos = std::lower_bound(verts_.begin(), verts_.end(), v);
    out.verts_.insert(out.verts_.end(), verts_.begin(), pos);
    out.verts_.push_back(v);
    out.verts_.insert(out.verts_.end(), pos, verts_.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Face& f) {
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) os << ',';
        os << f[i];
    }
    return os << '}';
}

} // namespace hodgespec
