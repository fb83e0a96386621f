#pragma once

// Test-side oracles, deliberately independent of the search code they check:
// independence by full subset enumeration, chromatic number by enumerating
// set partitions as restricted growth strings. Desk scale only.

#include "hodgespec/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace testoracle {

struct MaskProblem {
    int n = 0;
    std::vector<std::uint32_t> faces; // j-faces as masks over local vertex indices

    static MaskProblem build(const hodgespec::SimplicialComplex& x, int j) {
        MaskProblem p;
        const auto ids = x.vertices();
        p.n = static_cast<int>(ids.size());
        if (p.n > 20) throw std::runtime_error("brute-force oracle capped at 20 vertices");
        std::vector<int> local(static_cast<std::size_t>(x.vertex_id_bound()), -1);
        for (int i = 0; i < p.n; ++i) local[static_cast<std::size_t>(ids[i])] = i;
        for (const auto& f : x.faces(j)) {
            std::uint32_t mask = 0;
            for (int v : f.vertices()) {
                mask |= 1u << local[static_cast<std::size_t>(v)];
            }
            p.faces.push_back(mask);
        }
        return p;
    }
};

inline int brute_independence(const hodgespec::SimplicialComplex& x, int j) {
    const MaskProblem p = MaskProblem::build(x, j);
    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << p.n); ++subset) {
        bool ok = true;
        for (std::uint32_t face : p.faces) {
            if ((face & ~subset) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<int>(std::popcount(subset)));
    }
    return best;
}

namespace detail {

inline bool rgs_search(const MaskProblem& p, std::vector<int>& color, int idx, int used,
                       int limit) {
    if (idx == p.n) return true;
    const int open_limit = std::min(limit - 1, used); // may open exactly one new color
    for (int c = 0; c <= open_limit; ++c) {
        color[static_cast<std::size_t>(idx)] = c;
        bool ok = true;
        for (std::uint32_t face : p.faces) {
            // only faces fully assigned up to idx can be monochromatic already
            if ((face & ~((1u << (idx + 1)) - 1)) != 0) continue;
            if ((face & (1u << idx)) == 0) continue;
            bool mono = true;
            std::uint32_t rest = face;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (color[static_cast<std::size_t>(v)] != c) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok && rgs_search(p, color, idx + 1, std::max(used, c + 1), limit)) return true;
        color[static_cast<std::size_t>(idx)] = -1;
    }
    return false;
}

} // namespace detail

inline int brute_chromatic(const hodgespec::SimplicialComplex& x, int j) {
    const MaskProblem p = MaskProblem::build(x, j);
    if (p.n == 0) return 1;
    std::vector<int> color(static_cast<std::size_t>(p.n), -1);
    for (int limit = 1; limit <= p.n; ++limit) {
        std::fill(color.begin(), color.end(), -1);
        if (detail::rgs_search(p, color, 0, 0, limit)) return limit;
    }
    return p.n;
}

} // namespace testoracle
