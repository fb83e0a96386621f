#include "hodgespec/invariants.hpp"

#include "hodgespec/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace hodgespec {

namespace {

void require_level(const SimplicialComplex& x, int j) {
    if (j < 1 || j > x.dim()) {
        std::ostringstream msg;
        msg << "independence/coloring level j=" << j
            << " out of range [1," << x.dim() << "]";
        throw DimensionError(msg.str());
    }
}

void require_under_cap(const SimplicialComplex& x, const SearchOptions& opts) {
    const int n = x.num_vertices();
    if (n > opts.vertex_cap) {
        std::ostringstream msg;
        msg << "exact search refused: " << n << " vertices exceed the cap of "
            << opts.vertex_cap << " (raise it with --cap if you really want this)";
        throw SearchCapError(msg.str());
    }
    if (n > 64) {
        throw ParameterError("exact search supports at most 64 vertices");
    }
}

// Bitmask view of the j-faces over the complex's actual vertices.
// Vertices in no j-face ("free") join every independent set and take color 0;
// keeping them out of the search avoids pruning around them.
struct SearchProblem {
    std::vector<int> ids;                    // local index -> vertex id
    std::vector<std::uint64_t> face_masks;   // j-faces over local indices
    std::vector<std::vector<int>> incident;  // local vertex -> face indices
    std::vector<int> active;                 // locals with incident faces
    std::vector<int> free_verts;             // locals with none

    static SearchProblem build(const SimplicialComplex& x, int j) {
        SearchProblem p;
        p.ids = x.vertices();
        std::vector<int> local_of(static_cast<std::size_t>(x.vertex_id_bound()), -1);
        for (std::size_t i = 0; i < p.ids.size(); ++i) {
            local_of[static_cast<std::size_t>(p.ids[i])] = static_cast<int>(i);
        }
        p.incident.assign(p.ids.size(), {});
        for (const Face& f : x.faces(j)) {
            std::uint64_t mask = 0;
            for (int v : f.vertices()) {
                mask |= std::uint64_t{1} << local_of[static_cast<std::size_t>(v)];
            }
            const int face_index = static_cast<int>(p.face_masks.size());
            p.face_masks.push_back(mask);
            for (int v : f.vertices()) {
                p.incident[static_cast<std::size_t>(local_of[static_cast<std::size_t>(v)])]
                    .push_back(face_index);
            }
        }
        for (std::size_t v = 0; v < p.ids.size(); ++v) {
            if (p.incident[v].empty()) {
                p.free_verts.push_back(static_cast<int>(v));
            } else {
                p.active.push_back(static_cast<int>(v));
            }
        }
        return p;
    }
};

// ---- independence: branch and bound ----------------------------------------

struct IndependenceSearch {
    const SearchProblem& p;
    std::vector<int> order; // active locals, most incident faces first
    int best = 0;
    std::uint64_t best_mask = 0;

    explicit IndependenceSearch(const SearchProblem& problem) : p(problem) {
        order = p.active;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return p.incident[static_cast<std::size_t>(a)].size() >
                   p.incident[static_cast<std::size_t>(b)].size();
        });
    }

    bool can_add(int v, std::uint64_t chosen) const {
        const std::uint64_t with_v = chosen | (std::uint64_t{1} << v);
        for (int f : p.incident[static_cast<std::size_t>(v)]) {
            if ((p.face_masks[static_cast<std::size_t>(f)] & ~with_v) == 0) return false;
        }
        return true;
    }

    void seed_greedy() {
        std::uint64_t chosen = 0;
        int count = 0;
        // Least constrained first gives a decent initial lower bound.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (can_add(*it, chosen)) {
                chosen |= std::uint64_t{1} << *it;
                ++count;
            }
        }
        best = count;
        best_mask = chosen;
    }

    void dfs(std::size_t idx, std::uint64_t chosen, int count) {
        if (count > best) {
            best = count;
            best_mask = chosen;
        }
        if (idx >= order.size()) return;
        if (count + static_cast<int>(order.size() - idx) <= best) return; // bound
        const int v = order[idx];
        if (can_add(v, chosen)) {
            dfs(idx + 1, chosen | (std::uint64_t{1} << v), count + 1);
        }
        dfs(idx + 1, chosen, count);
    }
};

// ---- chromatic: iterative deepening backtracking ----------------------------

struct ColoringSearch {
    const SearchProblem& p;
    std::vector<int> order;
    std::vector<int> color; // per local vertex, -1 = unassigned

    explicit ColoringSearch(const SearchProblem& problem) : p(problem) {
        order = p.active;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return p.incident[static_cast<std::size_t>(a)].size() >
                   p.incident[static_cast<std::size_t>(b)].size();
        });
        color.assign(p.ids.size(), -1);
    }

    // Would coloring v with t complete a monochromatic face?
    bool allowed(int v, int t) const {
        for (int f : p.incident[static_cast<std::size_t>(v)]) {
            const std::uint64_t others =
                p.face_masks[static_cast<std::size_t>(f)] & ~(std::uint64_t{1} << v);
            bool all_t = true;
            std::uint64_t rest = others;
            while (rest) {
                const int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (color[static_cast<std::size_t>(w)] != t) {
                    all_t = false;
                    break;
                }
            }
            if (all_t) return false;
        }
        return true;
    }

    bool assign(std::size_t idx, int num_colors, int max_used) {
        if (idx >= order.size()) return true;
        const int v = order[idx];
        const int limit = std::min(num_colors - 1, max_used + 1);
        for (int t = 0; t <= limit; ++t) {
            if (!allowed(v, t)) continue;
            color[static_cast<std::size_t>(v)] = t;
            if (assign(idx + 1, num_colors, std::max(max_used, t))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

} // namespace

bool is_independent(const SimplicialComplex& x, int j, const std::vector<int>& vertex_set) {
    require_level(x, j);
    return x.faces_within(j, vertex_set).empty();
}

std::pair<int, IndependentSetCertificate> independence_number(const SimplicialComplex& x,
                                                              int j,
                                                              const SearchOptions& opts) {
    require_level(x, j);
    require_under_cap(x, opts);
    const SearchProblem p = SearchProblem::build(x, j);

    IndependenceSearch search(p);
    search.seed_greedy();
    search.dfs(0, 0, 0);

    IndependentSetCertificate cert;
    for (std::size_t v = 0; v < p.ids.size(); ++v) {
        if (search.best_mask & (std::uint64_t{1} << v)) {
            cert.vertex_set.push_back(p.ids[v]);
        }
    }
    for (int v : p.free_verts) cert.vertex_set.push_back(p.ids[static_cast<std::size_t>(v)]);
    std::sort(cert.vertex_set.begin(), cert.vertex_set.end());
    cert.size = static_cast<int>(cert.vertex_set.size());
    return {cert.size, cert};
}

std::pair<int, ColoringCertificate> chromatic_number(const SimplicialComplex& x, int j,
                                                     const SearchOptions& opts) {
    require_level(x, j);
    require_under_cap(x, opts);
    const SearchProblem p = SearchProblem::build(x, j);

    ColoringCertificate cert;
    cert.assignment.assign(static_cast<std::size_t>(x.vertex_id_bound()), -1);

    ColoringSearch search(p);
    int chi = 1;
    if (!search.order.empty()) {
        for (;; ++chi) {
            std::fill(search.color.begin(), search.color.end(), -1);
            if (search.assign(0, chi, -1)) break;
        }
    }
    for (std::size_t v = 0; v < p.ids.size(); ++v) {
        const int c = search.color[v];
        cert.assignment[static_cast<std::size_t>(p.ids[v])] = c < 0 ? 0 : c;
    }
    cert.num_colors = chi;
    return {chi, cert};
}

bool verify_certificate(const SimplicialComplex& x, int j,
                        const IndependentSetCertificate& cert) {
    if (static_cast<int>(cert.vertex_set.size()) != cert.size) return false;
    const auto verts = x.vertices();
    for (int v : cert.vertex_set) {
        if (!std::binary_search(verts.begin(), verts.end(), v)) return false;
    }
    return is_independent(x, j, cert.vertex_set);
}

bool verify_certificate(const SimplicialComplex& x, int j, const ColoringCertificate& cert) {
    if (cert.num_colors < 1) return false;
    if (cert.assignment.size() != static_cast<std::size_t>(x.vertex_id_bound())) return false;
    std::vector<bool> used(static_cast<std::size_t>(cert.num_colors), false);
    for (int v : x.vertices()) {
        const int c = cert.assignment[static_cast<std::size_t>(v)];
        if (c < 0 || c >= cert.num_colors) return false;
        used[static_cast<std::size_t>(c)] = true;
    }
    if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return false;
    for (const Face& f : x.faces(j)) {
        const int c0 = cert.assignment[static_cast<std::size_t>(f[0])];
        bool mono = true;
        for (int v : f.vertices()) {
            if (cert.assignment[static_cast<std::size_t>(v)] != c0) {
                mono = false;
                break;
            }
        }
        if (mono) return false;
    }
    return true;
}

CountingReport check_counting_inequalities(const SimplicialComplex& x, int j,
                                           const SearchOptions& opts) {
    require_level(x, j);
    CountingReport report;
    report.j = j;
    report.n = x.num_vertices();
    report.independence = independence_number(x, j, opts).first;
    report.chromatic = chromatic_number(x, j, opts).first;
    report.product_holds =
        static_cast<long long>(report.independence) * report.chromatic >= report.n;

    const int d = x.dim();
    report.chi_1 = (j == 1) ? report.chromatic : chromatic_number(x, 1, opts).first;
    report.chi_d = (j == d) ? report.chromatic : chromatic_number(x, d, opts).first;
    report.lemma_holds = report.chi_d <= (report.chi_1 + d - 1) / d;
    return report;
}

} // namespace hodgespec
