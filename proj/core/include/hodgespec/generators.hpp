#pragma once

#include "hodgespec/simplicial_complex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hodgespec {

/// Textual description of a generated complex, e.g. parsed from
/// "random_pure n=8 d=2 p=0.5 seed=42". `build()` validates parameters per
/// kind and constructs the complex.
struct GeneratorSpec {
    std::string kind;
    std::map<std::string, std::string> params;

    /// Parses "kind key=value key=value ...". Throws ParseError.
    static GeneratorSpec parse(const std::string& text);

    std::string to_string() const;
};

SimplicialComplex build(const GeneratorSpec& spec);

/// K_n^d: every subset of {0..n-1} of size at most d+1 is a face.
/// Requires 1 <= d+1 <= n.
SimplicialComplex complete_complex(int n, int d);

/// The cycle graph C_m as a 1-dimensional complex. Requires m >= 3.
SimplicialComplex cycle_graph(int m);

/// Complete multipartite graph with the given part sizes (>= 2 parts, each
/// nonempty); edges join distinct parts. Regular exactly when all parts are
/// equal.
SimplicialComplex complete_multipartite_graph(const std::vector<int>& part_sizes);

/// Boundary of the (d+1)-dimensional cross-polytope: 2(d+1) vertices in
/// antipodal pairs (2i, 2i+1); faces are the subsets of size <= d+1 with no
/// antipodal pair. Regular with k_j = 2(d-j). Requires d >= 1.
SimplicialComplex crosspolytope_boundary(int d);

/// Random pure d-complex: each (d+1)-subset of {0..n-1} is kept independently
/// with probability p (one SplitMix64 draw per subset, subsets in
/// lexicographic order), then the downward closure is taken and ids touching
/// no d-face are dropped. Deterministic per (n, d, p, seed); may come out
/// empty, which callers must check via is_empty().
SimplicialComplex random_pure(int n, int d, double p, std::uint64_t seed);

} // namespace hodgespec
