#include "hodgespec/generators.hpp"

#include "hodgespec/combinatorics.hpp"
#include "hodgespec/errors.hpp"
#include "hodgespec/prng.hpp"

#include <numeric>
#include <sstream>

namespace hodgespec {

namespace {

std::vector<int> iota_vector(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

int require_int(const GeneratorSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        throw ParameterError("generator '" + spec.kind + "' is missing parameter '" + key + "'");
    }
    try {
        std::size_t pos = 0;
        const int value = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return value;
    } catch (const std::exception&) {
        throw ParameterError("parameter '" + key + "' of generator '" + spec.kind +
                             "' is not an integer: " + it->second);
    }
}

double require_double(const GeneratorSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        throw ParameterError("generator '" + spec.kind + "' is missing parameter '" + key + "'");
    }
    try {
        std::size_t pos = 0;
        const double value = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return value;
    } catch (const std::exception&) {
        throw ParameterError("parameter '" + key + "' of generator '" + spec.kind +
                             "' is not a number: " + it->second);
    }
}

std::uint64_t require_u64(const GeneratorSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        throw ParameterError("generator '" + spec.kind + "' is missing parameter '" + key + "'");
    }
    try {
        std::size_t pos = 0;
        const std::uint64_t value = std::stoull(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return value;
    } catch (const std::exception&) {
        throw ParameterError("parameter '" + key + "' of generator '" + spec.kind +
                             "' is not an unsigned integer: " + it->second);
    }
}

std::vector<int> require_int_list(const GeneratorSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        throw ParameterError("generator '" + spec.kind + "' is missing parameter '" + key + "'");
    }
    std::vector<int> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParameterError("parameter '" + key + "' of generator '" + spec.kind +
                                 "' is not a comma-separated integer list: " + it->second);
        }
    }
    if (out.empty()) {
        throw ParameterError("parameter '" + key + "' of generator '" + spec.kind +
                             "' is empty");
    }
    return out;
}

} // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    std::istringstream ss(text);
    GeneratorSpec spec;
    if (!(ss >> spec.kind)) {
        throw ParseError("empty generator spec");
    }
    std::string token;
    while (ss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size()) {
            throw ParseError("generator parameter '" + token + "' is not of the form key=value");
        }
        spec.params[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::ostringstream out;
    out << kind;
    for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
    return out.str();
}

SimplicialComplex build(const GeneratorSpec& spec) {
    if (spec.kind == "complete_complex") {
        return complete_complex(require_int(spec, "n"), require_int(spec, "d"));
    }
    if (spec.kind == "cycle_graph") {
        return cycle_graph(require_int(spec, "m"));
    }
    if (spec.kind == "complete_multipartite") {
        return complete_multipartite_graph(require_int_list(spec, "parts"));
    }
    if (spec.kind == "crosspolytope_boundary") {
        return crosspolytope_boundary(require_int(spec, "d"));
    }
    if (spec.kind == "random_pure") {
        return random_pure(require_int(spec, "n"), require_int(spec, "d"),
                           require_double(spec, "p"), require_u64(spec, "seed"));
    }
    throw ParameterError("unknown generator kind '" + spec.kind + "'");
}

SimplicialComplex complete_complex(int n, int d) {
    if (d < 0 || d + 1 > n) {
        std::ostringstream msg;
        msg << "complete_complex requires 1 <= d+1 <= n, got n=" << n << " d=" << d;
        throw ParameterError(msg.str());
    }
    return SimplicialComplex::from_facets(n, combinations(iota_vector(n), d + 1));
}

SimplicialComplex cycle_graph(int m) {
    if (m < 3) {
        throw ParameterError("cycle_graph requires m >= 3");
    }
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        edges.push_back({i, (i + 1) % m});
    }
    return SimplicialComplex::from_facets(m, edges);
}

SimplicialComplex complete_multipartite_graph(const std::vector<int>& part_sizes) {
    if (part_sizes.size() < 2) {
        throw ParameterError("complete_multipartite requires at least 2 parts");
    }
    for (int s : part_sizes) {
        if (s < 1) throw ParameterError("complete_multipartite parts must be nonempty");
    }
    std::vector<int> part_of;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    std::vector<std::vector<int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) edges.push_back({u, v});
        }
    }
    return SimplicialComplex::from_facets(n, edges);
}

SimplicialComplex crosspolytope_boundary(int d) {
    if (d < 1) {
        throw ParameterError("crosspolytope_boundary requires d >= 1");
    }
    const int n = 2 * (d + 1);
    // Top faces: one vertex from each antipodal pair (2i, 2i+1).
    std::vector<std::vector<int>> facets;
    const int pairs = d + 1;
    for (std::uint32_t choice = 0; choice < (1u << pairs); ++choice) {
        std::vector<int> facet;
        facet.reserve(static_cast<std::size_t>(pairs));
        for (int i = 0; i < pairs; ++i) {
            facet.push_back(2 * i + ((choice >> i) & 1u));
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex random_pure(int n, int d, double p, std::uint64_t seed) {
    if (d < 0 || d + 1 > n) {
        std::ostringstream msg;
        msg << "random_pure requires n >= d+1, got n=" << n << " d=" << d;
        throw ParameterError(msg.str());
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw ParameterError("random_pure requires 0 < p <= 1");
    }
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> facets;
    for (auto& subset : combinations(iota_vector(n), d + 1)) {
        // One draw per subset, kept or not, so the stream is reproducible.
        const double u = rng.next_double();
        if (u < p) facets.push_back(std::move(subset));
    }
    // Closure of (d+1)-subsets is pure by construction; dropping isolated ids
    // is the purification step.
    return SimplicialComplex::from_facets(n, facets, /*include_isolated=*/false);
}

} // namespace hodgespec
