#include "hodgespec/invariants.hpp"

#include "hodgespec/errors.hpp"
#include "hodgespec/generators.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>

using namespace hodgespec;

TEST_CASE("is_independent on K_4^2") {
    const auto x = complete_complex(4, 2);
    CHECK(is_independent(x, 2, {0, 1}));
    CHECK_FALSE(is_independent(x, 2, {0, 1, 2}));
    CHECK_FALSE(is_independent(x, 1, {0, 1}));
    CHECK(is_independent(x, 1, {0}));
    CHECK(is_independent(x, 2, {}));
    CHECK_THROWS_AS(is_independent(x, 3, {0}), DimensionError);
    CHECK_THROWS_AS(is_independent(x, 0, {0}), DimensionError);
}

TEST_CASE("independence number of complete complexes is d") {
    for (int n = 3; n <= 8; ++n) {
        for (int d = 2; d <= 3 && d < n; ++d) {
            const auto [value, cert] = independence_number(complete_complex(n, d), d);
            CHECK(value == d);
            CHECK(cert.size == d);
        }
    }
}

TEST_CASE("independence numbers of small graphs") {
    CHECK(independence_number(cycle_graph(5), 1).first == 2);
    CHECK(independence_number(complete_multipartite_graph({3, 3}), 1).first == 3);
    CHECK(independence_number(complete_complex(6, 1), 1).first == 1);
}

TEST_CASE("chromatic numbers of small graphs") {
    CHECK(chromatic_number(cycle_graph(5), 1).first == 3);
    CHECK(chromatic_number(cycle_graph(6), 1).first == 2);
    CHECK(chromatic_number(complete_multipartite_graph({3, 3}), 1).first == 2);
    CHECK(chromatic_number(complete_complex(7, 1), 1).first == 7);
}

TEST_CASE("top chromatic number of K_n^d is ceil(n/d)") {
    for (int n = 3; n <= 8; ++n) {
        for (int d = 2; d <= 3 && d < n; ++d) {
            CHECK(chromatic_number(complete_complex(n, d), d).first == (n + d - 1) / d);
        }
    }
}

TEST_CASE("search results match the brute-force oracles") {
    std::vector<SimplicialComplex> samples = {
        complete_complex(5, 2),  complete_complex(6, 2), complete_complex(6, 3),
        crosspolytope_boundary(2), cycle_graph(7),
    };
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6}) {
        samples.push_back(random_pure(8, 2, 0.45, seed));
    }
    for (const auto& x : samples) {
        if (x.is_empty()) continue;
        for (int j = 1; j <= x.dim(); ++j) {
            CAPTURE(j);
            CHECK(independence_number(x, j).first == testoracle::brute_independence(x, j));
            CHECK(chromatic_number(x, j).first == testoracle::brute_chromatic(x, j));
        }
    }
}

TEST_CASE("certificates are re-verifiable") {
    for (const auto& x : {complete_complex(6, 2), crosspolytope_boundary(2),
                          random_pure(9, 2, 0.4, 9)}) {
        for (int j = 1; j <= x.dim(); ++j) {
            const auto [i_val, i_cert] = independence_number(x, j);
            CHECK(verify_certificate(x, j, i_cert));
            CHECK(i_cert.size == i_val);
            const auto [chi_val, chi_cert] = chromatic_number(x, j);
            CHECK(verify_certificate(x, j, chi_cert));
            CHECK(chi_cert.num_colors == chi_val);
        }
    }
}

TEST_CASE("tampered certificates fail verification") {
    const auto x = complete_complex(5, 2);
    auto [i_val, i_cert] = independence_number(x, 2);
    i_cert.vertex_set = {0, 1, 2}; // spans a 2-face
    i_cert.size = 3;
    CHECK_FALSE(verify_certificate(x, 2, i_cert));

    auto [chi_val, chi_cert] = chromatic_number(x, 2);
    std::fill(chi_cert.assignment.begin(), chi_cert.assignment.end(), 0);
    CHECK_FALSE(verify_certificate(x, 2, chi_cert));
}

TEST_CASE("monotonicity across independence levels") {
    for (const auto& x : {complete_complex(6, 3), complete_complex(7, 3),
                          random_pure(9, 2, 0.5, 21)}) {
        std::vector<int> i_vals, chi_vals;
        for (int j = 1; j <= x.dim(); ++j) {
            i_vals.push_back(independence_number(x, j).first);
            chi_vals.push_back(chromatic_number(x, j).first);
        }
        for (std::size_t j = 0; j + 1 < i_vals.size(); ++j) {
            CHECK(i_vals[j] <= i_vals[j + 1]);
            CHECK(chi_vals[j + 1] <= chi_vals[j]);
        }
    }
}

TEST_CASE("independence is at least j") {
    for (const auto& x : {complete_complex(6, 3), crosspolytope_boundary(3)}) {
        for (int j = 1; j <= x.dim(); ++j) {
            CHECK(independence_number(x, j).first >= j);
        }
    }
}

TEST_CASE("counting inequalities on K_6^2") {
    const auto x = complete_complex(6, 2);
    const auto report = check_counting_inequalities(x, 2);
    CHECK(report.n == 6);
    CHECK(report.independence == 2);
    CHECK(report.chromatic == 3);
    CHECK(report.product_holds); // 6 <= 2*3, with equality
    CHECK(report.chi_1 == 6);
    CHECK(report.chi_d == 3);
    CHECK(report.lemma_holds); // 3 <= ceil(6/2)
}

TEST_CASE("counting inequalities on C_5") {
    const auto report = check_counting_inequalities(cycle_graph(5), 1);
    CHECK(report.independence == 2);
    CHECK(report.chromatic == 3);
    CHECK(report.product_holds); // 5 <= 6
    CHECK(report.lemma_holds);
}

TEST_CASE("vertices outside every face still get counted and colored") {
    // two ids never touch a face of any positive dimension
    const auto x = SimplicialComplex::from_facets(5, {{0, 1, 2}});
    const auto [i_val, i_cert] = independence_number(x, 1);
    CHECK(i_val == 3); // one triangle vertex plus the two isolated ids
    CHECK(verify_certificate(x, 1, i_cert));
    const auto [chi_val, chi_cert] = chromatic_number(x, 1);
    CHECK(chi_val == 3);
    CHECK(verify_certificate(x, 1, chi_cert));
    CHECK(chi_cert.assignment[3] == 0);
    CHECK(chi_cert.assignment[4] == 0);
}

TEST_CASE("search cap is enforced and adjustable") {
    std::vector<std::vector<int>> path_edges;
    for (int v = 0; v + 1 < 26; ++v) path_edges.push_back({v, v + 1});
    const auto path = SimplicialComplex::from_facets(26, path_edges);
    CHECK_THROWS_AS(independence_number(path, 1), SearchCapError);
    CHECK_THROWS_AS(chromatic_number(path, 1), SearchCapError);
    CHECK_THROWS_WITH_AS(independence_number(path, 1), doctest::Contains("--cap"),
                         SearchCapError);

    SearchOptions raised;
    raised.vertex_cap = 32;
    CHECK(independence_number(path, 1, raised).first == 13);
    CHECK(chromatic_number(path, 1, raised).first == 2);
}
