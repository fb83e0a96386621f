#include "hodgespec/bounds.hpp"

#include "hodgespec/errors.hpp"
#include "hodgespec/generators.hpp"
#include "hodgespec/invariants.hpp"

#include "doctest.h"

#include <cmath>

using namespace hodgespec;

namespace {

void check_sharp(const BoundReport& r, double i_expect, double chi_expect) {
    CHECK(std::abs(r.i_upper - i_expect) <= 1e-9);
    REQUIRE_FALSE(r.chi_lower_infinite);
    CHECK(std::abs(r.chi_lower - chi_expect) <= 1e-9);
}

BoundReport with_oracles(BoundReport r, const SimplicialComplex& x, int j) {
    r.attach_exact(independence_number(x, j).first, chromatic_number(x, j).first);
    return r;
}

} // namespace

TEST_CASE("Hoffman bound on complete graphs is sharp") {
    const auto k4 = complete_complex(4, 1);
    auto r = with_oracles(hoffman_graph_bound(k4), k4, 1);
    check_sharp(r, 1.0, 4.0);
    CHECK(r.holds == true);
    CHECK(*r.exact_i == 1);
    CHECK(*r.exact_chi == 4);
}

TEST_CASE("Hoffman bound on K_{3,3} is sharp") {
    const auto x = complete_multipartite_graph({3, 3});
    auto r = with_oracles(hoffman_graph_bound(x), x, 1);
    check_sharp(r, 3.0, 2.0);
    CHECK(r.holds == true);
    CHECK(r.inputs.at("lambda_max_0") == doctest::Approx(6.0));
    CHECK(r.inputs.at("k_0") == doctest::Approx(3.0));
}

TEST_CASE("Hoffman bound on C_4") {
    const auto c4 = cycle_graph(4);
    auto r = with_oracles(hoffman_graph_bound(c4), c4, 1);
    check_sharp(r, 2.0, 2.0);
    CHECK(r.holds == true);
}

TEST_CASE("Hoffman bound preconditions") {
    CHECK_THROWS_AS(hoffman_graph_bound(complete_complex(4, 2)), PreconditionError);
    const auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(hoffman_graph_bound(path), PreconditionError);
}

TEST_CASE("main bound on K_6^2") {
    const auto x = complete_complex(6, 2);
    auto r = with_oracles(main_hd_bound(x), x, 2);
    CHECK(r.inputs.at("P") == doctest::Approx(36.0));
    CHECK(r.inputs.at("Q") == doctest::Approx(24.0));
    CHECK(std::abs(r.i_upper - 2.0) <= 1e-9);
    CHECK(r.holds == true);
    CHECK(*r.exact_i == 2);
}

TEST_CASE("main bound is sharp on complete complexes") {
    for (int n = 4; n <= 7; ++n) {
        for (int d = 2; d <= 3 && d < n; ++d) {
            const auto x = complete_complex(n, d);
            const auto r = main_hd_bound(x);
            CHECK(std::abs(r.i_upper - d) <= 1e-9);
            CHECK(independence_number(x, d).first == d);
        }
    }
}

TEST_CASE("main bound reduces to Hoffman at d=1") {
    for (const auto& x : {complete_complex(5, 1), cycle_graph(6),
                          complete_multipartite_graph({4, 4})}) {
        const auto main = main_hd_bound(x);
        const auto hoffman = hoffman_graph_bound(x);
        CHECK(std::abs(main.i_upper - hoffman.i_upper) <=
              1e-12 * std::max(1.0, std::abs(hoffman.i_upper)));
        CHECK(std::abs(main.chi_lower - hoffman.chi_lower) <=
              1e-12 * std::max(1.0, std::abs(hoffman.chi_lower)));
    }
}

TEST_CASE("main bound preconditions") {
    const auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(main_hd_bound(path), PreconditionError);
    const auto point = SimplicialComplex::from_facets(1, {{0}});
    CHECK_THROWS_AS(main_hd_bound(point), DimensionError);
}

TEST_CASE("chi_lower times i_upper recovers n") {
    for (const auto& x : {complete_complex(6, 2), complete_complex(7, 3),
                          crosspolytope_boundary(2)}) {
        const auto r = main_hd_bound(x);
        REQUIRE_FALSE(r.chi_lower_infinite);
        CHECK(std::abs(r.chi_lower * r.i_upper - x.num_vertices()) <= 1e-6);
    }
}

TEST_CASE("local bound matches the main bound on K_4^2") {
    const auto x = complete_complex(4, 2);
    const auto local = local_bound(x);
    const auto main = main_hd_bound(x);
    CHECK(std::abs(local.i_upper - main.i_upper) <= 1e-9);
    CHECK(std::abs(local.chi_lower - main.chi_lower) <= 1e-9);
    CHECK(local.inputs.at("Lambda_1") == doctest::Approx(4.0));
}

TEST_CASE("local bound on two triangles sharing an edge") {
    const auto x = SimplicialComplex::from_facets(4, {{0, 1, 2}, {1, 2, 3}});
    auto r = with_oracles(local_bound(x), x, 2);
    CHECK(r.inputs.at("k_0") == doctest::Approx(2.0));
    CHECK(r.inputs.at("k_1") == doctest::Approx(1.0));
    CHECK(*r.exact_i == 3);
    CHECK(r.holds == true);
    // the literal asymmetric variant is recorded alongside
    CHECK(r.inputs.count("i_upper_literal") == 1);
    CHECK(r.inputs.count("Lambda_literal_1") == 1);
}

TEST_CASE("local bound is sharp on the octahedron") {
    const auto oct = crosspolytope_boundary(2);
    auto r = with_oracles(local_bound(oct), oct, 2);
    CHECK(r.inputs.at("Lambda_1") == doctest::Approx(5.0)); // vertex stars: cone over C_4
    CHECK(std::abs(r.i_upper - 4.0) <= 1e-9);
    CHECK(*r.exact_i == 4);
    CHECK(r.holds == true);
    // the l-face-star maximum undershoots; kept for audit only
    CHECK(r.inputs.at("Lambda_literal_1") == doctest::Approx(4.0));
}

TEST_CASE("local bound preconditions") {
    CHECK_THROWS_AS(local_bound(cycle_graph(4)), PreconditionError);
    const auto impure = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 3}});
    CHECK_THROWS_AS(local_bound(impure), PreconditionError);
}

TEST_CASE("complete-skeleton bound on K_5^2") {
    const auto x = complete_complex(5, 2);
    auto r = with_oracles(complete_skeleton_bound(x), x, 2);
    CHECK(r.inputs.at("lambda_max_1") == doctest::Approx(5.0));
    CHECK(r.inputs.at("k_1") == doctest::Approx(3.0));
    CHECK(std::abs(r.i_upper - 2.0) <= 1e-9);
    CHECK(r.holds == true);
}

TEST_CASE("complete-skeleton bound agrees with the main bound on K_n^d") {
    for (int n = 4; n <= 7; ++n) {
        for (int d = 2; d <= 3 && d < n; ++d) {
            const auto x = complete_complex(n, d);
            CHECK(std::abs(complete_skeleton_bound(x).i_upper - main_hd_bound(x).i_upper) <=
                  1e-9);
        }
    }
}

TEST_CASE("complete-skeleton bound preconditions") {
    // octahedron misses edges, so its 1-skeleton is not complete
    CHECK_THROWS_AS(complete_skeleton_bound(crosspolytope_boundary(2)), PreconditionError);

    // complete skeleton but non-constant top degree: drop one triangle of K_5^2
    std::vector<std::vector<int>> facets;
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) {
            for (int c = b + 1; c < 5; ++c) {
                if (a == 0 && b == 1 && c == 2) continue;
                facets.push_back({a, b, c});
            }
        }
    }
    const auto lopsided = SimplicialComplex::from_facets(5, facets);
    CHECK_THROWS_AS(complete_skeleton_bound(lopsided), PreconditionError);
}

TEST_CASE("proof diagnostics on K_4^2") {
    const auto x = complete_complex(4, 2);
    const auto diag = proof_diagnostics(x, {0, 1});
    CHECK(diag.all_hold);
    // levels j = d-2..0 reduce to j = 0 here: one record per vertex of I
    REQUIRE(diag.records.size() == 2);
    for (const auto& rec : diag.records) {
        CHECK(rec.sum_matches);
        CHECK(rec.covered);
        if (rec.j == 0) {
            CHECK(rec.k_out == 2);
            CHECK(rec.threshold == doctest::Approx(2.0)); // (k_0+1) k_1 / lambda^1 = 4*2/4
            CHECK(rec.margin == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("proof diagnostics edge sandwich is tight on K_{3,3}") {
    const auto x = complete_multipartite_graph({3, 3});
    const auto diag = proof_diagnostics(x, {0, 1, 2});
    CHECK(diag.all_hold);
    CHECK(diag.crossing_edges == 9);
    CHECK(diag.edge_upper == doctest::Approx(9.0));
    CHECK(diag.edge_lower == doctest::Approx(9.0));
    CHECK(diag.records.empty()); // d = 1 has no counting levels
}

TEST_CASE("proof diagnostics with an empty set are vacuous") {
    const auto diag = proof_diagnostics(complete_complex(5, 2), {});
    CHECK(diag.all_hold);
    CHECK(diag.records.empty());
    CHECK(diag.crossing_edges == 0);
}

TEST_CASE("proof diagnostics preconditions") {
    const auto x = complete_complex(4, 2);
    CHECK_THROWS_AS(proof_diagnostics(x, {0, 1, 2}), PreconditionError); // spans a 2-face
    const auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(proof_diagnostics(path, {0}), PreconditionError); // not regular
}

TEST_CASE("disjoint unions behave like the component minimum") {
    // C_3 + C_4, both 2-regular
    std::vector<std::vector<int>> edges = {{0, 1}, {1, 2}, {0, 2},
                                           {3, 4}, {4, 5}, {5, 6}, {3, 6}};
    const auto x = SimplicialComplex::from_facets(7, edges);
    auto r = with_oracles(hoffman_graph_bound(x), x, 1);
    CHECK(r.holds == true);

    const auto c3 = hoffman_graph_bound(cycle_graph(3));
    const auto c4 = hoffman_graph_bound(cycle_graph(4));
    CHECK(r.chi_lower ==
          doctest::Approx(std::min(c3.chi_lower, c4.chi_lower)).epsilon(1e-9));
    CHECK(r.inputs.at("lambda_max_0") ==
          doctest::Approx(std::max(c3.inputs.at("lambda_max_0"),
                                   c4.inputs.at("lambda_max_0"))));
}

TEST_CASE("attach_exact flags violations") {
    BoundReport fake;
    fake.bound_name = "main-hd";
    fake.i_upper = 1.5;
    fake.chi_lower = 3.0;
    fake.attach_exact(2, 3); // exact independence 2 > floor(1.5)
    CHECK(fake.holds == false);
    fake.attach_exact(1, 3);
    CHECK(fake.holds == true);
    fake.attach_exact(1, 2); // exact chromatic below the claimed lower bound
    CHECK(fake.holds == false);

    // a degenerate chi bound (vanishing denominator) never counts as held
    fake.chi_lower_infinite = true;
    fake.attach_exact(1, 100);
    CHECK(fake.holds == false);
}
