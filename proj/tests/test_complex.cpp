#include "hodgespec/simplicial_complex.hpp"

#include "hodgespec/errors.hpp"
#include "hodgespec/generators.hpp"

#include "doctest.h"

#include <algorithm>

using namespace hodgespec;

TEST_CASE("face canonicalization and invariants") {
    const Face f({2, 0, 1});
    CHECK(f.vertices() == std::vector<int>{0, 1, 2});
    CHECK(f.dim() == 2);
    CHECK(f.contains(1));
    CHECK_FALSE(f.contains(3));
    CHECK(f.facet(0) == Face{1, 2});
    CHECK(f.facet(2) == Face{0, 1});
    CHECK(f.joined(5) == Face{0, 1, 2, 5});

    CHECK_THROWS_AS(Face({1, 1}), MalformedFaceError);
    CHECK_THROWS_AS(Face(std::vector<int>{}), MalformedFaceError);
    CHECK_THROWS_AS(Face({-1, 0}), MalformedFaceError);
    CHECK_THROWS_AS(f.joined(2), MalformedFaceError);
}

TEST_CASE("closure of a single triangle") {
    const auto x = SimplicialComplex::from_facets(3, {{0, 1, 2}});
    CHECK(x.dim() == 2);
    CHECK(x.total_face_count() == 7);
    CHECK(x.face_count(0) == 3);
    CHECK(x.face_count(1) == 3);
    CHECK(x.face_count(2) == 1);
    CHECK(x.contains(Face{0, 2}));
    CHECK_FALSE(x.contains(Face{0, 1, 2, 3}));
    CHECK(x.degree(Face{0}) == 2);
    CHECK(x.validate().empty());
}

TEST_CASE("two disjoint edges") {
    const auto x = SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}});
    CHECK(x.dim() == 1);
    CHECK(x.face_count(0) == 4);
    CHECK(x.face_count(1) == 2);
}

TEST_CASE("K_4^2 has 14 faces") {
    const auto x = complete_complex(4, 2);
    CHECK(x.face_count(0) == 4);
    CHECK(x.face_count(1) == 6);
    CHECK(x.face_count(2) == 4);
    CHECK(x.total_face_count() == 14);
}

TEST_CASE("from_facets rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0, 0, 1}}), MalformedFaceError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{0, 3}}), ParameterError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{}}), MalformedFaceError);
}

TEST_CASE("empty facet list gives the flagged empty complex") {
    const auto x = SimplicialComplex::from_facets(5, {});
    CHECK(x.is_empty());
    CHECK(x.dim() == -1);
    CHECK(x.num_vertices() == 0);
    CHECK(x.vertex_id_bound() == 5);
}

TEST_CASE("isolated ids become vertices unless excluded") {
    const auto with = SimplicialComplex::from_facets(4, {{0, 1}});
    CHECK(with.num_vertices() == 4);
    const auto without = SimplicialComplex::from_facets(4, {{0, 1}}, false);
    CHECK(without.num_vertices() == 2);
    CHECK(without.vertex_id_bound() == 4);
}

TEST_CASE("degree counts cofaces") {
    const auto k42 = complete_complex(4, 2);
    CHECK(k42.degree(Face{0, 1}) == 2);
    CHECK(k42.degree(Face{2}) == 3);
    CHECK_THROWS_AS(k42.degree(Face{0, 1, 2, 3}), UnknownFaceError);

    // top faces of K_n^d have degree n-d at dimension d-1
    for (int n = 4; n <= 7; ++n) {
        for (int d = 1; d <= 3; ++d) {
            if (d + 1 > n) continue;
            const auto x = complete_complex(n, d);
            for (const Face& f : x.faces(d - 1)) {
                CHECK(x.degree(f) == n - d);
            }
        }
    }
}

TEST_CASE("degree equals coface count into the full vertex set") {
    for (const auto& x : {complete_complex(5, 2), crosspolytope_boundary(2),
                          random_pure(7, 2, 0.6, 11)}) {
        std::vector<int> all(static_cast<std::size_t>(x.vertex_id_bound()));
        for (int v = 0; v < x.vertex_id_bound(); ++v) all[static_cast<std::size_t>(v)] = v;
        for (int j = 0; j <= x.dim(); ++j) {
            for (const Face& f : x.faces(j)) {
                CHECK(x.degree(f) ==
                      static_cast<int>(x.cofaces_into(f, all).size()));
            }
        }
    }
}

TEST_CASE("star of a path vertex") {
    const auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    const auto st = path.star(Face{1});
    CHECK(st.num_vertices() == 3);
    CHECK(st.face_count(1) == 2);
    CHECK(st.contains(Face{0, 1}));
    CHECK(st.contains(Face{1, 2}));

    const auto end = path.star(Face{0});
    CHECK(end.num_vertices() == 2);
    CHECK(end.face_count(1) == 1);
}

TEST_CASE("star follows the common-coface definition") {
    // In K_4^2 the star of an edge is the closure of the two triangles on it;
    // the opposite edge would need the non-face {0,1,2,3} as a witness.
    const auto k42 = complete_complex(4, 2);
    const auto st = k42.star(Face{0, 1});
    CHECK(st.num_vertices() == 4);
    CHECK(st.face_count(1) == 5);
    CHECK(st.face_count(2) == 2);
    CHECK_FALSE(st.contains(Face{2, 3}));
    CHECK(st.contains(Face{0, 1}));
    CHECK(st.validate().empty());

    // the star of a facet is that simplex's closure
    const auto single = k42.star(Face{0, 1, 2});
    CHECK(single.total_face_count() == 7);
}

TEST_CASE("stars are valid subcomplexes containing their face") {
    for (std::uint64_t seed : {2, 4, 8}) {
        const auto x = random_pure(8, 2, 0.5, seed);
        if (x.is_empty()) continue;
        for (int j = 0; j <= x.dim(); ++j) {
            for (const Face& f : x.faces(j)) {
                const auto st = x.star(f);
                CHECK(st.contains(f));
                CHECK(st.validate().empty());
                for (int l = 0; l <= st.dim(); ++l) {
                    for (const Face& g : st.faces(l)) {
                        CHECK(x.contains(g));
                    }
                }
            }
        }
    }
}

TEST_CASE("faces_within") {
    const auto k42 = complete_complex(4, 2);
    CHECK(k42.faces_within(2, {0, 1, 2}) == std::vector<Face>{Face{0, 1, 2}});
    CHECK(k42.faces_within(1, {0, 1}) == std::vector<Face>{Face{0, 1}});
    CHECK(k42.faces_within(2, {}).empty());
    CHECK_THROWS_AS(k42.faces_within(3, {0, 1, 2, 3}), DimensionError);
}

TEST_CASE("cofaces_into") {
    const auto k42 = complete_complex(4, 2);
    CHECK(k42.cofaces_into(Face{0, 1}, {2, 3}) ==
          std::vector<Face>{Face{0, 1, 2}, Face{0, 1, 3}});
    CHECK(k42.cofaces_into(Face{0, 1}, {0}).empty());
    const auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    CHECK(path.cofaces_into(Face{1}, {0, 2}) ==
          std::vector<Face>{Face{0, 1}, Face{1, 2}});
    CHECK_THROWS_AS(k42.cofaces_into(Face{0, 1, 2, 3}, {0}), UnknownFaceError);
}

TEST_CASE("regularity of complete complexes") {
    for (int n = 2; n <= 8; ++n) {
        for (int d = 1; d < n; ++d) {
            const auto profile = complete_complex(n, d).regularity_profile();
            CHECK(profile.is_regular);
            CHECK(profile.is_pure);
            for (int j = 0; j < d; ++j) {
                CHECK(profile.degrees_min[static_cast<std::size_t>(j)] == n - (j + 1));
                CHECK(profile.degrees_max[static_cast<std::size_t>(j)] == n - (j + 1));
            }
        }
    }
}

TEST_CASE("regular degree sequences strictly decrease") {
    for (const auto& x : {complete_complex(6, 3), crosspolytope_boundary(3)}) {
        const auto profile = x.regularity_profile();
        REQUIRE(profile.is_regular);
        for (std::size_t j = 0; j + 1 < profile.degrees_min.size(); ++j) {
            CHECK(profile.degrees_min[j + 1] < profile.degrees_min[j]);
        }
    }
}

TEST_CASE("path is pure but not regular") {
    const auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    const auto profile = path.regularity_profile();
    CHECK(profile.is_pure);
    CHECK_FALSE(profile.is_regular);
    CHECK(profile.degrees_min[0] == 1);
    CHECK(profile.degrees_max[0] == 2);
}

TEST_CASE("triangle with a dangling edge is not pure") {
    const auto x = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 3}});
    const auto profile = x.regularity_profile();
    CHECK_FALSE(profile.is_pure);
    CHECK_FALSE(profile.is_regular);
}

TEST_CASE("isolated vertex breaks regularity") {
    const auto x = SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {0, 2}});
    const auto profile = x.regularity_profile();
    CHECK_FALSE(profile.is_regular);
    CHECK(profile.degrees_min[0] == 0);
}

TEST_CASE("downward closure is exhaustive") {
    for (const auto& x : {complete_complex(5, 3), crosspolytope_boundary(2),
                          random_pure(8, 2, 0.5, 3)}) {
        CHECK(x.validate().empty());
        for (int j = 1; j <= x.dim(); ++j) {
            for (const Face& f : x.faces(j)) {
                for (std::size_t i = 0; i < f.size(); ++i) {
                    CHECK(x.contains(f.facet(i)));
                }
            }
        }
    }
}

TEST_CASE("facets are the maximal faces") {
    const auto x = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 3}});
    const auto tops = x.facets();
    REQUIRE(tops.size() == 2);
    CHECK(std::find(tops.begin(), tops.end(), Face{0, 1, 2}) != tops.end());
    CHECK(std::find(tops.begin(), tops.end(), Face{0, 3}) != tops.end());
}

TEST_CASE("verbatim ingestion keeps violations observable") {
    const auto broken = SimplicialComplex::from_faces_unvalidated(3, {{0, 1, 2}, {0}});
    const auto violations = broken.validate();
    CHECK_FALSE(violations.empty());
}
