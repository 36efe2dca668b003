#include "doctest.h"

#include "cobord/polytope.hpp"

using namespace cobord;

namespace {
const std::string kData = COBORD_DATA_DIR;
}

TEST_SUITE_BEGIN("polytope");

TEST_CASE("dodecahedron combinatorics") {
    auto lat = load_polytope(kData + "/dodecahedron.json");
    CHECK(lat.facet_count() == 12);
    CHECK(lat.edge_count() == 30);
    CHECK(lat.vertex_count() == 20);
    for (int f = 0; f < 12; ++f) CHECK(lat.facet_cycle_edges[f].size() == 5);
}

TEST_CASE("cube combinatorics") {
    auto lat = load_polytope(kData + "/cube.json");
    CHECK(lat.facet_count() == 6);
    CHECK(lat.edge_count() == 12);
    CHECK(lat.vertex_count() == 8);
    for (int f = 0; f < 6; ++f) CHECK(lat.facet_cycle_edges[f].size() == 4);
}

TEST_CASE("lattice rejects malformed input") {
    nlohmann::json four_valent = {
        {"facets", {"A", "B", "C", "D", "E"}},
        {"vertices", {{"A", "B", "C", "D"}}},
    };
    CHECK_THROWS_WITH_AS(lattice_from_json(four_valent),
                         doctest::Contains("not simple"), std::invalid_argument);

    // tetrahedron with one vertex missing: Euler fails
    nlohmann::json euler = {
        {"facets", {"A", "B", "C", "D"}},
        {"vertices", {{"A", "B", "C"}, {"A", "B", "D"}, {"A", "C", "D"}}},
    };
    CHECK_THROWS(lattice_from_json(euler));
}

TEST_CASE("automorphism groups") {
    CHECK(lattice_automorphisms(load_polytope(kData + "/simplex.json")).size() == 24);
    CHECK(lattice_automorphisms(load_polytope(kData + "/cube.json")).size() == 48);
    CHECK(lattice_automorphisms(load_polytope(kData + "/dodecahedron.json")).size() == 120);
}

TEST_CASE("coloring validation") {
    auto lat = load_polytope(kData + "/cube.json");
    auto good = load_coloring(kData + "/cube_coloring.json", lat);
    CHECK(validate_coloring(lat, good));

    Coloring constant{std::vector<Color>(6, 3)};
    CHECK(!validate_coloring(lat, constant));
    CHECK(coloring_defects(lat, constant).size() == 8);

    // two adjacent facets sharing a color
    Coloring adj = good;
    adj.facet_color[lat.facet_index("Y+")] = 4;  // same as X+/X-
    CHECK(!validate_coloring(lat, adj));
}

TEST_CASE("independent triples") {
    CHECK(independent_triple(1, 2, 4));
    CHECK(independent_triple(1, 2, 7));
    CHECK(!independent_triple(1, 2, 3));
    CHECK(!independent_triple(0, 1, 2));
    CHECK(!independent_triple(5, 5, 2));
}

TEST_CASE("colors pack table notation") {
    CHECK(color_from_bits(0, 1, 1) == 3);
    CHECK(color_name(3) == "(0,1,1)");
    CHECK(color_name(4) == "(1,0,0)");
}

TEST_CASE("coloring json round trip") {
    auto lat = load_polytope(kData + "/simplex.json");
    auto col = load_coloring(kData + "/simplex_coloring.json", lat);
    CHECK(col.facet_color[lat.facet_index("F4")] == 7);
    auto j = coloring_to_json(col, lat);
    auto back = coloring_from_json(j, lat);
    CHECK(back.facet_color == col.facet_color);

    nlohmann::json missing = {{"F1", {0, 0, 1}}};
    CHECK_THROWS(coloring_from_json(missing, lat));
}

TEST_SUITE_END();
