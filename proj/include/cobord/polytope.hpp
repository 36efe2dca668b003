#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cobord {

// Face lattice of a simple 3-polytope: facets, edges (facet pairs) and
// vertices (facet triples), with the boundary cycle of every facet.
struct FaceLattice {
    std::vector<std::string> facet_names;
    std::vector<std::array<int, 3>> vertex_facets;   // sorted facet triples
    std::vector<std::array<int, 2>> edge_facets;     // sorted facet pairs
    std::vector<std::array<int, 2>> edge_vertices;   // the two endpoints
    // facet boundary walks: edge i of the cycle joins vertex i to vertex i+1
    std::vector<std::vector<int>> facet_cycle_vertices;
    std::vector<std::vector<int>> facet_cycle_edges;

    int facet_count() const { return static_cast<int>(facet_names.size()); }
    int edge_count() const { return static_cast<int>(edge_facets.size()); }
    int vertex_count() const { return static_cast<int>(vertex_facets.size()); }

    int edge_index(int f1, int f2) const;  // -1 if the facets are not adjacent
    int facet_index(const std::string& name) const;
    // the facet of vertex v other than the two facets of edge e
    int opposite_facet(int edge, int vertex) const;
    int neighbor_facet(int facet, int edge) const;
};

// Builds and fully validates the lattice; throws with the first violated
// condition (non-simple vertex, dangling edge, Euler failure, broken
// facet cycle).
FaceLattice build_lattice(std::vector<std::string> facet_names,
                          std::vector<std::array<int, 3>> vertex_facets);

FaceLattice lattice_from_json(const nlohmann::json& j);
FaceLattice load_polytope(const std::string& path);
nlohmann::json lattice_to_json(const FaceLattice& lat);

// All face-lattice automorphisms, as facet permutations.
std::vector<std::vector<int>> lattice_automorphisms(const FaceLattice& lat);

// Z2^3 facet coloring; the value packs the bits of the table notation
// (b2,b1,b0) as b2*4 + b1*2 + b0.
using Color = std::uint8_t;

struct Coloring {
    std::vector<Color> facet_color;
};

std::string color_name(Color c);          // "(0,1,1)"
Color color_from_bits(int b2, int b1, int b0);

bool independent_triple(Color a, Color b, Color c);

// Non-degeneracy: the three colors at every vertex are linearly
// independent over GF(2).
bool validate_coloring(const FaceLattice& lat, const Coloring& col);
// Same, listing the offending vertices.
std::vector<int> coloring_defects(const FaceLattice& lat, const Coloring& col);

Coloring coloring_from_json(const nlohmann::json& j, const FaceLattice& lat);
Coloring load_coloring(const std::string& path, const FaceLattice& lat);
nlohmann::json coloring_to_json(const Coloring& col, const FaceLattice& lat);

}  // namespace cobord
