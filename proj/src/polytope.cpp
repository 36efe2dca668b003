#include "cobord/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cobord {

int FaceLattice::edge_index(int f1, int f2) const {
    std::array<int, 2> key{std::min(f1, f2), std::max(f1, f2)};
    auto it = std::lower_bound(edge_facets.begin(), edge_facets.end(), key);
    if (it == edge_facets.end() || *it != key) return -1;
    return static_cast<int>(it - edge_facets.begin());
}

int FaceLattice::facet_index(const std::string& name) const {
    for (int i = 0; i < facet_count(); ++i)
        if (facet_names[i] == name) return i;
    return -1;
}

int FaceLattice::opposite_facet(int edge, int vertex) const {
    for (int f : vertex_facets[vertex])
        if (f != edge_facets[edge][0] && f != edge_facets[edge][1]) return f;
    throw std::logic_error("opposite_facet: vertex does not bound the edge");
}

int FaceLattice::neighbor_facet(int facet, int edge) const {
    const auto& e = edge_facets[edge];
    if (e[0] == facet) return e[1];
    if (e[1] == facet) return e[0];
    throw std::logic_error("neighbor_facet: edge does not bound the facet");
}

FaceLattice build_lattice(std::vector<std::string> facet_names,
                          std::vector<std::array<int, 3>> vertex_facets) {
    FaceLattice lat;
    lat.facet_names = std::move(facet_names);
    const int nf = lat.facet_count();
    if (nf < 4) throw std::invalid_argument("polytope: needs at least 4 facets");

    std::set<std::array<int, 3>> seen;
    for (auto v : vertex_facets) {
        std::sort(v.begin(), v.end());
        if (v[0] < 0 || v[2] >= nf) throw std::invalid_argument("polytope: facet index out of range");
        if (v[0] == v[1] || v[1] == v[2])
            throw std::invalid_argument("polytope: vertex with repeated facets");
        if (!seen.insert(v).second) throw std::invalid_argument("polytope: duplicate vertex");
        lat.vertex_facets.push_back(v);
    }

    std::set<std::array<int, 2>> edges;
    for (const auto& v : lat.vertex_facets) {
        edges.insert({v[0], v[1]});
        edges.insert({v[0], v[2]});
        edges.insert({v[1], v[2]});
    }
    lat.edge_facets.assign(edges.begin(), edges.end());

    lat.edge_vertices.assign(lat.edge_count(), {-1, -1});
    for (int vi = 0; vi < lat.vertex_count(); ++vi) {
        const auto& v = lat.vertex_facets[vi];
        for (auto pair : {std::array<int, 2>{v[0], v[1]}, std::array<int, 2>{v[0], v[2]},
                          std::array<int, 2>{v[1], v[2]}}) {
            int e = lat.edge_index(pair[0], pair[1]);
            auto& ends = lat.edge_vertices[e];
            if (ends[0] < 0)
                ends[0] = vi;
            else if (ends[1] < 0)
                ends[1] = vi;
            else
                throw std::invalid_argument(
                    "polytope: edge {" + lat.facet_names[pair[0]] + "," +
                    lat.facet_names[pair[1]] + "} lies in more than 2 vertices (not simple)");
        }
    }
    for (int e = 0; e < lat.edge_count(); ++e)
        if (lat.edge_vertices[e][1] < 0)
            throw std::invalid_argument("polytope: edge {" +
                                        lat.facet_names[lat.edge_facets[e][0]] + "," +
                                        lat.facet_names[lat.edge_facets[e][1]] +
                                        "} has fewer than 2 endpoint vertices");

    if (lat.facet_count() - lat.edge_count() + lat.vertex_count() != 2)
        throw std::invalid_argument("polytope: Euler relation F - E + V = 2 fails");

    // boundary cycle of every facet
    lat.facet_cycle_vertices.resize(nf);
    lat.facet_cycle_edges.resize(nf);
    for (int f = 0; f < nf; ++f) {
        std::vector<int> inc_edges;
        for (int e = 0; e < lat.edge_count(); ++e)
            if (lat.edge_facets[e][0] == f || lat.edge_facets[e][1] == f)
                inc_edges.push_back(e);
        if (inc_edges.size() < 3)
            throw std::invalid_argument("polytope: facet " + lat.facet_names[f] +
                                        " has fewer than 3 edges");
        std::map<int, std::vector<int>> at_vertex;  // vertex -> incident facet-f edges
        for (int e : inc_edges)
            for (int v : lat.edge_vertices[e]) at_vertex[v].push_back(e);
        for (auto& [v, es] : at_vertex)
            if (es.size() != 2)
                throw std::invalid_argument("polytope: boundary of facet " +
                                            lat.facet_names[f] + " branches at a vertex");
        int v0 = lat.edge_vertices[inc_edges[0]][0];
        int e0 = inc_edges[0];
        std::vector<int>&cv = lat.facet_cycle_vertices[f], &ce = lat.facet_cycle_edges[f];
        int v = v0, e = e0;
        while (true) {
            cv.push_back(v);
            ce.push_back(e);
            int v2 = lat.edge_vertices[e][0] == v ? lat.edge_vertices[e][1]
                                                  : lat.edge_vertices[e][0];
            const auto& es = at_vertex[v2];
            int e2 = es[0] == e ? es[1] : es[0];
            v = v2;
            e = e2;
            if (v == v0 && e == e0) break;
        }
        if (cv.size() != inc_edges.size())
            throw std::invalid_argument("polytope: boundary of facet " + lat.facet_names[f] +
                                        " is not a single cycle");
    }
    return lat;
}

FaceLattice lattice_from_json(const nlohmann::json& j) {
    if (!j.contains("facets") || !j.contains("vertices"))
        throw std::invalid_argument("polytope JSON: needs 'facets' and 'vertices'");
    std::vector<std::string> names = j.at("facets").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (index.count(names[i])) throw std::invalid_argument("polytope JSON: duplicate facet name");
        index[names[i]] = i;
    }
    std::vector<std::array<int, 3>> verts;
    for (const auto& vj : j.at("vertices")) {
        if (!vj.is_array() || vj.size() != 3)
            throw std::invalid_argument(
                "polytope JSON: vertex is not a triple of facets (not simple)");
        std::array<int, 3> v;
        for (int t = 0; t < 3; ++t) {
            auto it = index.find(vj[t].get<std::string>());
            if (it == index.end())
                throw std::invalid_argument("polytope JSON: unknown facet in vertex");
            v[t] = it->second;
        }
        verts.push_back(v);
    }
    return build_lattice(std::move(names), std::move(verts));
}

FaceLattice load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
    nlohmann::json j;
    in >> j;
    return lattice_from_json(j);
}

nlohmann::json lattice_to_json(const FaceLattice& lat) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : lat.vertex_facets)
        verts.push_back({lat.facet_names[v[0]], lat.facet_names[v[1]], lat.facet_names[v[2]]});
    return {{"facets", lat.facet_names}, {"vertices", verts}};
}

std::vector<std::vector<int>> lattice_automorphisms(const FaceLattice& lat) {
    const int nf = lat.facet_count();
    std::vector<std::vector<char>> adj(nf, std::vector<char>(nf, 0));
    for (const auto& e : lat.edge_facets) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
    std::set<std::array<int, 3>> vset(lat.vertex_facets.begin(), lat.vertex_facets.end());

    std::vector<std::vector<int>> autos;
    std::vector<int> perm(nf, -1);
    std::vector<char> used(nf, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == nf) {
            for (const auto& v : lat.vertex_facets) {
                std::array<int, 3> img{perm[v[0]], perm[v[1]], perm[v[2]]};
                std::sort(img.begin(), img.end());
                if (!vset.count(img)) return;
            }
            autos.push_back(perm);
            return;
        }
        for (int img = 0; img < nf; ++img) {
            if (used[img]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (adj[i][j] != adj[img][perm[j]]) ok = false;
            if (!ok) continue;
            perm[i] = img;
            used[img] = 1;
            self(self, i + 1);
            perm[i] = -1;
            used[img] = 0;
        }
    };
    rec(rec, 0);
    return autos;
}

std::string color_name(Color c) {
    std::ostringstream os;
    os << '(' << ((c >> 2) & 1) << ',' << ((c >> 1) & 1) << ',' << (c & 1) << ')';
    return os.str();
}

Color color_from_bits(int b2, int b1, int b0) {
    return static_cast<Color>((b2 << 2) | (b1 << 1) | b0);
}

bool independent_triple(Color a, Color b, Color c) {
    return a && b && c && a != b && c != a && c != b && c != (a ^ b);
}

std::vector<int> coloring_defects(const FaceLattice& lat, const Coloring& col) {
    std::vector<int> bad;
    if (col.facet_color.size() != static_cast<std::size_t>(lat.facet_count()))
        throw std::invalid_argument("coloring: must assign a color to every facet");
    for (int vi = 0; vi < lat.vertex_count(); ++vi) {
        const auto& v = lat.vertex_facets[vi];
        if (!independent_triple(col.facet_color[v[0]], col.facet_color[v[1]],
                                col.facet_color[v[2]]))
            bad.push_back(vi);
    }
    return bad;
}

bool validate_coloring(const FaceLattice& lat, const Coloring& col) {
    return coloring_defects(lat, col).empty();
}

Coloring coloring_from_json(const nlohmann::json& j, const FaceLattice& lat) {
    Coloring col;
    col.facet_color.assign(lat.facet_count(), 0);
    std::vector<char> have(lat.facet_count(), 0);
    for (auto& [name, bits] : j.items()) {
        int f = lat.facet_index(name);
        if (f < 0) throw std::invalid_argument("coloring JSON: unknown facet '" + name + "'");
        if (!bits.is_array() || bits.size() != 3)
            throw std::invalid_argument("coloring JSON: color must be [b2,b1,b0]");
        col.facet_color[f] =
            color_from_bits(bits[0].get<int>(), bits[1].get<int>(), bits[2].get<int>());
        have[f] = 1;
    }
    for (int f = 0; f < lat.facet_count(); ++f)
        if (!have[f])
            throw std::invalid_argument("coloring JSON: facet '" + lat.facet_names[f] +
                                        "' has no color");
    return col;
}

Coloring load_coloring(const std::string& path, const FaceLattice& lat) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coloring file: " + path);
    nlohmann::json j;
    in >> j;
    return coloring_from_json(j, lat);
}

nlohmann::json coloring_to_json(const Coloring& col, const FaceLattice& lat) {
    nlohmann::json j = nlohmann::json::object();
    for (int f = 0; f < lat.facet_count(); ++f) {
        Color c = col.facet_color[f];
        j[lat.facet_names[f]] = {(c >> 2) & 1, (c >> 1) & 1, c & 1};
    }
    return j;
}

}  // namespace cobord
