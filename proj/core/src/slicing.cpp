#include "diffcyc/slicing.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "diffcyc/error.hpp"

namespace diffcyc {

namespace {

using Edge = std::pair<int, int>;

Edge undirected(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::vector<long long> PolyhedralSlicing::f_vector() const {
    std::set<Edge> edges;
    long long triangles = 0, quads = 0;
    for (const auto& cell : cells) {
        (cell.size() == 3 ? triangles : quads) += 1;
        for (std::size_t i = 0; i < cell.size(); ++i) edges.insert(undirected(cell[i], cell[(i + 1) % cell.size()]));
    }
    return {static_cast<long long>(cut_vertices.size()), static_cast<long long>(edges.size()), triangles, quads};
}

long long PolyhedralSlicing::euler_characteristic() const {
    const auto f = f_vector();
    return f[0] - f[1] + f[2] + f[3];
}

PolyhedralSlicing slicing(const FacetComplex& complex, std::span<const Vertex> part_a) {
    if (complex.dimension() != 3 || !complex.is_pure())
        throw UnsupportedDimension("slicing needs a pure 3-dimensional complex");

    std::vector<char> in_a(complex.vertex_count(), 0);
    for (Vertex v : part_a) {
        if (v < 0 || v >= complex.vertex_count()) throw InvalidBipartition("vertex " + std::to_string(v) + " out of range");
        in_a[v] = 1;
    }
    const auto used = complex.vertices();
    const auto in_a_count = std::count_if(used.begin(), used.end(), [&](Vertex v) { return in_a[v] != 0; });
    if (in_a_count == 0 || in_a_count == static_cast<long>(used.size()))
        throw InvalidBipartition("both sides of the bipartition must contain a vertex of the complex");

    std::set<CutVertex> mixed;
    for (const Simplex& f : complex.facets())
        for (Vertex u : f)
            for (Vertex v : f)
                if (in_a[u] && !in_a[v]) mixed.insert({u, v});

    PolyhedralSlicing s;
    s.cut_vertices.assign(mixed.begin(), mixed.end());
    auto index = [&](Vertex a, Vertex b) {
        auto it = std::lower_bound(s.cut_vertices.begin(), s.cut_vertices.end(), CutVertex{a, b});
        return static_cast<int>(it - s.cut_vertices.begin());
    };

    for (const Simplex& f : complex.facets()) {
        std::vector<Vertex> a, b;
        for (Vertex v : f) (in_a[v] ? a : b).push_back(v);
        std::vector<int> cell;
        if (a.size() == 1 && b.size() == 3) {
            for (Vertex v : b) cell.push_back(index(a[0], v));
        } else if (a.size() == 3 && b.size() == 1) {
            for (Vertex v : a) cell.push_back(index(v, b[0]));
        } else if (a.size() == 2 && b.size() == 2) {
            cell = {index(a[0], b[0]), index(a[0], b[1]), index(a[1], b[1]), index(a[1], b[0])};
        } else {
            continue;
        }
        s.cells.push_back(std::move(cell));
        s.provenance.push_back(f);
    }
    return s;
}

SurfaceType surface_type(const PolyhedralSlicing& s) {
    if (s.cells.empty()) throw NotASurface("slicing has no cells");

    // Directed occurrences of each undirected edge: (cell, forward?).
    std::map<Edge, std::vector<std::pair<int, bool>>> uses;
    for (int c = 0; c < static_cast<int>(s.cells.size()); ++c) {
        const auto& cell = s.cells[c];
        for (std::size_t i = 0; i < cell.size(); ++i) {
            const int u = cell[i], v = cell[(i + 1) % cell.size()];
            uses[undirected(u, v)].push_back({c, u < v});
        }
    }
    for (const auto& [edge, occ] : uses) {
        if (occ.size() != 2) {
            throw NotASurface("cell edge (" + std::to_string(edge.first) + ", " + std::to_string(edge.second) + ") lies in " +
                              std::to_string(occ.size()) + " cells");
        }
    }

    // flip[c] reverses cell c; neighbours must traverse their shared edge in opposite directions.
    std::vector<int> flip(s.cells.size(), -1);
    std::vector<std::vector<std::pair<int, bool>>> adjacency(s.cells.size());
    for (const auto& [edge, occ] : uses) {
        const bool same_direction = occ[0].second == occ[1].second;
        adjacency[occ[0].first].push_back({occ[1].first, same_direction});
        adjacency[occ[1].first].push_back({occ[0].first, same_direction});
    }
    bool orientable = true;
    std::queue<int> todo;
    flip[0] = 0;
    todo.push(0);
    while (!todo.empty()) {
        const int c = todo.front();
        todo.pop();
        for (auto [other, same_direction] : adjacency[c]) {
            const int wanted = same_direction ? 1 - flip[c] : flip[c];
            if (flip[other] < 0) {
                flip[other] = wanted;
                todo.push(other);
            } else if (flip[other] != wanted) {
                orientable = false;
            }
        }
    }
    if (std::find(flip.begin(), flip.end(), -1) != flip.end()) throw NotASurface("slicing is disconnected");

    const long long chi = s.euler_characteristic();
    SurfaceType t;
    t.orientable = orientable;
    t.genus = static_cast<int>(orientable ? (2 - chi) / 2 : 2 - chi);
    return t;
}

namespace {

std::string off_document(int vertex_count, const std::vector<std::vector<int>>& polygons) {
    std::ostringstream out;
    out << "OFF\n" << vertex_count << ' ' << polygons.size() << " 0\n";
    out << std::setprecision(6) << std::fixed;
    for (int i = 0; i < vertex_count; ++i) {
        const double t = vertex_count > 1 ? static_cast<double>(i) / (vertex_count - 1) : 0.0;
        out << t << ' ' << t * t << ' ' << t * t * t << '\n';
    }
    for (const auto& p : polygons) {
        out << p.size();
        for (int v : p) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string to_off(const FacetComplex& surface) {
    if (surface.dimension() != 2 || !surface.is_pure())
        throw UnsupportedDimension("OFF export needs a pure 2-dimensional complex");
    return off_document(surface.vertex_count(), surface.facets());
}

std::string to_off(const PolyhedralSlicing& s) { return off_document(static_cast<int>(s.cut_vertices.size()), s.cells); }

}  // namespace diffcyc
