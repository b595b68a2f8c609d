#include "diffcyc/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "diffcyc/error.hpp"
#include "diffcyc/homology.hpp"

namespace diffcyc {

namespace {

// Calls fn(subset) for every subset of `s` with exactly `size` vertices, in lexicographic order.
template <class Fn>
void for_each_subset(const Simplex& s, int size, Fn&& fn) {
    const int m = static_cast<int>(s.size());
    if (size < 0 || size > m) return;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    Simplex sub(size);
    for (;;) {
        for (int i = 0; i < size; ++i) sub[i] = s[idx[i]];
        fn(sub);
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Simplex without(const Simplex& s, Vertex v) {
    Simplex out;
    out.reserve(s.size());
    for (Vertex w : s)
        if (w != v) out.push_back(w);
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_pure(const FacetComplex& complex) {
    if (!complex.is_pure()) throw ImpureComplex("operation requires a pure complex");
}

std::map<Simplex, int> ridge_degrees(const FacetComplex& complex) {
    std::map<Simplex, int> degree;
    const int d = complex.dimension();
    for (const Simplex& f : complex.facets()) for_each_subset(f, d, [&](const Simplex& r) { ++degree[r]; });
    return degree;
}

}  // namespace

long long FVector::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0) ? counts[i] : -counts[i];
    return chi;
}

std::vector<Simplex> faces(const FacetComplex& complex, int k) {
    std::set<Simplex> out;
    for (const Simplex& f : complex.facets()) for_each_subset(f, k + 1, [&](const Simplex& s) { out.insert(s); });
    return {out.begin(), out.end()};
}

FVector f_vector(const FacetComplex& complex) {
    FVector f;
    for (int k = 0; k <= complex.dimension(); ++k) f.counts.push_back(static_cast<long long>(faces(complex, k).size()));
    return f;
}

long long euler_characteristic(const FacetComplex& complex) { return f_vector(complex).euler_characteristic(); }

FacetComplex link(const FacetComplex& complex, Vertex v) {
    std::vector<Simplex> out;
    bool found = false;
    for (const Simplex& f : complex.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        found = true;
        if (f.size() > 1) out.push_back(without(f, v));
    }
    if (!found) throw MissingVertex("vertex " + std::to_string(v) + " is not in the complex");
    return FacetComplex(complex.vertex_count(), std::move(out));
}

FacetComplex span(const FacetComplex& complex, std::span<const Vertex> subset) {
    std::vector<char> inside(complex.vertex_count(), 0);
    for (Vertex v : subset)
        if (v >= 0 && v < complex.vertex_count()) inside[v] = 1;

    std::vector<Simplex> pieces;
    for (const Simplex& f : complex.facets()) {
        Simplex part;
        for (Vertex v : f)
            if (inside[v]) part.push_back(v);
        if (!part.empty()) pieces.push_back(std::move(part));
    }
    std::sort(pieces.begin(), pieces.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

    std::vector<Simplex> maximal;
    for (const Simplex& p : pieces) {
        const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Simplex& m) {
            return m.size() > p.size() && std::includes(m.begin(), m.end(), p.begin(), p.end());
        });
        if (!covered) maximal.push_back(p);
    }
    return FacetComplex(complex.vertex_count(), std::move(maximal));
}

FacetComplex boundary(const FacetComplex& complex) {
    require_pure(complex);
    std::vector<Simplex> out;
    if (complex.dimension() < 1) return FacetComplex(complex.vertex_count(), {});
    for (const auto& [ridge, degree] : ridge_degrees(complex))
        if (degree == 1) out.push_back(ridge);
    return FacetComplex(complex.vertex_count(), std::move(out));
}

bool is_closed_pseudomanifold(const FacetComplex& complex) {
    require_pure(complex);
    if (complex.empty() || complex.dimension() < 1) return false;
    const auto degrees = ridge_degrees(complex);
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.second == 2; });
}

bool is_connected(const FacetComplex& complex) {
    if (complex.empty()) return false;
    UnionFind uf(complex.vertex_count());
    for (const Simplex& f : complex.facets())
        for (std::size_t i = 1; i < f.size(); ++i) uf.unite(f[0], f[i]);
    const int root = uf.find(complex.facets().front().front());
    for (Vertex v : complex.vertices())
        if (uf.find(v) != root) return false;
    return true;
}

bool is_single_cycle(const FacetComplex& complex) {
    if (complex.dimension() != 1 || !complex.is_pure()) return false;
    std::vector<int> degree(complex.vertex_count(), 0);
    for (const Simplex& e : complex.facets()) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (Vertex v : complex.vertices())
        if (degree[v] != 2) return false;
    return complex.size() >= 3 && is_connected(complex);
}

bool is_closed_surface(const FacetComplex& complex) {
    if (complex.dimension() != 2 || !complex.is_pure()) return false;
    if (!is_closed_pseudomanifold(complex) || !is_connected(complex)) return false;
    for (Vertex v : complex.vertices())
        if (!is_single_cycle(link(complex, v))) return false;
    return true;
}

bool is_sphere_2d(const FacetComplex& complex) {
    if (complex.dimension() != 2) {
        throw UnsupportedDimension("2-sphere recognition needs a 2-dimensional complex, got dimension " +
                                   std::to_string(complex.dimension()));
    }
    return is_closed_surface(complex) && euler_characteristic(complex) == 2;
}

bool is_combinatorial_manifold(const CyclicComplex& complex) {
    const int d = complex.dimension();
    if (d != 2 && d != 3) {
        throw UnsupportedDimension("manifold recognition is implemented for d = 2, 3 only, got d = " +
                                   std::to_string(d));
    }
    if (complex.empty()) return false;
    const FacetComplex expanded = expand(complex);
    const FacetComplex lk = link(expanded, 0);
    if (d == 2) return is_single_cycle(lk);
    return lk.dimension() == 2 && is_sphere_2d(lk) && is_connected(expanded);
}

bool is_combinatorial_manifold(const FacetComplex& complex) {
    const int d = complex.dimension();
    if (d != 2 && d != 3) {
        throw UnsupportedDimension("manifold recognition is implemented for d = 2, 3 only, got d = " +
                                   std::to_string(d));
    }
    if (complex.empty() || !complex.is_pure()) return false;
    for (Vertex v : complex.vertices()) {
        const FacetComplex lk = link(complex, v);
        const bool ok = d == 2 ? is_single_cycle(lk) : (lk.dimension() == 2 && is_sphere_2d(lk));
        if (!ok) return false;
    }
    return d == 2 || is_connected(complex);
}

FacetComplex collapse(const FacetComplex& complex) {
    std::set<Simplex> maximal(complex.facets().begin(), complex.facets().end());

    auto find_free = [&](Simplex& face, Simplex& owner) {
        int top = 0;
        for (const Simplex& m : maximal) top = std::max(top, static_cast<int>(m.size()));
        for (int size = 1; size < top; ++size) {
            std::map<Simplex, std::pair<int, const Simplex*>> containing;
            for (const Simplex& m : maximal) {
                if (static_cast<int>(m.size()) <= size) continue;
                for_each_subset(m, size, [&](const Simplex& s) {
                    auto& slot = containing[s];
                    ++slot.first;
                    slot.second = &m;
                });
            }
            // A face that is itself maximal is never free.
            for (const auto& [s, slot] : containing) {
                if (slot.first == 1 && !maximal.contains(s)) {
                    face = s;
                    owner = *slot.second;
                    return true;
                }
            }
        }
        return false;
    };

    Simplex face, owner;
    while (find_free(face, owner)) {
        maximal.erase(owner);
        for (Vertex v : face) {
            Simplex rest = without(owner, v);
            if (rest.empty()) continue;
            const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Simplex& m) {
                return m.size() >= rest.size() && std::includes(m.begin(), m.end(), rest.begin(), rest.end());
            });
            if (!covered) maximal.insert(std::move(rest));
        }
    }
    return FacetComplex(complex.vertex_count(), {maximal.begin(), maximal.end()});
}

SolidTorusReport is_solid_torus_certificate(const FacetComplex& complex) {
    if (complex.dimension() != 3) {
        throw UnsupportedDimension("solid torus certificate needs a 3-complex, got dimension " +
                                   std::to_string(complex.dimension()));
    }
    require_pure(complex);
    const FacetComplex rim = boundary(complex);
    if (rim.empty()) throw NotApplicable("complex has no boundary");

    SolidTorusReport report;
    report.boundary_is_torus = is_closed_surface(rim) && euler_characteristic(rim) == 0 && is_orientable(rim);

    const HomologyGroups h = homology(complex);
    report.homology_matches = h.betti == std::vector<int>{1, 1, 0, 0} &&
                              std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });

    report.collapsed = collapse(complex);
    const FacetComplex& core = report.collapsed;
    if (core.dimension() == 1 && core.is_pure() && is_connected(core)) {
        report.collapses_to_circle =
            static_cast<long long>(core.vertices().size()) == static_cast<long long>(core.size());
    }

    if (report.boundary_is_torus && report.homology_matches && report.collapses_to_circle)
        report.verdict = Certificate::certified;
    return report;
}

std::vector<Vertex> parity_class(int n, int parity) {
    std::vector<Vertex> out;
    for (int v = parity; v < n; v += 2) out.push_back(v);
    return out;
}

}  // namespace diffcyc
