#pragma once

// Test-side reference implementations. None of these call into the library, so
// agreement with it is evidence rather than tautology.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;
using Face = std::vector<int>;

inline Parts min_rotation(const Parts& p) {
    Parts best = p;
    for (std::size_t s = 1; s < p.size(); ++s) {
        Parts r(p.begin() + static_cast<long>(s), p.end());
        r.insert(r.end(), p.begin(), p.begin() + static_cast<long>(s));
        best = std::min(best, r);
    }
    return best;
}

/// Every composition of n into `parts` positive parts.
inline std::vector<Parts> compositions(int n, int parts) {
    std::vector<Parts> out;
    Parts cur;
    auto rec = [&](auto&& self, int left, int slots) -> void {
        if (slots == 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int a = 1; a <= left - (slots - 1); ++a) {
            cur.push_back(a);
            self(self, left - a, slots - 1);
            cur.pop_back();
        }
    };
    if (n >= parts) rec(rec, n, parts);
    return out;
}

/// Rotation classes of compositions, found by exhaustive generation.
inline std::set<Parts> necklaces(int n, int parts) {
    std::set<Parts> out;
    for (const Parts& c : compositions(n, parts)) out.insert(min_rotation(c));
    return out;
}

/// Burnside count of rotation classes of 4-part compositions of n.
inline long long necklace_count_4(int n) {
    auto binom = [](long long a, long long b) -> long long {
        if (b < 0 || a < b) return 0;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    // A composition fixed by a rotation of order t (t | 4) is a composition of
    // n/t into 4/t parts repeated t times.
    long long total = 0;
    const int phi[] = {0, 1, 1, 0, 2};
    for (int t : {1, 2, 4}) {
        if (n % t) continue;
        total += phi[t] * binom(n / t - 1, 4 / t - 1);
    }
    return total / 4;
}

inline Face generator(const Parts& p) {
    Face f{0};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) f.push_back(f.back() + p[i]);
    return f;
}

/// The set of translates of the generator simplex, each sorted.
inline std::set<Face> orbit(const Parts& p) {
    const int n = std::accumulate(p.begin(), p.end(), 0);
    std::set<Face> out;
    const Face g = generator(p);
    for (int v = 0; v < n; ++v) {
        Face f;
        for (int x : g) f.push_back((x + v) % n);
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

/// Facets of a list of cycles, keeping repeats across cycles.
inline std::vector<Face> expand(const std::vector<Parts>& cycles) {
    std::vector<Face> out;
    for (const Parts& p : cycles) {
        const auto o = orbit(p);
        out.insert(out.end(), o.begin(), o.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

/// Connected via shared vertices, counting only vertices that occur.
inline bool connected(const std::vector<Face>& faces, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> used(n, false);
    for (const Face& f : faces) {
        for (int v : f) used[v] = true;
        for (std::size_t i = 1; i < f.size(); ++i) parent[find(parent, f[i])] = find(parent, f[0]);
    }
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (!used[v]) continue;
        const int r = find(parent, v);
        if (root == -1) root = r;
        else if (r != root) return false;
    }
    return root != -1;
}

/// Triangulated 2-sphere: closed pseudo-surface whose vertex links are single
/// cycles, connected, Euler characteristic 2.
inline bool is_2_sphere(const std::vector<Face>& triangles, int n) {
    if (triangles.empty()) return false;
    std::map<std::pair<int, int>, int> edge_count;
    std::map<int, std::vector<std::pair<int, int>>> around;
    std::set<int> verts;
    for (const Face& t : triangles) {
        if (t.size() != 3) return false;
        for (int i = 0; i < 3; ++i) {
            verts.insert(t[i]);
            const int a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
            ++edge_count[{std::min(a, b), std::max(a, b)}];
            around[a].push_back({std::min(b, c), std::max(b, c)});
        }
    }
    for (const auto& [e, c] : edge_count)
        if (c != 2) return false;
    for (const auto& [v, edges] : around) {
        // every link vertex has degree 2 and the link graph is one cycle
        std::map<int, std::vector<int>> adj;
        for (const auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (const auto& [w, nb] : adj)
            if (nb.size() != 2) return false;
        std::set<int> seen;
        int prev = -1, cur = adj.begin()->first;
        while (!seen.count(cur)) {
            seen.insert(cur);
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        if (seen.size() != adj.size()) return false;
    }
    const long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(edge_count.size()) +
                          static_cast<long long>(triangles.size());
    return chi == 2 && connected(triangles, n);
}

inline std::vector<Face> link(const std::vector<Face>& facets, int v) {
    std::vector<Face> out;
    for (const Face& f : facets) {
        if (std::find(f.begin(), f.end(), v) == f.end()) continue;
        Face g;
        for (int x : f)
            if (x != v) g.push_back(x);
        out.push_back(g);
    }
    return out;
}

/// Every vertex 0..n-1 has a 2-sphere link, facets are distinct, and the
/// complex is connected.
inline bool is_3_manifold_all_links(const std::vector<Face>& facets, int n) {
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) return false;
    for (int v = 0; v < n; ++v)
        if (!is_2_sphere(link(facets, v), n)) return false;
    return connected(facets, n);
}

inline bool is_3_manifold(const std::vector<Parts>& cycles) {
    if (cycles.empty()) return false;
    const int n = std::accumulate(cycles[0].begin(), cycles[0].end(), 0);
    return is_3_manifold_all_links(expand(cycles), n);
}

/// All faces of every dimension, from the facets.
inline std::set<Face> closure(const std::vector<Face>& facets) {
    std::set<Face> out;
    for (const Face& f : facets) {
        const int k = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            Face g;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) g.push_back(f[i]);
            out.insert(g);
        }
    }
    return out;
}

inline std::vector<long long> f_vector(const std::vector<Face>& facets) {
    std::vector<long long> f;
    for (const Face& g : closure(facets)) {
        if (f.size() < g.size()) f.resize(g.size(), 0);
        ++f[g.size() - 1];
    }
    return f;
}

/// Smith form of a diagonal matrix through pairwise (gcd, lcm) replacement.
inline std::vector<long long> diagonal_snf(std::vector<long long> d) {
    std::erase(d, 0);
    for (long long& x : d) x = x < 0 ? -x : x;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const long long g = std::gcd(d[i], d[j]);
            const long long l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    return d;
}

/// Tries every vertex permutation.
inline bool isomorphic_by_permutation(const std::vector<Face>& a, const std::vector<Face>& b, int n) {
    if (a.size() != b.size()) return false;
    const std::set<Face> target(b.begin(), b.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Face& f : a) {
            Face g;
            for (int v : f) g.push_back(perm[v]);
            std::sort(g.begin(), g.end());
            if (!target.count(g)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Every subset of rotation classes of 4-part compositions of n whose union is a
/// connected 3-manifold, each sorted.
inline std::set<std::vector<Parts>> brute_force_classification(int n) {
    const std::set<Parts> all = necklaces(n, 4);
    const std::vector<Parts> universe(all.begin(), all.end());
    std::set<std::vector<Parts>> out;
    for (unsigned long mask = 1; mask < (1UL << universe.size()); ++mask) {
        std::vector<Parts> pick;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1) pick.push_back(universe[i]);
        if (is_3_manifold(pick)) out.insert(pick);
    }
    return out;
}

}  // namespace oracle
