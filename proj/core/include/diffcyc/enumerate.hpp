#pragma once

// Classification of cyclic combinatorial 3-manifolds on n vertices by an
// exact double cover search over triangle orbits.

#include <chrono>
#include <filesystem>
#include <vector>

#include "diffcyc/cycle.hpp"

namespace diffcyc {

/// Every canonical difference cycle of dimension d on n vertices, ascending.
/// Throws InvalidCycle when n < d + 2.
std::vector<DifferenceCycle> all_difference_cycles(int n, int d = 3);

/// A triangle orbit met by a tetrahedral orbit; `multiplicity` is the number of
/// facets of the tetrahedral orbit containing any one triangle of the orbit.
struct RidgeOrbit {
    DifferenceCycle triangle;
    int multiplicity = 0;
    friend bool operator==(const RidgeOrbit&, const RidgeOrbit&) = default;
};

/// Sorted by triangle. Sum of multiplicity * orbit_length(triangle) is
/// 4 * orbit_length(c). Throws UnsupportedDimension unless c is 3-dimensional.
std::vector<RidgeOrbit> ridge_orbits(const DifferenceCycle& c);

struct ClassifyOptions {
    int jobs = 1;
    std::chrono::duration<double> time_limit{0};  // zero: unlimited
    std::filesystem::path checkpoint;             // empty: no checkpoint log
    int checkpoint_every = 1;                     // seeds between log flushes
};

struct SearchStats {
    long long nodes = 0;
    long long pseudomanifolds = 0;  // leaves with every triangle in 0 or 2 facets
    long long rejected_links = 0;
    long long disconnected = 0;
    int seeds_total = 0;
    int seeds_done = 0;
    int seeds_resumed = 0;
    double seconds = 0;
};

struct EnumerationResult {
    int n = 0;
    std::vector<CyclicComplex> complexes;            // ordered by format() text
    std::vector<std::vector<int>> multiplier_classes;  // indices into complexes
    std::vector<std::vector<int>> iso_classes;         // indices into complexes
    SearchStats stats;
    bool complete = true;
};

/// All sets of 3-dimensional difference cycles on n vertices whose expansion is
/// a connected combinatorial 3-manifold. Stops early (complete = false) once the
/// time limit has passed; finished seeds are in the checkpoint log if one is set,
/// and a later call with the same log resumes after them.
EnumerationResult classify(int n, const ClassifyOptions& options = {});

/// Orbits of the unit group acting by multiplication. Each class lists indices
/// ascending; classes are ordered by their first index.
std::vector<std::vector<int>> dedupe_multipliers(const std::vector<CyclicComplex>& complexes);

/// Combinatorial isomorphism classes, same ordering conventions.
std::vector<std::vector<int>> iso_classes(const std::vector<CyclicComplex>& complexes);

/// Exact isomorphism test on explicit complexes by vertex backtracking. With
/// `vertex_transitive`, vertex 0 of `a` is only tried against vertex 0 of `b`.
bool isomorphic(const FacetComplex& a, const FacetComplex& b, bool vertex_transitive = false);

}  // namespace diffcyc
