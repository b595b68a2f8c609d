#pragma once

// Combinatorics of expanded complexes: faces, links, spans, f-vectors,
// pseudomanifold and manifold recognition (d <= 3), and greedy collapsing.

#include <span>
#include <vector>

#include "diffcyc/cycle.hpp"

namespace diffcyc {

/// Face counts (f_0, ..., f_d) of the downward closure.
struct FVector {
    std::vector<long long> counts;

    long long euler_characteristic() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// All faces with exactly `k + 1` vertices, sorted.
std::vector<Simplex> faces(const FacetComplex& complex, int k);

FVector f_vector(const FacetComplex& complex);
long long euler_characteristic(const FacetComplex& complex);

/// {f \ {v} : v in f}. Throws MissingVertex if `v` lies in no face.
FacetComplex link(const FacetComplex& complex, Vertex v);

/// Induced subcomplex on `subset`, as its maximal faces.
FacetComplex span(const FacetComplex& complex, std::span<const Vertex> subset);

/// Ridges lying in exactly one facet of a pure complex.
FacetComplex boundary(const FacetComplex& complex);

/// Every ridge lies in exactly two facets. Throws ImpureComplex on impure input.
bool is_closed_pseudomanifold(const FacetComplex& complex);

/// The used vertices form one component of the 1-skeleton. Empty complexes are not connected.
bool is_connected(const FacetComplex& complex);

/// A connected 1-complex in which every vertex has degree two.
bool is_single_cycle(const FacetComplex& complex);

/// Connected, every edge in two triangles, every vertex link a single cycle, χ = 2.
/// Throws UnsupportedDimension unless the complex is two-dimensional.
bool is_sphere_2d(const FacetComplex& complex);

/// A closed surface (connected, every edge in two triangles, every vertex link a cycle).
bool is_closed_surface(const FacetComplex& complex);

/// Fast path using the cyclic symmetry: only the link of vertex 0 is inspected.
/// d = 3 requires a 2-sphere link and a connected expansion; d = 2 requires the
/// link to be a single cycle. Throws UnsupportedDimension outside d in {2, 3}.
bool is_combinatorial_manifold(const CyclicComplex& complex);

/// Checks the link of every vertex (and connectivity for d = 3).
bool is_combinatorial_manifold(const FacetComplex& complex);

/// Greedy collapse. Repeatedly picks the free face of lowest dimension (ties broken
/// by lexicographic order), removes it together with every face containing it, and
/// stops when no free face remains. Returns the remaining maximal faces.
FacetComplex collapse(const FacetComplex& complex);

enum class Certificate { certified, inconclusive };

struct SolidTorusReport {
    Certificate verdict = Certificate::inconclusive;
    bool boundary_is_torus = false;
    bool homology_matches = false;
    bool collapses_to_circle = false;
    FacetComplex collapsed;
};

/// Semi-decision for "this pure 3-complex is a solid torus": the boundary is an
/// orientable torus, H_* = (Z, Z, 0, 0), and the greedy collapse ends on a circle.
/// Throws NotApplicable for complexes without boundary and ImpureComplex /
/// UnsupportedDimension for non-pure or non-3-dimensional input.
SolidTorusReport is_solid_torus_certificate(const FacetComplex& complex);

/// Vertices of the given parity, ascending.
std::vector<Vertex> parity_class(int n, int parity);

}  // namespace diffcyc
