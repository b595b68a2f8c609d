#pragma once

// Cross-section surfaces between a vertex bipartition (A, B) of a closed
// 3-manifold complex. Every mixed edge contributes one cut-vertex, every mixed
// facet one cell: a triangle for a 1-3 split, a quadrilateral for a 2-2 split.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffcyc/cycle.hpp"

namespace diffcyc {

/// Mixed edge (a, b) with a in A and b in B.
using CutVertex = std::pair<Vertex, Vertex>;

struct PolyhedralSlicing {
    std::vector<CutVertex> cut_vertices;   // sorted
    std::vector<std::vector<int>> cells;   // cyclic index lists into cut_vertices
    std::vector<Simplex> provenance;       // ambient facet of each cell

    /// (#cut-vertices, #cell edges, #triangles, #quadrilaterals).
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;
};

/// Throws InvalidBipartition when A is empty or contains every used vertex,
/// and UnsupportedDimension unless the complex is a pure 3-complex.
PolyhedralSlicing slicing(const FacetComplex& complex, std::span<const Vertex> part_a);

struct SurfaceType {
    bool orientable = false;
    int genus = 0;  // handles if orientable, cross-caps otherwise
    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

/// Throws NotASurface if some cell edge is not shared by exactly two cells or
/// the cells do not form one connected piece.
SurfaceType surface_type(const PolyhedralSlicing& s);

/// Object File Format; vertices are placed on the moment curve.
std::string to_off(const FacetComplex& surface);
std::string to_off(const PolyhedralSlicing& s);

}  // namespace diffcyc
