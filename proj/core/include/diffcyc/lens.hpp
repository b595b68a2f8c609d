#pragma once

// The neighborly lens space series L_k on 14 + 4k vertices and the arithmetic
// used to identify its members as L((k+2)^2 - 1, k + 2).

#include <string>
#include <vector>

#include "diffcyc/cycle.hpp"
#include "diffcyc/homology.hpp"
#include "diffcyc/slicing.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

struct LensParams {
    long long p = 0;
    long long q = 0;

    /// |p| and the smallest q' in 1..|p|-1 with q' = ±q^{±1} mod |p|.
    /// Throws InvalidLensParams when p = 0 or gcd(p, q) != 1.
    static LensParams normalized(long long p, long long q);
    std::string to_string() const;  // "L(p,q)"
    friend bool operator==(const LensParams&, const LensParams&) = default;
};

/// q1 = ±q2^{±1} mod |p|. Throws InvalidLensParams on p = 0 or non-coprime input.
bool lens_equivalent(long long p, long long q1, long long q2);

CyclicComplex lens_series(int k);

struct WindingData {
    int k = 0;
    long long x = 0, y = 0;  // grid vector of the transported curve
    long long alpha[2] = {0, 0};
    long long beta[2] = {0, 0};
    long long q = 0, p = 0;  // (x, y) = q * alpha + p * beta
};

/// Solves (k+2) q + (k-1) p = 2k^2+8k+5, -q - 3p = 2k^2+9k+8 exactly.
WindingData winding_solve(int k);

struct SegmentCensus {
    long long diagonal = 0;  // (1, 1) steps
    long long down = 0;      // (0, 1) steps
};

SegmentCensus segment_census(int k);

LensParams lens_type_of_series(int k);

/// Expected slicing f-vector (cut-vertices, edges, triangles, quadrilaterals).
std::vector<long long> lens_slicing_formula(int k);

struct SplittingReport {
    bool manifold = false;
    bool even_span_certified = false;
    bool odd_span_certified = false;
    std::vector<long long> slicing_fvector;
    long long slicing_euler = 0;
    SurfaceType slicing_type;
    HomologyGroups homology;
};

struct LensMemberReport {
    int k = 0;
    int n = 0;
    bool neighborly = false;
    SplittingReport splitting;
    std::vector<long long> expected_slicing;
    long long expected_h1 = 0;

    bool ok() const;
};

/// Heegaard splitting between the even and the odd vertices: solid-torus
/// certificates for both spans and the slicing surface, plus homology.
SplittingReport genus_one_splitting(const CyclicComplex& complex);

LensMemberReport verify_lens_member(int k);

struct FixtureReport {
    std::string name;
    CyclicComplex complex;
    SplittingReport splitting;
    long long expected_h1 = 0;

    bool ok() const;
};

/// The 18-vertex lens space L(5,1) "C18" or the 22-vertex L(7,1) "D22".
/// Throws Error for other names.
CyclicComplex fixture_complex(const std::string& name);
FixtureReport verify_fixture_complex(const std::string& name);

}  // namespace diffcyc
