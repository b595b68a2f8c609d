#include "diffcyc/lens.hpp"

#include <algorithm>
#include <numeric>

#include "diffcyc/error.hpp"

namespace diffcyc {

namespace {

long long mod(long long a, long long m) {
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

HomologyGroups lens_homology(long long order) {
    HomologyGroups h;
    h.betti = {1, 0, 0, 1};
    h.torsion = {{}, {}, {}, {}};
    if (order > 1) h.torsion[1] = {order};
    return h;
}

bool certified(const FacetComplex& span_complex) {
    try {
        return is_solid_torus_certificate(span_complex).verdict == Certificate::certified;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

LensParams LensParams::normalized(long long p, long long q) {
    if (p == 0) throw InvalidLensParams("p must be nonzero");
    const long long m = p < 0 ? -p : p;
    if (std::gcd(mod(q, m), m) != 1) {
        throw InvalidLensParams("q = " + std::to_string(q) + " is not coprime to p = " + std::to_string(p));
    }
    if (m == 1) return {1, 0};
    const long long r = mod(q, m);
    const long long inv = inverse_mod(static_cast<int>(r), static_cast<int>(m));
    return {m, std::min({r, m - r, inv, m - inv})};
}

std::string LensParams::to_string() const { return "L(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

bool lens_equivalent(long long p, long long q1, long long q2) {
    return LensParams::normalized(p, q1) == LensParams::normalized(p, q2);
}

CyclicComplex lens_series(int k) {
    if (k < 0) throw InvalidSeries("lens series index must be nonnegative");
    const int n = 14 + 4 * k;
    std::vector<DifferenceCycle> cycles{{1, 1, 1, 11 + 4 * k}, {1, 2, 4, 7 + 4 * k}, {1, 4, 2, 7 + 4 * k}, {1, 4, 7 + 4 * k, 2}};
    for (int i = 0; i <= k; ++i) {
        cycles.push_back({2, 5 + 2 * i, 2, 5 + 4 * k - 2 * i});
        cycles.push_back({4, 2 + 2 * i, 4, 4 + 4 * k - 2 * i});
    }
    return CyclicComplex(n, 3, std::move(cycles));
}

WindingData winding_solve(int k) {
    WindingData w;
    w.k = k;
    const long long kk = k;
    w.x = 2 * kk * kk + 8 * kk + 5;
    w.y = 2 * kk * kk + 9 * kk + 8;
    w.alpha[0] = kk + 2;
    w.alpha[1] = -1;
    w.beta[0] = kk - 1;
    w.beta[1] = -3;
    const long long a = w.alpha[0], b = w.beta[0], c = w.alpha[1], d = w.beta[1];
    const long long det = a * d - b * c;
    if (det == 0) throw InternalError("singular winding system at k = " + std::to_string(k));
    const long long q_num = w.x * d - b * w.y;
    const long long p_num = a * w.y - c * w.x;
    if (q_num % det != 0 || p_num % det != 0) throw InternalError("winding system has no integer solution");
    w.q = q_num / det;
    w.p = p_num / det;
    return w;
}

SegmentCensus segment_census(int k) {
    const long long kk = k;
    return {(kk + 2) * (2 * kk + 2) + 2 * kk + 1, kk + 3};
}

LensParams lens_type_of_series(int k) {
    const WindingData w = winding_solve(k);
    const long long order = w.p < 0 ? -w.p : w.p;
    if (!lens_equivalent(order, w.q, k + 2)) {
        throw InternalError("winding solution L(" + std::to_string(order) + "," + std::to_string(w.q) +
                            ") is not equivalent to L(" + std::to_string(order) + "," + std::to_string(k + 2) + ")");
    }
    return LensParams::normalized(order, k + 2);
}

std::vector<long long> lens_slicing_formula(int k) {
    const long long kk = k;
    return {4 * kk * kk + 28 * kk + 49, 8 * kk * kk + 60 * kk + 112, 8 * kk + 28, 4 * kk * kk + 24 * kk + 35};
}

SplittingReport genus_one_splitting(const CyclicComplex& complex) {
    SplittingReport r;
    const FacetComplex expanded = expand(complex);
    const int n = complex.vertex_count();
    const auto even = parity_class(n, 0);
    const auto odd = parity_class(n, 1);
    r.manifold = is_combinatorial_manifold(complex);
    r.even_span_certified = certified(span(expanded, even));
    r.odd_span_certified = certified(span(expanded, odd));
    const PolyhedralSlicing s = slicing(expanded, odd);
    r.slicing_fvector = s.f_vector();
    r.slicing_euler = s.euler_characteristic();
    r.slicing_type = surface_type(s);
    r.homology = homology(expanded);
    return r;
}

bool LensMemberReport::ok() const {
    return splitting.manifold && neighborly && splitting.even_span_certified && splitting.odd_span_certified &&
           splitting.slicing_fvector == expected_slicing && splitting.slicing_type == SurfaceType{true, 1} &&
           splitting.homology == lens_homology(expected_h1);
}

LensMemberReport verify_lens_member(int k) {
    const CyclicComplex complex = lens_series(k);
    LensMemberReport r;
    r.k = k;
    r.n = complex.vertex_count();
    r.splitting = genus_one_splitting(complex);
    r.neighborly = is_2_neighborly(expand(complex));
    r.expected_slicing = lens_slicing_formula(k);
    r.expected_h1 = static_cast<long long>(k + 2) * (k + 2) - 1;
    return r;
}

bool FixtureReport::ok() const {
    return splitting.manifold && splitting.even_span_certified && splitting.odd_span_certified &&
           splitting.slicing_euler == 0 && splitting.slicing_type == SurfaceType{true, 1} &&
           splitting.homology == lens_homology(expected_h1);
}

CyclicComplex fixture_complex(const std::string& name) {
    if (name == "C18") {
        return parse_complex("{(1:1:1:15),(1:2:5:10),(1:5:2:10),(1:5:10:2),(2:5:2:9),(2:6:4:6),(2:7:2:7),(4:4:4:6)}");
    }
    if (name == "D22") {
        return parse_complex(
            "{(1:1:1:19),(1:2:5:14),(1:7:12:2),(2:5:2:13),(2:7:2:11),"
            "(2:8:4:8),(2:9:2:9),(2:12:3:5),(4:6:4:8),(4:6:6:6)}");
    }
    throw Error("unknown fixture complex '" + name + "', expected C18 or D22");
}

FixtureReport verify_fixture_complex(const std::string& name) {
    FixtureReport r;
    r.name = name;
    r.complex = fixture_complex(name);
    r.expected_h1 = name == "C18" ? 5 : 7;
    r.splitting = genus_one_splitting(r.complex);
    return r;
}

}  // namespace diffcyc
