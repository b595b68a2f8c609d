#pragma once

// Infinite series of cyclic 3-manifolds obtained by growing difference-cycle
// entries: the dense criterion, the order-l criterion and their extensions.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "diffcyc/cycle.hpp"

namespace diffcyc {

/// Member k has cycle i equal to base[i] + k * increments[i], entrywise.
/// Base parts keep their rotation so that increments line up with positions.
struct SeriesSpec {
    std::vector<Parts> base;
    int l = 1;
    std::vector<Parts> increments;

    int modulus() const;
    int dimension() const;

    /// Throws InvalidSeries on shape, sign or sum violations.
    void validate() const;
    CyclicComplex member(long long k) const;

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// Rotation of `c` with a maximal entry last; among several such rotations the
/// lexicographically smallest.
Parts max_last_rotation(const DifferenceCycle& c);

/// a^d - (a^0 + ... + a^{d-1}) of a max-last rotation.
int dense_margin(const Parts& max_last);

struct DenseSeriesReport {
    CyclicComplex complex;
    std::vector<Parts> rotated;
    std::vector<int> margins;
    bool passes = false;
    bool minimal_start = false;
};

/// Throws NotApplicable (with the reason) unless the input is a combinatorial manifold.
DenseSeriesReport dense_extendable(const CyclicComplex& complex);

/// Order-1 spec growing the last entry of each max-last rotation.
SeriesSpec dense_spec(const CyclicComplex& complex);

/// Adds k to the maximal entry of every cycle. Throws InvalidSeries when some
/// cycle attains its maximum twice.
CyclicComplex extend_dense(const CyclicComplex& complex, long long k);

/// Strict (l_i^j + 1) n > a_i^j (l + 1) > l_i^j n for every entry, in integers.
bool order_l_admissible(const SeriesSpec& spec);

CyclicComplex extend_order_l(const SeriesSpec& spec, long long k);

/// Whether v -> v + floor((l+1) v / n) k maps the link of vertex 0 in the base
/// facet-for-facet onto the link of vertex 0 in member(k).
bool link_relabeling_holds(const SeriesSpec& spec, long long k);

struct UnitReduction {
    SeriesSpec dense;  // order 1
    long long k0 = 0;
    long long stride = 1;  // l: multiply(member(k), l) == dense.member(stride * (k - k0))
};

/// Throws NotApplicable when gcd(l, n) != 1, and InternalError if the
/// resulting identification fails on k0, k0 + 1, k0 + 2.
UnitReduction reduce_by_unit(const SeriesSpec& spec);

struct MinimalStart {
    long long k_min = 0;  // the input is member k_min of the series starting here
    CyclicComplex start;
};

/// Throws NotApplicable unless dense_extendable passes.
MinimalStart minimal_start(const CyclicComplex& complex);

struct DenseSeriesCensus {
    int n_max = 0;
    std::vector<CyclicComplex> starts;  // one per isomorphism class, ordered by n then text
    std::size_t count() const { return starts.size(); }
};

/// Reads the registry for every n in 5..n_max. Throws RegistryError naming
/// every missing n.
DenseSeriesCensus enumerate_dense_series(const std::filesystem::path& registry_dir, int n_max);

std::string format_series(const SeriesSpec& spec);  // JSON text
SeriesSpec parse_series(std::string_view json_text);

}  // namespace diffcyc
