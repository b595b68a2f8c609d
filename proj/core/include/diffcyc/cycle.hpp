#pragma once

// Difference cycles and the two complex representations built on them:
// the compact CyclicComplex (a set of cycle orbits) and the expanded
// FacetComplex (an explicit list of maximal faces over Z_n).

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diffcyc {

using Vertex = int;

/// Strictly ascending vertex list.
using Simplex = std::vector<Vertex>;

/// Raw cycle entries in a caller-chosen rotation (not canonicalized).
using Parts = std::vector<int>;

/// The Z_n-orbit of the simplex <0, a_0, a_0 + a_1, ...>, stored in its
/// lexicographically minimal rotation.
class DifferenceCycle {
public:
    /// Canonicalizes `parts`. Throws InvalidCycle on an empty list, a single
    /// entry, or a non-positive entry.
    explicit DifferenceCycle(std::span<const int> parts);
    DifferenceCycle(std::initializer_list<int> parts);

    const Parts& parts() const& noexcept { return parts_; }
    Parts parts() && noexcept { return std::move(parts_); }
    int dimension() const noexcept { return static_cast<int>(parts_.size()) - 1; }
    int modulus() const noexcept { return modulus_; }

    /// The orbit representative <0, a_0, a_0 + a_1, ..., a_0 + ... + a_{d-1}>.
    Simplex generator() const;

    friend bool operator==(const DifferenceCycle&, const DifferenceCycle&) = default;
    friend std::strong_ordering operator<=>(const DifferenceCycle& a, const DifferenceCycle& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    Parts parts_;
    int modulus_ = 0;
};

/// Lexicographically minimal rotation of `parts`.
DifferenceCycle canonicalize(std::span<const int> parts);

/// Number of distinct facets in the orbit of `c`.
int orbit_length(const DifferenceCycle& c);

/// The cyclic gaps of an ascending simplex over Z_n, read starting at its first vertex.
Parts gaps_of(const Simplex& simplex, int n);

/// The canonical cycle whose orbit contains `simplex`.
DifferenceCycle cycle_of(const Simplex& simplex, int n);

/// Explicit simplicial complex given by its maximal faces over {0, ..., n-1}.
///
/// Faces are sorted ascending and the face list is sorted and deduplicated on
/// construction. Faces of different sizes are allowed (spans and collapses are
/// impure); `dimension()` is the largest face dimension.
class FacetComplex {
public:
    FacetComplex() = default;
    FacetComplex(int n, std::vector<Simplex> facets);

    int vertex_count() const noexcept { return n_; }
    int dimension() const noexcept { return dimension_; }
    const std::vector<Simplex>& facets() const& noexcept { return facets_; }
    std::vector<Simplex> facets() && noexcept { return std::move(facets_); }
    std::size_t size() const noexcept { return facets_.size(); }
    bool empty() const noexcept { return facets_.empty(); }
    bool is_pure() const noexcept;

    /// Vertices that occur in some face, ascending.
    std::vector<Vertex> vertices() const;

    friend bool operator==(const FacetComplex&, const FacetComplex&) = default;

private:
    int n_ = 0;
    int dimension_ = -1;
    std::vector<Simplex> facets_;
};

/// A union of difference cycles sharing modulus n and dimension d.
class CyclicComplex {
public:
    CyclicComplex() = default;

    /// Duplicate cycles are merged. Throws InvalidCycle if a cycle has the
    /// wrong modulus or dimension.
    CyclicComplex(int n, int d, std::vector<DifferenceCycle> cycles);

    /// Infers n and d from the cycles; throws InvalidCycle if `cycles` is empty
    /// or the cycles disagree.
    static CyclicComplex from_cycles(std::vector<DifferenceCycle> cycles);

    int vertex_count() const noexcept { return n_; }
    int dimension() const noexcept { return d_; }
    const std::vector<DifferenceCycle>& cycles() const& noexcept { return cycles_; }
    std::vector<DifferenceCycle> cycles() && noexcept { return std::move(cycles_); }
    std::size_t size() const noexcept { return cycles_.size(); }
    bool empty() const noexcept { return cycles_.empty(); }

    friend bool operator==(const CyclicComplex&, const CyclicComplex&) = default;

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<DifferenceCycle> cycles_;
};

FacetComplex expand(const DifferenceCycle& c);
FacetComplex expand(const CyclicComplex& complex);

/// The complex λC. Throws InvalidMultiplier unless gcd(λ, n) = 1.
CyclicComplex multiply(const CyclicComplex& complex, int lambda);

/// Units λ of Z_n with λC = C, ascending.
std::vector<int> multipliers(const CyclicComplex& complex);

/// Units of Z_n, ascending.
std::vector<int> units_mod(int n);

/// Multiplicative inverse of `a` modulo `n`; throws InvalidMultiplier if none exists.
int inverse_mod(int a, int n);

// Text notation:
//   CYCLE   := "(" INT (":" INT)+ ")"
//   COMPLEX := "{" CYCLE ("," CYCLE)* "}"
// Whitespace is ignored; every INT must be >= 1.

DifferenceCycle parse_cycle(std::string_view text);
CyclicComplex parse_complex(std::string_view text);

/// Parses either a CYCLE or a COMPLEX and keeps every cycle in the rotation
/// it was written in.
std::vector<Parts> parse_part_lists(std::string_view text);

/// Strips the `\!` and `\,` spacing marks, `$` signs and brace escapes that typeset
/// tables carry.
std::string strip_table_markup(std::string_view text);

std::string format(const DifferenceCycle& c);
std::string format(const CyclicComplex& complex);
std::string format_parts(const Parts& parts);

}  // namespace diffcyc
