#pragma once

// Integral simplicial homology through Smith normal form, plus the cheap
// global invariants (orientability, 2-neighborliness).

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diffcyc/cycle.hpp"

namespace diffcyc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    bool is_zero() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Nonzero invariant factors d_1 | d_2 | ... | d_r (r = rank), all positive.
///
/// Runs on 64-bit words with overflow checks and restarts in arbitrary
/// precision when a check fires.
std::vector<BigInt> smith_normal_form(const IntegerMatrix& matrix);

/// Which arithmetic the last smith_normal_form call on this thread finished in.
bool last_snf_used_bigint();

/// Simplicial boundary ∂_k : C_k -> C_{k-1} with rows indexed by faces(K, k-1) and
/// columns by faces(K, k), ascending-vertex orientation. Throws Error unless 1 <= k <= dim K.
IntegerMatrix boundary_matrix(const FacetComplex& complex, int k);

struct HomologyGroups {
    std::vector<int> betti;
    std::vector<std::vector<long long>> torsion;

    /// e.g. "(Z, Z^3, Z_2, 0)".
    std::string to_string() const;
    friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

/// H_0 .. H_d of the downward closure.
HomologyGroups homology(const FacetComplex& complex);

/// Consistent facet orientations exist. Throws NotApplicable unless the input
/// is a closed connected pseudomanifold.
bool is_orientable(const FacetComplex& complex);

/// Every pair of the n vertices spans an edge.
bool is_2_neighborly(const FacetComplex& complex);

}  // namespace diffcyc
