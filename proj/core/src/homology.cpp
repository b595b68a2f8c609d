#include "diffcyc/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "diffcyc/error.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& row_major)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (row_major.size() != rows * cols) throw Error("matrix data does not match its dimensions");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = row_major[i];
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw Error("matrix product dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow instead of wrapping.
struct Word {
    using value_type = long long;
    static value_type sub_mul(value_type a, value_type q, value_type b) {
        value_type prod = 0, out = 0;
        if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
        return out;
    }
    static value_type abs(value_type a) {
        if (a == std::numeric_limits<value_type>::min()) throw Overflow{};
        return a < 0 ? -a : a;
    }
};

struct Big {
    using value_type = BigInt;
    static value_type sub_mul(const value_type& a, const value_type& q, const value_type& b) { return a - q * b; }
    static value_type abs(const value_type& a) { return a < 0 ? value_type(-a) : a; }
};

thread_local bool snf_used_bigint = false;

// Reduces to a diagonal form with unimodular row and column operations and
// returns the absolute values of the nonzero diagonal entries.
template <class Arith>
std::vector<typename Arith::value_type> diagonalize(std::vector<typename Arith::value_type> a, std::size_t rows,
                                                    std::size_t cols) {
    using T = typename Arith::value_type;
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
    std::vector<T> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest-magnitude pivot in the trailing block.
        std::size_t pr = rows, pc = cols;
        T best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                const T& x = at(r, c);
                if (x == 0) continue;
                T m = Arith::abs(x);
                if (pr == rows || m < best) {
                    best = m;
                    pr = r;
                    pc = c;
                    if (best == 1) goto found;
                }
            }
    found:
        if (pr == rows) break;

        for (;;) {
            if (pr != t)
                for (std::size_t c = t; c < cols; ++c) std::swap(at(t, c), at(pr, c));
            if (pc != t)
                for (std::size_t r = t; r < rows; ++r) std::swap(at(r, t), at(r, pc));

            const T pivot = at(t, t);
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (at(r, t) == 0) continue;
                const T q = at(r, t) / pivot;
                if (q != 0)
                    for (std::size_t c = t; c < cols; ++c)
                        if (at(t, c) != 0) at(r, c) = Arith::sub_mul(at(r, c), q, at(t, c));
                if (at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (at(t, c) == 0) continue;
                const T q = at(t, c) / pivot;
                if (q != 0)
                    for (std::size_t r = t; r < rows; ++r)
                        if (at(r, t) != 0) at(r, c) = Arith::sub_mul(at(r, c), q, at(r, t));
                if (at(t, c) != 0) clean = false;
            }
            if (clean) break;

            // A remainder survived; the smallest one in the pivot row/column becomes the new pivot.
            pr = t;
            pc = t;
            best = Arith::abs(at(t, t));
            for (std::size_t r = t + 1; r < rows; ++r)
                if (at(r, t) != 0 && Arith::abs(at(r, t)) < best) {
                    best = Arith::abs(at(r, t));
                    pr = r;
                    pc = t;
                }
            for (std::size_t c = t + 1; c < cols; ++c)
                if (at(t, c) != 0 && Arith::abs(at(t, c)) < best) {
                    best = Arith::abs(at(t, c));
                    pr = t;
                    pc = c;
                }
        }
        diag.push_back(Arith::abs(at(t, t)));
    }
    return diag;
}

// diag(a, b) ~ diag(gcd, lcm); repeated pairwise this yields the divisibility chain.
std::vector<BigInt> normalize_chain(std::vector<BigInt> diag) {
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
            if (g == diag[i]) continue;
            BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

}  // namespace

bool last_snf_used_bigint() { return snf_used_bigint; }

namespace {

std::vector<BigInt> snf_of_words(std::vector<long long> words, std::size_t rows, std::size_t cols) {
    snf_used_bigint = false;
    try {
        std::vector<BigInt> diag;
        for (long long x : diagonalize<Word>(words, rows, cols)) diag.emplace_back(x);
        return normalize_chain(std::move(diag));
    } catch (const Overflow&) {
    }
    snf_used_bigint = true;
    std::vector<BigInt> big(words.begin(), words.end());
    return normalize_chain(diagonalize<Big>(std::move(big), rows, cols));
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntegerMatrix& matrix) {
    const std::size_t rows = matrix.rows(), cols = matrix.cols();
    std::vector<long long> words(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const BigInt& x = matrix(r, c);
            if (x > std::numeric_limits<long long>::max() || x < -std::numeric_limits<long long>::max()) {
                snf_used_bigint = true;
                std::vector<BigInt> big(rows * cols);
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j) big[i * cols + j] = matrix(i, j);
                return normalize_chain(diagonalize<Big>(std::move(big), rows, cols));
            }
            words[r * cols + c] = static_cast<long long>(x);
        }
    return snf_of_words(std::move(words), rows, cols);
}

namespace {

std::map<Simplex, std::size_t> index_faces(const std::vector<Simplex>& list) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], i);
    return index;
}

// Sparse boundary as row-major words; rows = (k-1)-faces, cols = k-faces.
std::vector<long long> boundary_words(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper) {
    const auto index = index_faces(lower);
    std::vector<long long> m(lower.size() * upper.size(), 0);
    for (std::size_t c = 0; c < upper.size(); ++c) {
        const Simplex& s = upper[c];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            m[index.at(face) * upper.size() + c] = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

IntegerMatrix boundary_matrix(const FacetComplex& complex, int k) {
    if (k < 1 || k > complex.dimension()) {
        throw Error("boundary dimension " + std::to_string(k) + " outside 1.." + std::to_string(complex.dimension()));
    }
    const auto lower = faces(complex, k - 1);
    const auto upper = faces(complex, k);
    return IntegerMatrix(lower.size(), upper.size(), boundary_words(lower, upper));
}

std::string HomologyGroups::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (k) out << ", ";
        std::vector<std::string> terms;
        if (betti[k] == 1) terms.push_back("Z");
        if (betti[k] > 1) terms.push_back("Z^" + std::to_string(betti[k]));
        for (long long t : torsion[k]) terms.push_back("Z_" + std::to_string(t));
        if (terms.empty()) out << '0';
        for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " + " : "") << terms[i];
    }
    out << ')';
    return out.str();
}

HomologyGroups homology(const FacetComplex& complex) {
    const int d = complex.dimension();
    HomologyGroups h;
    if (d < 0) return h;

    std::vector<std::vector<Simplex>> chains(d + 1);
    for (int k = 0; k <= d; ++k) chains[k] = faces(complex, k);

    // rank[k] and torsion[k] describe ∂_k : C_k -> C_{k-1}; ∂_0 = ∂_{d+1} = 0.
    std::vector<long long> rank(d + 2, 0);
    std::vector<std::vector<long long>> factors(d + 2);
    for (int k = 1; k <= d; ++k) {
        const auto diag =
            snf_of_words(boundary_words(chains[k - 1], chains[k]), chains[k - 1].size(), chains[k].size());
        rank[k] = static_cast<long long>(diag.size());
        for (const BigInt& x : diag)
            if (x > 1) {
                if (x > std::numeric_limits<long long>::max()) throw Error("torsion coefficient exceeds 64 bits");
                factors[k].push_back(static_cast<long long>(x));
            }
    }

    h.betti.resize(d + 1);
    h.torsion.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
        h.betti[k] = static_cast<int>(static_cast<long long>(chains[k].size()) - rank[k] - rank[k + 1]);
        h.torsion[k] = factors[k + 1];
    }
    return h;
}

bool is_orientable(const FacetComplex& complex) {
    if (!complex.is_pure() || complex.empty() || !is_closed_pseudomanifold(complex) || !is_connected(complex)) {
        throw NotApplicable("orientability needs a closed connected pseudomanifold");
    }
    const auto& facets = complex.facets();
    // ridge -> (facet, position of the removed vertex)
    std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t i = 0; i < facets[f].size(); ++i) {
            Simplex r;
            for (std::size_t j = 0; j < facets[f].size(); ++j)
                if (j != i) r.push_back(facets[f][j]);
            ridges[r].emplace_back(f, i);
        }
    std::vector<std::vector<std::pair<std::size_t, int>>> adjacency(facets.size());
    for (const auto& [ridge, inc] : ridges) {
        const auto [f1, i1] = inc[0];
        const auto [f2, i2] = inc[1];
        // Orientations s1, s2 are consistent iff s1 (-1)^i1 = -s2 (-1)^i2.
        const int relation = ((i1 + i2) % 2 == 0) ? -1 : 1;
        adjacency[f1].emplace_back(f2, relation);
        adjacency[f2].emplace_back(f1, relation);
    }
    std::vector<int> sign(facets.size(), 0);
    std::queue<std::size_t> queue;
    sign[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
        const std::size_t f = queue.front();
        queue.pop();
        for (const auto& [g, relation] : adjacency[f]) {
            const int want = sign[f] * relation;
            if (sign[g] == 0) {
                sign[g] = want;
                queue.push(g);
            } else if (sign[g] != want) {
                return false;
            }
        }
    }
    return true;
}

bool is_2_neighborly(const FacetComplex& complex) {
    const long long n = complex.vertex_count();
    if (complex.dimension() < 1) return n <= 1;
    return static_cast<long long>(faces(complex, 1).size()) == n * (n - 1) / 2;
}

}  // namespace diffcyc
