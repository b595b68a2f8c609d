#include "diffcyc/cycle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "diffcyc/error.hpp"

namespace diffcyc {

namespace {

Parts min_rotation(std::span<const int> parts) {
    Parts best(parts.begin(), parts.end());
    Parts rotated = best;
    for (std::size_t shift = 1; shift < parts.size(); ++shift) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        if (rotated < best) best = rotated;
    }
    return best;
}

}  // namespace

DifferenceCycle::DifferenceCycle(std::span<const int> parts) {
    if (parts.size() < 2) throw InvalidCycle("a difference cycle needs at least two entries");
    for (int a : parts) {
        if (a < 1) throw InvalidCycle("difference cycle entries must be positive, got " + std::to_string(a));
    }
    parts_ = min_rotation(parts);
    modulus_ = std::accumulate(parts_.begin(), parts_.end(), 0);

    // Partial sums are distinct residues because every entry is positive.
    Simplex g = generator();
    if (std::adjacent_find(g.begin(), g.end(), std::greater_equal<>()) != g.end() || g.back() >= modulus_)
        throw InternalError("partial sums of a difference cycle are not distinct");
}

DifferenceCycle::DifferenceCycle(std::initializer_list<int> parts)
    : DifferenceCycle(std::span<const int>(parts.begin(), parts.size())) {}

Simplex DifferenceCycle::generator() const {
    Simplex g;
    g.reserve(parts_.size());
    int sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        g.push_back(sum);
        sum += parts_[i];
    }
    return g;
}

DifferenceCycle canonicalize(std::span<const int> parts) { return DifferenceCycle(parts); }

int orbit_length(const DifferenceCycle& c) {
    const Parts& a = c.parts();
    const int size = static_cast<int>(a.size());
    for (int k = 1; k <= size; ++k) {
        if (size % k != 0) continue;
        bool periodic = true;
        for (int i = 0; i + k < size && periodic; ++i) periodic = a[i] == a[i + k];
        if (periodic) return std::accumulate(a.begin(), a.begin() + k, 0);
    }
    return c.modulus();
}

Parts gaps_of(const Simplex& simplex, int n) {
    Parts gaps;
    gaps.reserve(simplex.size());
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) gaps.push_back(simplex[i + 1] - simplex[i]);
    gaps.push_back(n - simplex.back() + simplex.front());
    return gaps;
}

DifferenceCycle cycle_of(const Simplex& simplex, int n) { return DifferenceCycle(gaps_of(simplex, n)); }

FacetComplex::FacetComplex(int n, std::vector<Simplex> facets) : n_(n), facets_(std::move(facets)) {
    for (Simplex& f : facets_) {
        std::sort(f.begin(), f.end());
        if (f.empty()) throw InvalidCycle("empty face in facet list");
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidCycle("face with a repeated vertex");
        if (f.front() < 0 || f.back() >= n_) throw InvalidCycle("face vertex outside 0..n-1");
        dimension_ = std::max(dimension_, static_cast<int>(f.size()) - 1);
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

bool FacetComplex::is_pure() const noexcept {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return static_cast<int>(f.size()) == dimension_ + 1; });
}

std::vector<Vertex> FacetComplex::vertices() const {
    std::vector<char> seen(n_, 0);
    for (const Simplex& f : facets_)
        for (Vertex v : f) seen[v] = 1;
    std::vector<Vertex> out;
    for (int v = 0; v < n_; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

CyclicComplex::CyclicComplex(int n, int d, std::vector<DifferenceCycle> cycles)
    : n_(n), d_(d), cycles_(std::move(cycles)) {
    for (const DifferenceCycle& c : cycles_) {
        if (c.modulus() != n_ || c.dimension() != d_) {
            throw InvalidCycle("cycle " + format(c) + " does not live on n=" + std::to_string(n_) +
                               ", d=" + std::to_string(d_));
        }
    }
    std::sort(cycles_.begin(), cycles_.end());
    cycles_.erase(std::unique(cycles_.begin(), cycles_.end()), cycles_.end());
}

CyclicComplex CyclicComplex::from_cycles(std::vector<DifferenceCycle> cycles) {
    if (cycles.empty()) throw InvalidCycle("cannot infer n and d from an empty cycle list");
    const int n = cycles.front().modulus();
    const int d = cycles.front().dimension();
    return CyclicComplex(n, d, std::move(cycles));
}

FacetComplex expand(const DifferenceCycle& c) { return expand(CyclicComplex(c.modulus(), c.dimension(), {c})); }

FacetComplex expand(const CyclicComplex& complex) {
    const int n = complex.vertex_count();
    std::vector<Simplex> facets;
    for (const DifferenceCycle& c : complex.cycles()) {
        const Simplex g = c.generator();
        const int length = orbit_length(c);
        for (int shift = 0; shift < length; ++shift) {
            Simplex f(g.size());
            std::transform(g.begin(), g.end(), f.begin(), [&](Vertex v) { return (v + shift) % n; });
            facets.push_back(std::move(f));
        }
    }
    return FacetComplex(n, std::move(facets));
}

std::vector<int> units_mod(int n) {
    std::vector<int> out;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    if (n == 1) out.push_back(0);
    return out;
}

int inverse_mod(int a, int n) {
    a %= n;
    if (a < 0) a += n;
    long long old_r = a, r = n, old_s = 1, s = 0;
    while (r != 0) {
        const long long q = old_r / r;
        std::tie(old_r, r) = std::pair(r, old_r - q * r);
        std::tie(old_s, s) = std::pair(s, old_s - q * s);
    }
    if (old_r != 1) throw InvalidMultiplier(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
    long long inv = old_s % n;
    if (inv < 0) inv += n;
    return static_cast<int>(inv);
}

CyclicComplex multiply(const CyclicComplex& complex, int lambda) {
    const int n = complex.vertex_count();
    int lam = lambda % n;
    if (lam < 0) lam += n;
    if (std::gcd(lam, n) != 1) {
        throw InvalidMultiplier(std::to_string(lambda) + " is not a unit modulo " + std::to_string(n));
    }
    std::vector<DifferenceCycle> out;
    out.reserve(complex.size());
    for (const DifferenceCycle& c : complex.cycles()) {
        Simplex image = c.generator();
        for (Vertex& v : image) v = static_cast<int>((static_cast<long long>(v) * lam) % n);
        std::sort(image.begin(), image.end());
        out.push_back(cycle_of(image, n));
    }
    return CyclicComplex(n, complex.dimension(), std::move(out));
}

std::vector<int> multipliers(const CyclicComplex& complex) {
    std::vector<int> out;
    for (int lambda : units_mod(complex.vertex_count()))
        if (multiply(complex, lambda) == complex) out.push_back(lambda);
    return out;
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
        if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
        ++pos_;
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) {
            if (pos_ >= text_.size()) throw ParseError("expected an integer but input ended", pos_);
            throw ParseError(std::string("expected an integer, found '") + text_[pos_] + "'", pos_);
        }
        if (value < 1) throw ParseError("cycle entries must be >= 1", start);
        return static_cast<int>(value);
    }

    Parts cycle() {
        expect('(');
        Parts parts{integer()};
        expect(':');
        parts.push_back(integer());
        while (peek() == ':') {
            expect(':');
            parts.push_back(integer());
        }
        expect(')');
        return parts;
    }

    std::size_t position() const noexcept { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void check_consistent(const std::vector<Parts>& lists, const std::vector<std::size_t>& starts) {
    for (std::size_t i = 1; i < lists.size(); ++i) {
        const int n0 = std::accumulate(lists[0].begin(), lists[0].end(), 0);
        const int ni = std::accumulate(lists[i].begin(), lists[i].end(), 0);
        if (ni != n0) {
            throw ParseError("cycle sums to " + std::to_string(ni) + " but the first cycle sums to " +
                                 std::to_string(n0),
                             starts[i]);
        }
        if (lists[i].size() != lists[0].size()) throw ParseError("cycles of different dimensions", starts[i]);
    }
}

}  // namespace

std::vector<Parts> parse_part_lists(std::string_view text) {
    Scanner scan(text);
    std::vector<Parts> lists;
    std::vector<std::size_t> starts;
    if (scan.peek() == '{') {
        scan.expect('{');
        starts.push_back(scan.position());
        lists.push_back(scan.cycle());
        while (scan.peek() == ',') {
            scan.expect(',');
            scan.skip_space();
            starts.push_back(scan.position());
            lists.push_back(scan.cycle());
        }
        scan.expect('}');
    } else {
        scan.skip_space();
        starts.push_back(scan.position());
        lists.push_back(scan.cycle());
    }
    if (!scan.at_end()) throw ParseError("trailing characters", scan.position());
    check_consistent(lists, starts);
    return lists;
}

DifferenceCycle parse_cycle(std::string_view text) {
    Scanner scan(text);
    Parts parts = scan.cycle();
    if (!scan.at_end()) throw ParseError("trailing characters", scan.position());
    return DifferenceCycle(parts);
}

CyclicComplex parse_complex(std::string_view text) {
    std::vector<DifferenceCycle> cycles;
    for (const Parts& p : parse_part_lists(text)) cycles.emplace_back(p);
    return CyclicComplex::from_cycles(std::move(cycles));
}

std::string strip_table_markup(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\\' && i + 1 < text.size()) {
            const char next = text[i + 1];
            if (next == '!' || next == ',') {
                ++i;
                continue;
            }
            if (next == '{' || next == '}') {
                out.push_back(next);
                ++i;
                continue;
            }
        }
        if (text[i] == '$') continue;
        out.push_back(text[i]);
    }
    return out;
}

std::string format_parts(const Parts& parts) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ':';
        out << parts[i];
    }
    out << ')';
    return out.str();
}

std::string format(const DifferenceCycle& c) { return format_parts(c.parts()); }

std::string format(const CyclicComplex& complex) {
    std::string out = "{";
    for (std::size_t i = 0; i < complex.size(); ++i) {
        if (i) out += ',';
        out += format(complex.cycles()[i]);
    }
    out += '}';
    return out;
}

}  // namespace diffcyc
