#include "diffcyc/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "diffcyc/error.hpp"
#include "diffcyc/homology.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

namespace {

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

Word reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi));
}

// Relators equal up to cyclic rotation and inversion define the same normal closure.
Word conjugacy_key(const Word& w) {
    Word best = w;
    for (const Word& base : {w, inverse(w)}) {
        Word r = base;
        for (std::size_t s = 0; s < r.size(); ++s) {
            std::rotate(r.begin(), r.begin() + 1, r.end());
            best = std::min(best, r);
        }
    }
    return best;
}

}  // namespace

GroupPresentation normalized(GroupPresentation p) {
    std::vector<Word> kept;
    std::set<Word> seen;
    for (const Word& r : p.relators) {
        Word w = reduce(r);
        if (!w.empty() && seen.insert(conjugacy_key(w)).second) kept.push_back(std::move(w));
    }
    p.relators = std::move(kept);
    return p;
}

GroupPresentation fundamental_group(const FacetComplex& complex) {
    if (complex.dimension() < 2) throw NotApplicable("fundamental group needs a complex of dimension at least 2");
    if (!is_connected(complex)) throw NotApplicable("fundamental group needs a connected complex");

    const int n = complex.vertex_count();
    const auto edges = faces(complex, 1);
    std::vector<std::vector<Vertex>> adjacent(n);
    for (const Simplex& e : edges) {
        adjacent[e[0]].push_back(e[1]);
        adjacent[e[1]].push_back(e[0]);
    }
    for (auto& list : adjacent) std::sort(list.begin(), list.end());

    std::set<std::pair<Vertex, Vertex>> tree;
    std::vector<char> seen(n, 0);
    const Vertex root = complex.vertices().front();
    std::queue<Vertex> todo;
    todo.push(root);
    seen[root] = 1;
    while (!todo.empty()) {
        const Vertex u = todo.front();
        todo.pop();
        for (Vertex v : adjacent[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            tree.insert({std::min(u, v), std::max(u, v)});
            todo.push(v);
        }
    }

    std::map<std::pair<Vertex, Vertex>, int> generator;
    for (const Simplex& e : edges) {
        const std::pair<Vertex, Vertex> key{e[0], e[1]};
        if (!tree.contains(key)) generator.emplace(key, static_cast<int>(generator.size()) + 1);
    }

    GroupPresentation p;
    p.generators = static_cast<int>(generator.size());
    auto letter = [&](Vertex u, Vertex v) {
        auto it = generator.find({u, v});
        return it == generator.end() ? 0 : it->second;
    };
    for (const Simplex& t : faces(complex, 2)) {
        Word w;
        if (int x = letter(t[0], t[1])) w.push_back(x);
        if (int x = letter(t[1], t[2])) w.push_back(x);
        if (int x = letter(t[0], t[2])) w.push_back(-x);
        p.relators.push_back(std::move(w));
    }
    return normalized(std::move(p));
}

GroupPresentation tietze_simplify(const GroupPresentation& input, int budget) {
    GroupPresentation p = normalized(input);
    int steps = 0;
    std::vector<int> count(p.generators + 1, 0);

    while (steps < budget) {
        int best_relator = -1, best_generator = 0;
        std::size_t best_length = 0;
        for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
            const Word& w = p.relators[r];
            if (best_relator >= 0 && w.size() >= best_length) continue;
            for (int x : w) ++count[std::abs(x)];
            int pick = 0;
            for (int x : w)
                if (count[std::abs(x)] == 1 && (pick == 0 || std::abs(x) < pick)) pick = std::abs(x);
            for (int x : w) count[std::abs(x)] = 0;
            if (pick != 0) {
                best_relator = r;
                best_generator = pick;
                best_length = w.size();
            }
        }
        if (best_relator < 0) break;

        // Rotate the relator to x^e w, so that x = w^-1 (e = 1) or x = w (e = -1).
        Word r = p.relators[best_relator];
        const auto at = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best_generator; });
        std::rotate(r.begin(), at, r.end());
        const bool positive = r.front() > 0;
        const Word rest(r.begin() + 1, r.end());
        const Word image = positive ? inverse(rest) : rest;
        const Word image_inverse = inverse(image);

        p.relators.erase(p.relators.begin() + best_relator);
        for (Word& w : p.relators) {
            if (std::none_of(w.begin(), w.end(), [&](int x) { return std::abs(x) == best_generator; })) continue;
            Word rewritten;
            for (int x : w) {
                if (x == best_generator) {
                    rewritten.insert(rewritten.end(), image.begin(), image.end());
                } else if (x == -best_generator) {
                    rewritten.insert(rewritten.end(), image_inverse.begin(), image_inverse.end());
                } else {
                    rewritten.push_back(x);
                }
            }
            w = std::move(rewritten);
            ++steps;
        }
        for (Word& w : p.relators)
            for (int& x : w)
                if (std::abs(x) > best_generator) x += x > 0 ? -1 : 1;
        --p.generators;
        ++steps;
        p = normalized(std::move(p));
    }
    return p;
}

Abelianization abelianization(const GroupPresentation& p) {
    const std::size_t rows = p.relators.size();
    const std::size_t cols = static_cast<std::size_t>(p.generators);
    std::vector<long long> entries(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (int x : p.relators[r]) entries[r * cols + static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;

    const auto factors = smith_normal_form(IntegerMatrix(rows, cols, entries));
    Abelianization a;
    a.rank = p.generators - static_cast<int>(factors.size());
    for (const BigInt& f : factors) {
        if (f == 1) continue;
        if (f > BigInt(std::numeric_limits<long long>::max())) throw InternalError("torsion coefficient exceeds 64 bits");
        a.torsion.push_back(f.convert_to<long long>());
    }
    return a;
}

std::string export_presentation(const GroupPresentation& p) {
    std::ostringstream out;
    out << "F := FreeGroup(" << p.generators << "); G := F / [";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        out << (r ? ", " : " ");
        const Word& w = p.relators[r];
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            const long long exponent = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
            if (i) out << '*';
            out << "F." << std::abs(w[i]);
            if (exponent != 1) out << '^' << exponent;
            i = j;
        }
    }
    out << " ];";
    return out.str();
}

namespace {

class PresentationScanner {
public:
    explicit PresentationScanner(std::string_view text) : text_(text) {}

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(std::string_view token) {
        skip();
        if (text_.substr(pos_, token.size()) != token)
            throw ParseError("expected '" + std::string(token) + "'", pos_);
        pos_ += token.size();
    }

    long long integer() {
        skip();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (value > 1'000'000'000) throw ParseError("integer too large", start);
        }
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return negative ? -value : value;
    }

    bool at_end() {
        skip();
        return pos_ == text_.size();
    }

    std::size_t position() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Word parse_word(PresentationScanner& scan, int generators) {
    Word w;
    for (;;) {
        scan.expect("F.");
        const std::size_t at = scan.position();
        const long long g = scan.integer();
        if (g < 1 || g > generators) throw ParseError("generator index out of range", at);
        long long exponent = 1;
        if (scan.peek('^')) {
            scan.expect("^");
            exponent = scan.integer();
        }
        for (long long i = 0; i < std::abs(exponent); ++i) w.push_back(static_cast<int>(exponent > 0 ? g : -g));
        if (!scan.peek('*')) return w;
        scan.expect("*");
    }
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
    PresentationScanner scan(text);
    GroupPresentation p;
    scan.expect("F");
    scan.expect(":=");
    scan.expect("FreeGroup(");
    const long long g = scan.integer();
    if (g < 0) throw ParseError("negative generator count", scan.position());
    p.generators = static_cast<int>(g);
    scan.expect(");");
    scan.expect("G");
    scan.expect(":=");
    scan.expect("F");
    scan.expect("/");
    scan.expect("[");
    if (!scan.peek(']')) {
        p.relators.push_back(parse_word(scan, p.generators));
        while (scan.peek(',')) {
            scan.expect(",");
            p.relators.push_back(parse_word(scan, p.generators));
        }
    }
    scan.expect("]");
    scan.expect(";");
    if (!scan.at_end()) throw ParseError("trailing characters", scan.position());
    return p;
}

}  // namespace diffcyc
