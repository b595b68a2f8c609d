#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diffcyc/cycle.hpp"

namespace diffcyc {

/// A letter is a nonzero generator index, negative for the inverse.
using Word = std::vector<int>;

struct GroupPresentation {
    int generators = 0;
    std::vector<Word> relators;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Free and cyclic reduction of every relator; empty relators are dropped.
GroupPresentation normalized(GroupPresentation p);

/// Edge-path presentation: BFS spanning tree from the smallest vertex (neighbours
/// ascending), one generator per remaining edge {u < v} in lexicographic order,
/// one relator e(a,b) e(b,c) e(a,c)^-1 per triangle {a < b < c}.
/// Throws NotApplicable for disconnected complexes or dimension below 2.
GroupPresentation fundamental_group(const FacetComplex& complex);

inline constexpr int kDefaultTietzeBudget = 10'000;

/// Eliminates generators occurring exactly once in some relator, shortest relator
/// first, until no such generator remains or `budget` rewrites have been spent.
GroupPresentation tietze_simplify(const GroupPresentation& p, int budget = kDefaultTietzeBudget);

struct Abelianization {
    int rank = 0;
    std::vector<long long> torsion;
    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianization(const GroupPresentation& p);

/// GAP syntax, e.g. "F := FreeGroup(1); G := F / [ F.1^3 ];".
std::string export_presentation(const GroupPresentation& p);

/// Inverse of export_presentation. Throws ParseError.
GroupPresentation parse_presentation(std::string_view text);

}  // namespace diffcyc
