#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <diffcyc/enumerate.hpp>
#include <diffcyc/error.hpp>
#include <diffcyc/registry.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

namespace diffcyc {
namespace {

std::vector<oracle::Parts> parts_of(const CyclicComplex& c) {
    std::vector<oracle::Parts> out;
    for (const auto& cyc : c.cycles()) out.push_back(cyc.parts());
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(RidgeOrbits, BoundaryOfSimplex) {
    const auto orbits = ridge_orbits(parse_cycle("(1:1:1:2)"));
    std::set<std::string> names;
    int incidence = 0;
    for (const RidgeOrbit& r : orbits) {
        names.insert(format(r.triangle));
        incidence += r.multiplicity * orbit_length(r.triangle);
    }
    EXPECT_EQ(names, (std::set<std::string>{"(1:1:3)", "(1:2:2)"}));
    EXPECT_EQ(incidence, 20);
}

TEST(RidgeOrbits, ShortCycle) {
    const auto orbits = ridge_orbits(parse_cycle("(2:5:2:5)"));
    int incidence = 0;
    for (const RidgeOrbit& r : orbits) incidence += r.multiplicity * orbit_length(r.triangle);
    EXPECT_EQ(incidence, 28);
    EXPECT_EQ(orbits.size(), 2u);  // (2:5:7) and (2:7:5)
}

TEST(RidgeOrbits, MultiplicityIsTriangleFacetIncidence) {
    for (int n = 5; n <= 16; ++n) {
        for (const DifferenceCycle& c : all_difference_cycles(n)) {
            const auto facets = oracle::orbit(c.parts());
            int incidence = 0;
            for (const RidgeOrbit& r : ridge_orbits(c)) {
                incidence += r.multiplicity * orbit_length(r.triangle);
                // pick one triangle of the orbit and count facets containing it
                const oracle::Face t = [&] {
                    oracle::Face g = oracle::generator(r.triangle.parts());
                    std::sort(g.begin(), g.end());
                    return g;
                }();
                int containing = 0;
                for (const auto& f : facets) containing += std::includes(f.begin(), f.end(), t.begin(), t.end());
                ASSERT_EQ(containing, r.multiplicity) << format(c) << " " << format(r.triangle);
            }
            ASSERT_EQ(incidence, 4 * orbit_length(c));
        }
    }
    EXPECT_THROW(ridge_orbits(parse_cycle("(1:2:4)")), UnsupportedDimension);
}

TEST(Classify, TableRowsThrough12) {
    const std::vector<std::pair<int, int>> rows{{1, 1}, {1, 1}, {3, 1}, {3, 2}, {6, 2}, {19, 8}, {40, 6}, {56, 20}};
    for (int n = 5; n <= 12; ++n) {
        const EnumerationResult r = classify(n);
        EXPECT_TRUE(r.complete);
        EXPECT_EQ(r.complexes.size(), static_cast<std::size_t>(rows[n - 5].first)) << n;
        EXPECT_EQ(r.iso_classes.size(), static_cast<std::size_t>(rows[n - 5].second)) << n;
        EXPECT_LE(r.iso_classes.size(), r.multiplier_classes.size());
        EXPECT_LE(r.multiplier_classes.size(), r.complexes.size());
    }
}

TEST(Classify, MatchesSubsetBruteForce) {
    for (int n = 5; n <= 8; ++n) {
        std::set<std::vector<oracle::Parts>> got;
        for (const CyclicComplex& c : classify(n).complexes) got.insert(parts_of(c));
        EXPECT_EQ(got, oracle::brute_force_classification(n)) << n;
    }
}

TEST(Classify, EveryComplexPassesOracles) {
    for (int n = 5; n <= 10; ++n) {
        for (const CyclicComplex& c : classify(n).complexes) {
            const auto facets = oracle::expand(parts_of(c));
            ASSERT_TRUE(oracle::is_3_manifold_all_links(facets, n)) << format(c);
            // every triangle lies in exactly two facets
            std::map<oracle::Face, int> count;
            for (const auto& f : facets)
                for (int skip = 0; skip < 4; ++skip) {
                    oracle::Face t;
                    for (int i = 0; i < 4; ++i)
                        if (i != skip) t.push_back(f[i]);
                    ++count[t];
                }
            for (const auto& [t, k] : count) ASSERT_EQ(k, 2) << format(c);
        }
    }
}

TEST(Classify, ClassesPartitionAndRefine) {
    const EnumerationResult r = classify(10);
    std::vector<int> seen(r.complexes.size(), 0);
    for (const auto& cls : r.iso_classes)
        for (int i : cls) ++seen[i];
    for (int s : seen) EXPECT_EQ(s, 1);
    // each multiplier class sits inside one iso class
    for (const auto& mc : r.multiplier_classes) {
        int owner = -1;
        for (std::size_t k = 0; k < r.iso_classes.size(); ++k)
            if (std::find(r.iso_classes[k].begin(), r.iso_classes[k].end(), mc.front()) != r.iso_classes[k].end())
                owner = static_cast<int>(k);
        for (int i : mc)
            EXPECT_NE(std::find(r.iso_classes[owner].begin(), r.iso_classes[owner].end(), i), r.iso_classes[owner].end());
    }
}

TEST(Classify, ParallelMatchesSerial) {
    ClassifyOptions four;
    four.jobs = 4;
    const EnumerationResult a = classify(12);
    const EnumerationResult b = classify(12, four);
    EXPECT_EQ(a.complexes, b.complexes);
    EXPECT_EQ(a.iso_classes, b.iso_classes);
}

TEST(Classify, TimeLimitStopsEarly) {
    ClassifyOptions options;
    options.time_limit = std::chrono::duration<double>(1e-9);
    const EnumerationResult partial = classify(13, options);
    EXPECT_FALSE(partial.complete);
    EXPECT_LT(partial.stats.seeds_done, partial.stats.seeds_total);
}

TEST(Classify, CheckpointResume) {
    const scratch::TempDir dir;
    ClassifyOptions options;
    options.checkpoint = dir.path() / "n12.checkpoint.jsonl";
    options.checkpoint_every = 4;
    const EnumerationResult full = classify(12, options);

    // keep half of the finished seeds and tear the line after them
    std::vector<std::string> lines;
    {
        std::ifstream in(options.checkpoint);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
    }
    ASSERT_EQ(static_cast<int>(lines.size()), full.stats.seeds_total);
    const std::size_t keep = lines.size() / 2;
    {
        std::ofstream out(options.checkpoint, std::ios::trunc);
        for (std::size_t i = 0; i < keep; ++i) out << lines[i] << '\n';
        out << lines[keep].substr(0, lines[keep].size() / 2);
    }
    const EnumerationResult resumed = classify(12, options);
    EXPECT_TRUE(resumed.complete);
    EXPECT_EQ(resumed.stats.seeds_resumed, static_cast<int>(keep));
    EXPECT_EQ(resumed.complexes, full.complexes);
    EXPECT_EQ(resumed.iso_classes, full.iso_classes);
}

TEST(Classify, CheckpointForOtherNIsRejected) {
    const scratch::TempDir dir;
    ClassifyOptions options;
    options.checkpoint = dir.path() / "log.jsonl";
    classify(7, options);
    EXPECT_THROW(classify(8, options), RegistryError);
}

TEST(Isomorphic, Relabeling) {
    const CyclicComplex l0 = parse_complex(fixtures::kLens0);
    EXPECT_TRUE(isomorphic(expand(l0), expand(multiply(l0, 3)), true));
    EXPECT_TRUE(isomorphic(expand(l0), expand(multiply(l0, 3))));
    EXPECT_FALSE(isomorphic(expand(l0), expand(parse_complex("{(1:1:1:11),(1:2:4:7),(1:4:2:7),(1:4:7:2),(2:4:4:4)}"))));
}

TEST(Isomorphic, MatchesPermutationOracle) {
    for (int n = 6; n <= 8; ++n) {
        const auto cs = classify(n).complexes;
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                EXPECT_EQ(isomorphic(expand(cs[i]), expand(cs[j])),
                          oracle::isomorphic_by_permutation(oracle::expand(parts_of(cs[i])), oracle::expand(parts_of(cs[j])), n))
                    << format(cs[i]) << " " << format(cs[j]);
    }
}

TEST(Isomorphic, ConsistentWithClasses) {
    const EnumerationResult r = classify(10);
    std::vector<int> cls(r.complexes.size());
    for (std::size_t k = 0; k < r.iso_classes.size(); ++k)
        for (int i : r.iso_classes[k]) cls[i] = static_cast<int>(k);
    for (std::size_t i = 0; i < r.complexes.size(); ++i)
        for (std::size_t j = i + 1; j < r.complexes.size(); ++j)
            EXPECT_EQ(isomorphic(expand(r.complexes[i]), expand(r.complexes[j])), cls[i] == cls[j]);
}

TEST(Registry, StoreLoadRoundTrip) {
    const scratch::TempDir dir;
    const EnumerationResult r = classify(10);
    store(dir.path(), r);
    ASSERT_TRUE(has_registry(dir.path(), 10));
    const auto entries = load(dir.path(), 10);
    ASSERT_EQ(entries.size(), 19u);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        EXPECT_EQ(entries[i].index, static_cast<int>(i));
        EXPECT_EQ(entries[i].complex, r.complexes[i]);
        EXPECT_EQ(entries[i].fvector, f_vector(expand(r.complexes[i])));
    }
    EXPECT_EQ(registry(dir.path(), 10, 3), r.complexes[3]);
    const auto rows = manifest(dir.path());
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].complexes, 19u);
    EXPECT_EQ(rows[0].iso_classes, 8u);
    EXPECT_EQ(rows[0].sha256, sha256_hex(slurp(registry_file(dir.path(), 10))));
}

TEST(Registry, FiveVertexEntry) {
    const scratch::TempDir dir;
    store(dir.path(), classify(5));
    EXPECT_EQ(format(registry(dir.path(), 5, 0)), fixtures::kBoundary4Simplex);
}

TEST(Registry, Deterministic) {
    const scratch::TempDir a, b;
    store(a.path(), classify(11));
    ClassifyOptions options;
    options.jobs = 3;
    store(b.path(), classify(11, options));
    EXPECT_EQ(slurp(registry_file(a.path(), 11)), slurp(registry_file(b.path(), 11)));
    EXPECT_EQ(slurp(a.path() / "manifest.json"), slurp(b.path() / "manifest.json"));
}

TEST(Registry, Errors) {
    const scratch::TempDir dir;
    EXPECT_THROW(load(dir.path(), 7), RegistryError);
    store(dir.path(), classify(7));
    EXPECT_THROW(registry(dir.path(), 7, 3), RegistryError);
    EXPECT_THROW(registry(dir.path(), 7, -1), RegistryError);
    {
        std::ofstream f(registry_file(dir.path(), 7), std::ios::app);
        f << "\n";
    }
    EXPECT_THROW(load(dir.path(), 7), RegistryError);  // checksum mismatch
}

TEST(Registry, Sha256KnownAnswer) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace diffcyc
