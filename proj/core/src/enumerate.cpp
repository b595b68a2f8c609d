#include "diffcyc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "diffcyc/error.hpp"
#include "diffcyc/homology.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

std::vector<DifferenceCycle> all_difference_cycles(int n, int d) {
    if (d < 1) throw InvalidCycle("dimension must be at least 1");
    if (n < d + 2) throw InvalidCycle("need n >= d + 2, got n = " + std::to_string(n) + ", d = " + std::to_string(d));

    std::vector<DifferenceCycle> out;
    Parts parts(d + 1);
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == d) {
            parts[d] = left;
            DifferenceCycle c(parts);
            if (c.parts() == parts) out.push_back(std::move(c));
            return;
        }
        for (int a = 1; a <= left - (d - pos); ++a) {
            parts[pos] = a;
            fill(pos + 1, left - a);
        }
    };
    fill(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RidgeOrbit> ridge_orbits(const DifferenceCycle& c) {
    if (c.dimension() != 3) throw UnsupportedDimension("ridge orbits are defined for tetrahedral cycles");
    const int n = c.modulus();
    const Simplex g = c.generator();
    std::map<DifferenceCycle, int> deletions;
    for (std::size_t j = 0; j < g.size(); ++j) {
        Simplex t;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (i != j) t.push_back(g[i]);
        ++deletions[cycle_of(t, n)];
    }
    std::vector<RidgeOrbit> out;
    for (const auto& [t, count] : deletions) out.push_back({t, count * orbit_length(c) / orbit_length(t)});
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Orbit-level incidence data shared read-only by all workers.
struct Universe {
    int n = 0;
    std::vector<DifferenceCycle> tets;
    std::vector<std::vector<std::pair<int, int>>> ridges;  // per tet: (triangle index, multiplicity)
    std::vector<std::vector<int>> candidates;              // per triangle: tets meeting it, ascending

    explicit Universe(int n_) : n(n_), tets(all_difference_cycles(n_, 3)) {
        std::map<DifferenceCycle, int> index;
        std::vector<std::vector<RidgeOrbit>> orbits;
        for (const DifferenceCycle& c : tets) {
            orbits.push_back(ridge_orbits(c));
            for (const RidgeOrbit& r : orbits.back()) index.emplace(r.triangle, 0);
        }
        int next = 0;
        for (auto& [t, i] : index) i = next++;
        candidates.resize(index.size());
        for (std::size_t c = 0; c < tets.size(); ++c) {
            std::vector<std::pair<int, int>> list;
            for (const RidgeOrbit& r : orbits[c]) {
                const int t = index.at(r.triangle);
                list.push_back({t, r.multiplicity});
                candidates[t].push_back(static_cast<int>(c));
            }
            ridges.push_back(std::move(list));
        }
    }
};

class Searcher {
public:
    Searcher(const Universe& u, const std::atomic<bool>& stop, Clock::time_point deadline, bool limited)
        : u_(u), stop_(stop), deadline_(deadline), limited_(limited), counts_(u.candidates.size(), 0),
          chosen_(u.tets.size(), 0), forbidden_(u.tets.size(), 0) {}

    /// Returns false if interrupted.
    bool run_seed(int seed, std::vector<CyclicComplex>& found, SearchStats& stats) {
        found_ = &found;
        stats_ = &stats;
        aborted_ = false;
        std::fill(forbidden_.begin(), forbidden_.end(), 0);
        for (int j = 0; j < seed; ++j) forbidden_[j] = 1;
        if (fits(seed)) {
            add(seed, +1);
            dfs();
            add(seed, -1);
        }
        return !aborted_;
    }

private:
    bool fits(int c) const {
        return std::all_of(u_.ridges[c].begin(), u_.ridges[c].end(),
                           [&](const auto& r) { return counts_[r.first] + r.second <= 2; });
    }

    void add(int c, int sign) {
        for (const auto& [t, m] : u_.ridges[c]) counts_[t] += sign * m;
        chosen_[c] = sign > 0;
    }

    bool interrupted() {
        if (aborted_) return true;
        if ((++stats_->nodes & 0x3ff) == 0 && (stop_.load(std::memory_order_relaxed) ||
                                                 (limited_ && Clock::now() >= deadline_))) {
            aborted_ = true;
        }
        return aborted_;
    }

    void dfs() {
        if (interrupted()) return;
        int open = -1;
        for (std::size_t t = 0; t < counts_.size(); ++t) {
            if (counts_[t] == 1) {
                open = static_cast<int>(t);
                break;
            }
        }
        if (open < 0) {
            leaf();
            return;
        }
        std::vector<int> blocked;
        for (int c : u_.candidates[open]) {
            if (forbidden_[c] || chosen_[c] || !fits(c)) continue;
            add(c, +1);
            dfs();
            add(c, -1);
            if (aborted_) break;
            forbidden_[c] = 1;
            blocked.push_back(c);
        }
        for (int c : blocked) forbidden_[c] = 0;
    }

    void leaf() {
        ++stats_->pseudomanifolds;
        std::vector<DifferenceCycle> cycles;
        for (std::size_t c = 0; c < chosen_.size(); ++c)
            if (chosen_[c]) cycles.push_back(u_.tets[c]);
        CyclicComplex complex(u_.n, 3, std::move(cycles));
        const FacetComplex expanded = expand(complex);
        const FacetComplex lk = link(expanded, 0);
        if (lk.dimension() != 2 || !is_sphere_2d(lk)) {
            ++stats_->rejected_links;
        } else if (!is_connected(expanded)) {
            ++stats_->disconnected;
        } else {
            found_->push_back(std::move(complex));
        }
    }

    const Universe& u_;
    const std::atomic<bool>& stop_;
    Clock::time_point deadline_;
    bool limited_;
    std::vector<int> counts_;
    std::vector<char> chosen_;
    std::vector<char> forbidden_;
    std::vector<CyclicComplex>* found_ = nullptr;
    SearchStats* stats_ = nullptr;
    bool aborted_ = false;
};

/// Single writer for the checkpoint log.
class CheckpointLog {
public:
    CheckpointLog(const std::filesystem::path& path, int n, int every) : path_(path), n_(n), every_(std::max(1, every)) {}

    std::map<int, std::vector<CyclicComplex>> resume() {
        std::map<int, std::vector<CyclicComplex>> done;
        if (path_.empty() || !std::filesystem::exists(path_)) return done;
        std::ifstream in(path_, std::ios::binary);
        std::string line;
        std::uintmax_t offset = 0;
        while (std::getline(in, line)) {
            if (in.eof()) break;  // no newline: torn final line from an interrupted write
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::parse_error&) {
                break;
            }
            offset += line.size() + 1;
            valid_bytes_ = offset;
            if (j.at("n").get<int>() != n_) {
                throw RegistryError("checkpoint log " + path_.string() + " belongs to n = " +
                                    std::to_string(j.at("n").get<int>()));
            }
            auto& list = done[j.at("seed").get<int>()];
            for (const auto& text : j.at("complexes")) list.push_back(parse_complex(text.get<std::string>()));
        }
        return done;
    }

    void open() {
        if (path_.empty()) return;
        if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
        if (std::filesystem::exists(path_) && std::filesystem::file_size(path_) > valid_bytes_)
            std::filesystem::resize_file(path_, valid_bytes_);
        out_.open(path_, std::ios::app);
        if (!out_) throw RegistryError("cannot open checkpoint log " + path_.string());
    }

    void record(int seed, const std::vector<CyclicComplex>& found) {
        if (!out_.is_open()) return;
        nlohmann::ordered_json j;
        j["n"] = n_;
        j["seed"] = seed;
        j["complexes"] = nlohmann::json::array();
        for (const auto& c : found) j["complexes"].push_back(format(c));
        out_ << j.dump() << '\n';
        if (++pending_ >= every_) flush();
    }

    void flush() {
        if (out_.is_open()) out_.flush();
        pending_ = 0;
    }

private:
    std::filesystem::path path_;
    int n_;
    int every_;
    int pending_ = 0;
    std::uintmax_t valid_bytes_ = 0;
    std::ofstream out_;
};

}  // namespace

EnumerationResult classify(int n, const ClassifyOptions& options) {
    if (n < 5) throw InvalidCycle("classification needs n >= 5, got " + std::to_string(n));
    const auto started = Clock::now();
    const Universe universe(n);

    EnumerationResult result;
    result.n = n;
    const int seeds = static_cast<int>(universe.tets.size());
    result.stats.seeds_total = seeds;

    CheckpointLog log(options.checkpoint, n, options.checkpoint_every);
    std::map<int, std::vector<CyclicComplex>> done = log.resume();
    result.stats.seeds_resumed = static_cast<int>(done.size());
    log.open();

    std::vector<int> todo;
    for (int s = 0; s < seeds; ++s)
        if (!done.contains(s)) todo.push_back(s);

    const bool limited = options.time_limit.count() > 0;
    const auto deadline = started + std::chrono::duration_cast<Clock::duration>(options.time_limit);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex sink;

    auto worker = [&] {
        Searcher searcher(universe, stop, deadline, limited);
        SearchStats local;
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= todo.size() || stop.load()) break;
            std::vector<CyclicComplex> found;
            if (!searcher.run_seed(todo[slot], found, local)) {
                stop.store(true);
                break;
            }
            std::lock_guard lock(sink);
            log.record(todo[slot], found);
            done.emplace(todo[slot], std::move(found));
        }
        std::lock_guard lock(sink);
        result.stats.nodes += local.nodes;
        result.stats.pseudomanifolds += local.pseudomanifolds;
        result.stats.rejected_links += local.rejected_links;
        result.stats.disconnected += local.disconnected;
    };

    const int jobs = std::max(1, std::min(options.jobs, std::max(1, static_cast<int>(todo.size()))));
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    log.flush();

    result.stats.seeds_done = static_cast<int>(done.size());
    result.complete = result.stats.seeds_done == seeds;

    std::vector<std::pair<std::string, CyclicComplex>> keyed;
    for (auto& [seed, list] : done)
        for (auto& c : list) keyed.emplace_back(format(c), std::move(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    for (auto& [text, c] : keyed) result.complexes.push_back(std::move(c));

    result.multiplier_classes = dedupe_multipliers(result.complexes);
    result.iso_classes = iso_classes(result.complexes);
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
}

namespace {

std::vector<std::vector<int>> group_by(const std::vector<int>& label) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(label.size()); ++i) groups[label[i]].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [key, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::string multiplier_key(const CyclicComplex& c) {
    std::string best;
    for (int lambda : units_mod(c.vertex_count())) {
        std::string text = format(multiply(c, lambda));
        if (best.empty() || text < best) best = std::move(text);
    }
    return best;
}

}  // namespace

std::vector<std::vector<int>> dedupe_multipliers(const std::vector<CyclicComplex>& complexes) {
    std::map<std::string, int> ids;
    std::vector<int> label;
    for (const auto& c : complexes) label.push_back(ids.emplace(multiplier_key(c), static_cast<int>(ids.size())).first->second);
    return group_by(label);
}

std::vector<std::vector<int>> iso_classes(const std::vector<CyclicComplex>& complexes) {
    const auto by_multiplier = dedupe_multipliers(complexes);

    struct Rep {
        std::string fingerprint;
        FacetComplex expanded;
        int label;
    };
    std::vector<Rep> reps;
    std::vector<int> label(complexes.size(), -1);
    for (const auto& cls : by_multiplier) {
        const CyclicComplex& c = complexes[cls.front()];
        FacetComplex expanded = expand(c);
        std::string fp = std::to_string(c.vertex_count()) + "|" + std::to_string(c.dimension());
        for (long long f : f_vector(expanded).counts) fp += "," + std::to_string(f);
        fp += "|" + homology(expanded).to_string();
        if (!expanded.empty()) {
            for (long long f : f_vector(link(expanded, 0)).counts) fp += "," + std::to_string(f);
        }

        int assigned = -1;
        for (const Rep& r : reps) {
            if (r.fingerprint == fp && isomorphic(expanded, r.expanded, true)) {
                assigned = r.label;
                break;
            }
        }
        if (assigned < 0) {
            assigned = static_cast<int>(reps.size());
            reps.push_back({fp, std::move(expanded), assigned});
        }
        for (int i : cls) label[i] = assigned;
    }
    return group_by(label);
}

namespace {

using Mask = std::uint64_t;

Mask mask_of(const Simplex& s) {
    Mask m = 0;
    for (Vertex v : s) m |= Mask{1} << v;
    return m;
}

struct FaceIndex {
    std::unordered_set<Mask> all;                // every face of dimension >= 1
    std::vector<std::vector<Mask>> through;      // per vertex, faces containing it
    std::vector<Vertex> vertices;
    std::vector<std::vector<Vertex>> neighbours;

    explicit FaceIndex(const FacetComplex& k) : through(k.vertex_count()), neighbours(k.vertex_count()) {
        vertices = k.vertices();
        for (int dim = 1; dim <= k.dimension(); ++dim) {
            for (const Simplex& f : faces(k, dim)) {
                const Mask m = mask_of(f);
                all.insert(m);
                for (Vertex v : f) through[v].push_back(m);
                if (dim == 1) {
                    neighbours[f[0]].push_back(f[1]);
                    neighbours[f[1]].push_back(f[0]);
                }
            }
        }
    }
};

class IsoSearch {
public:
    IsoSearch(const FaceIndex& a, const FaceIndex& b, int n) : a_(a), b_(b), image_(n, -1), used_(n, 0) {
        // BFS order over the 1-skeleton of a.
        std::vector<char> seen(n, 0);
        for (Vertex start : a.vertices) {
            if (seen[start]) continue;
            std::vector<Vertex> queue{start};
            seen[start] = 1;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (Vertex w : a.neighbours[queue[i]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            }
        }
    }

    bool extend(std::size_t depth, Mask assigned) {
        if (depth == order_.size()) return true;
        const Vertex u = order_[depth];
        const Mask now = assigned | (Mask{1} << u);
        for (Vertex x : b_.vertices) {
            if (!admissible(depth, u, x)) continue;
            image_[u] = x;
            used_[x] = 1;
            if (consistent(u, now) && extend(depth + 1, now)) return true;
            image_[u] = -1;
            used_[x] = 0;
        }
        return false;
    }

    bool admissible(std::size_t depth, Vertex u, Vertex x) const {
        if (used_[x]) return false;
        if (depth == 0 && forced_first_ >= 0 && x != forced_first_) return false;
        return a_.through[u].size() == b_.through[x].size();
    }

    int forced_first_ = -1;

private:
    bool consistent(Vertex u, Mask assigned) const {
        for (Mask f : a_.through[u]) {
            if ((f & ~assigned) != 0) continue;
            Mask g = 0;
            for (Mask rest = f; rest; rest &= rest - 1) g |= Mask{1} << image_[__builtin_ctzll(rest)];
            if (!b_.all.contains(g)) return false;
        }
        return true;
    }

    const FaceIndex& a_;
    const FaceIndex& b_;
    std::vector<Vertex> order_;
    std::vector<int> image_;
    std::vector<char> used_;
};

}  // namespace

bool isomorphic(const FacetComplex& a, const FacetComplex& b, bool vertex_transitive) {
    if (a.vertex_count() > 64 || b.vertex_count() > 64)
        throw UnsupportedDimension("isomorphism testing supports at most 64 vertices");
    if (a.dimension() != b.dimension() || a.size() != b.size()) return false;
    if (!(f_vector(a) == f_vector(b))) return false;
    if (a.vertices().size() != b.vertices().size()) return false;
    if (a.empty()) return true;

    const int n = std::max(a.vertex_count(), b.vertex_count());
    const FacetComplex pa(n, a.facets()), pb(n, b.facets());
    const FaceIndex ia(pa), ib(pb);
    if (ia.all.size() != ib.all.size()) return false;
    IsoSearch search(ia, ib, n);
    if (vertex_transitive) search.forced_first_ = ib.vertices.front();
    return search.extend(0, 0);
}

}  // namespace diffcyc
