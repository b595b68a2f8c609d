#include "diffcyc/series.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "diffcyc/enumerate.hpp"
#include "diffcyc/error.hpp"
#include "diffcyc/registry.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

namespace {

std::string manifold_diagnosis(const CyclicComplex& complex) {
    if (complex.dimension() != 3) return "dimension is " + std::to_string(complex.dimension()) + ", not 3";
    if (complex.empty()) return "complex is empty";
    const FacetComplex expanded = expand(complex);
    const FacetComplex lk = link(expanded, 0);
    if (lk.dimension() != 2 || !is_sphere_2d(lk)) return "link of vertex 0 is not a 2-sphere";
    if (!is_connected(expanded)) return "expansion is disconnected";
    return {};
}

bool is_3_manifold(const CyclicComplex& complex) {
    return complex.dimension() == 3 && is_combinatorial_manifold(complex);
}

CyclicComplex complex_of_parts(const std::vector<Parts>& lists, int n, int d) {
    std::vector<DifferenceCycle> cycles;
    cycles.reserve(lists.size());
    for (const Parts& p : lists) cycles.emplace_back(p);
    return CyclicComplex(n, d, std::move(cycles));
}

}  // namespace

int SeriesSpec::modulus() const {
    return base.empty() ? 0 : std::accumulate(base.front().begin(), base.front().end(), 0);
}

int SeriesSpec::dimension() const { return base.empty() ? 0 : static_cast<int>(base.front().size()) - 1; }

void SeriesSpec::validate() const {
    if (base.empty()) throw InvalidSeries("series has no cycles");
    if (l < 1) throw InvalidSeries("order must be positive, got " + std::to_string(l));
    if (increments.size() != base.size()) throw InvalidSeries("one increment vector per cycle is required");
    const int n = modulus();
    const std::size_t width = base.front().size();
    for (std::size_t i = 0; i < base.size(); ++i) {
        const Parts& a = base[i];
        const Parts& inc = increments[i];
        if (a.size() < 2 || a.size() != width) throw InvalidSeries("cycle " + format_parts(a) + " has the wrong length");
        if (std::any_of(a.begin(), a.end(), [](int x) { return x < 1; }))
            throw InvalidSeries("cycle " + format_parts(a) + " has a non-positive entry");
        if (std::accumulate(a.begin(), a.end(), 0) != n) throw InvalidSeries("cycle " + format_parts(a) + " does not sum to n");
        if (inc.size() != width) throw InvalidSeries("increment vector of cycle " + format_parts(a) + " has the wrong length");
        if (std::any_of(inc.begin(), inc.end(), [](int x) { return x < 0; }))
            throw InvalidSeries("negative increment for cycle " + format_parts(a));
        if (std::accumulate(inc.begin(), inc.end(), 0) != l)
            throw InvalidSeries("increments of cycle " + format_parts(a) + " do not sum to l = " + std::to_string(l));
    }
}

CyclicComplex SeriesSpec::member(long long k) const {
    validate();
    std::vector<Parts> grown = base;
    for (std::size_t i = 0; i < grown.size(); ++i) {
        for (std::size_t j = 0; j < grown[i].size(); ++j) {
            const long long value = grown[i][j] + k * increments[i][j];
            if (value < 1) throw InvalidSeries("member " + std::to_string(k) + " has a non-positive entry");
            grown[i][j] = static_cast<int>(value);
        }
    }
    return complex_of_parts(grown, static_cast<int>(modulus() + l * k), dimension());
}

Parts max_last_rotation(const DifferenceCycle& c) {
    const Parts& a = c.parts();
    const int top = *std::max_element(a.begin(), a.end());
    Parts best;
    for (std::size_t s = 0; s < a.size(); ++s) {
        Parts r(a.begin() + static_cast<long>(s), a.end());
        r.insert(r.end(), a.begin(), a.begin() + static_cast<long>(s));
        if (r.back() == top && (best.empty() || r < best)) best = std::move(r);
    }
    return best;
}

int dense_margin(const Parts& max_last) {
    return max_last.back() - std::accumulate(max_last.begin(), max_last.end() - 1, 0);
}

SeriesSpec dense_spec(const CyclicComplex& complex) {
    SeriesSpec spec;
    spec.l = 1;
    for (const DifferenceCycle& c : complex.cycles()) {
        spec.base.push_back(max_last_rotation(c));
        Parts inc(c.parts().size(), 0);
        inc.back() = 1;
        spec.increments.push_back(std::move(inc));
    }
    return spec;
}

DenseSeriesReport dense_extendable(const CyclicComplex& complex) {
    if (const std::string why = manifold_diagnosis(complex); !why.empty())
        throw NotApplicable("not a combinatorial 3-manifold: " + why);

    DenseSeriesReport report{complex, {}, {}, true, false};
    for (const DifferenceCycle& c : complex.cycles()) {
        report.rotated.push_back(max_last_rotation(c));
        report.margins.push_back(dense_margin(report.rotated.back()));
        if (report.margins.back() <= 0) report.passes = false;
    }
    if (report.passes) report.minimal_start = !is_3_manifold(dense_spec(complex).member(-1));
    return report;
}

CyclicComplex extend_dense(const CyclicComplex& complex, long long k) {
    for (const DifferenceCycle& c : complex.cycles()) {
        const Parts& a = c.parts();
        const int top = *std::max_element(a.begin(), a.end());
        if (std::count(a.begin(), a.end(), top) > 1)
            throw InvalidSeries("cycle " + format(c) + " attains its maximum twice; the dense criterion fails");
    }
    return dense_spec(complex).member(k);
}

bool order_l_admissible(const SeriesSpec& spec) {
    spec.validate();
    const long long n = spec.modulus();
    const long long l = spec.l;
    for (std::size_t i = 0; i < spec.base.size(); ++i) {
        for (std::size_t j = 0; j < spec.base[i].size(); ++j) {
            const long long a = spec.base[i][j];
            const long long inc = spec.increments[i][j];
            if (!((inc + 1) * n > a * (l + 1) && a * (l + 1) > inc * n)) return false;
        }
    }
    return true;
}

CyclicComplex extend_order_l(const SeriesSpec& spec, long long k) { return spec.member(k); }

bool link_relabeling_holds(const SeriesSpec& spec, long long k) {
    const CyclicComplex base = spec.member(0);
    const CyclicComplex grown = spec.member(k);
    const long long n = spec.modulus();
    const long long l = spec.l;
    std::vector<Simplex> mapped;
    for (Simplex f : link(expand(base), 0).facets()) {
        for (Vertex& v : f) v = static_cast<Vertex>(v + ((l + 1) * v / n) * k);
        std::sort(f.begin(), f.end());
        mapped.push_back(std::move(f));
    }
    return FacetComplex(grown.vertex_count(), std::move(mapped)) == link(expand(grown), 0);
}

UnitReduction reduce_by_unit(const SeriesSpec& spec) {
    spec.validate();
    const long long n = spec.modulus();
    const long long l = spec.l;
    if (std::gcd(l, n) != 1) {
        throw NotApplicable("order " + std::to_string(l) + " is not a unit modulo " + std::to_string(n));
    }
    if (l == 1) return {spec, 0, 1};

    // Multiplying member k by l puts the generator vertices at l*p_j - L_j*n
    // (mod n + lk), where p_j and L_j are partial sums of entries and increments.
    std::vector<std::vector<long long>> images;
    long long widest = 0;
    for (std::size_t i = 0; i < spec.base.size(); ++i) {
        std::vector<long long> e;
        long long p = 0, big_l = 0;
        for (std::size_t j = 0; j < spec.base[i].size(); ++j) {
            e.push_back(l * p - big_l * n);
            p += spec.base[i][j];
            big_l += spec.increments[i][j];
        }
        std::sort(e.begin(), e.end());
        widest = std::max(widest, e.back() - e.front());
        images.push_back(std::move(e));
    }

    long long k0 = 0;
    while (n + l * k0 <= 2 * widest) ++k0;
    const long long n0 = n + l * k0;

    UnitReduction out;
    out.k0 = k0;
    out.stride = l;
    out.dense.l = 1;
    for (const auto& e : images) {
        Parts parts;
        for (std::size_t j = 1; j < e.size(); ++j) parts.push_back(static_cast<int>(e[j] - e[j - 1]));
        parts.push_back(static_cast<int>(n0 - (e.back() - e.front())));
        Parts inc(parts.size(), 0);
        inc.back() = 1;
        out.dense.base.push_back(std::move(parts));
        out.dense.increments.push_back(std::move(inc));
    }
    out.dense.validate();

    for (long long k = k0; k < k0 + 3; ++k) {
        const FacetComplex lhs = expand(multiply(spec.member(k), static_cast<int>(l)));
        const FacetComplex rhs = expand(out.dense.member(l * (k - k0)));
        if (!(lhs == rhs)) throw InternalError("unit reduction does not match at k = " + std::to_string(k));
    }
    return out;
}

MinimalStart minimal_start(const CyclicComplex& complex) {
    const DenseSeriesReport report = dense_extendable(complex);
    if (!report.passes) throw NotApplicable("the dense criterion fails, there is no dense series to start");

    const SeriesSpec spec = dense_spec(complex);
    long long steps = 0;
    for (;;) {
        CyclicComplex previous = complex;
        try {
            previous = spec.member(-(steps + 1));
        } catch (const InvalidSeries&) {
            break;
        }
        if (!is_3_manifold(previous)) break;
        ++steps;
    }
    MinimalStart out{steps, spec.member(-steps)};
    if (out.start.vertex_count() % 2 == 0) {
        throw InternalError("minimal start " + format(out.start) + " has an even number of vertices");
    }
    return out;
}

DenseSeriesCensus enumerate_dense_series(const std::filesystem::path& registry_dir, int n_max) {
    std::vector<int> missing;
    for (int n = 5; n <= n_max; ++n)
        if (!has_registry(registry_dir, n)) missing.push_back(n);
    if (!missing.empty()) {
        std::string list;
        for (int n : missing) list += (list.empty() ? "" : ", ") + std::to_string(n);
        throw RegistryError("missing classification data for n = " + list + " in " + registry_dir.string());
    }

    DenseSeriesCensus census;
    census.n_max = n_max;
    for (int n = 5; n <= n_max; ++n) {
        std::vector<CyclicComplex> starts;
        for (const RegistryEntry& e : load(registry_dir, n)) {
            const DenseSeriesReport r = dense_extendable(e.complex);
            if (r.passes && r.minimal_start) starts.push_back(e.complex);
        }
        for (const auto& cls : iso_classes(starts)) census.starts.push_back(starts[cls.front()]);
    }
    return census;
}

std::string format_series(const SeriesSpec& spec) {
    std::string base = "{";
    for (std::size_t i = 0; i < spec.base.size(); ++i) base += (i ? "," : "") + format_parts(spec.base[i]);
    base += "}";
    nlohmann::ordered_json j;
    j["base"] = base;
    j["l"] = spec.l;
    j["increments"] = spec.increments;
    return j.dump();
}

SeriesSpec parse_series(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("series JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    SeriesSpec spec;
    try {
        spec.base = parse_part_lists(j.at("base").get<std::string>());
        spec.l = j.at("l").get<int>();
        spec.increments = j.at("increments").get<std::vector<Parts>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series JSON: ") + e.what(), 0);
    }
    spec.validate();
    return spec;
}

}  // namespace diffcyc
