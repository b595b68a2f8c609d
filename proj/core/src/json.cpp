#include "diffcyc/json.hpp"

#include "diffcyc/error.hpp"

namespace diffcyc {

void to_json(Json& j, const FVector& f) { j = f.counts; }

void to_json(Json& j, const HomologyGroups& h) {
    j = Json::object();
    j["betti"] = h.betti;
    j["torsion"] = h.torsion;
}

void to_json(Json& j, const SurfaceType& t) {
    j = Json::object();
    j["orientable"] = t.orientable;
    j["genus"] = t.genus;
}

void to_json(Json& j, const PolyhedralSlicing& s) {
    j = Json::object();
    Json cuts = Json::array();
    for (const auto& [a, b] : s.cut_vertices) cuts.push_back({a, b});
    j["cut_vertices"] = cuts;
    j["cells"] = s.cells;
    j["fvector"] = s.f_vector();
    j["euler_characteristic"] = s.euler_characteristic();
    try {
        j["surface"] = surface_type(s);
    } catch (const NotASurface&) {
        j["surface"] = nullptr;
    }
}

void to_json(Json& j, const Abelianization& a) {
    j = Json::object();
    j["rank"] = a.rank;
    j["torsion"] = a.torsion;
}

void to_json(Json& j, const SeriesSpec& s) { j = Json::parse(format_series(s)); }

void to_json(Json& j, const DenseSeriesReport& r) {
    j = Json::object();
    j["complex"] = format(r.complex);
    Json rotated = Json::array();
    for (const Parts& p : r.rotated) rotated.push_back(format_parts(p));
    j["rotated"] = rotated;
    j["margins"] = r.margins;
    j["passes"] = r.passes;
    j["minimal_start"] = r.minimal_start;
}

void to_json(Json& j, const LensParams& p) {
    j = Json::object();
    j["p"] = p.p;
    j["q"] = p.q;
    j["name"] = p.to_string();
}

void to_json(Json& j, const WindingData& w) {
    j = Json::object();
    j["k"] = w.k;
    j["grid"] = {w.x, w.y};
    j["alpha"] = {w.alpha[0], w.alpha[1]};
    j["beta"] = {w.beta[0], w.beta[1]};
    j["q"] = w.q;
    j["p"] = w.p;
}

void to_json(Json& j, const SplittingReport& r) {
    j = Json::object();
    j["manifold"] = r.manifold;
    j["even_span_solid_torus"] = r.even_span_certified;
    j["odd_span_solid_torus"] = r.odd_span_certified;
    j["slicing_fvector"] = r.slicing_fvector;
    j["slicing_euler_characteristic"] = r.slicing_euler;
    j["slicing_surface"] = r.slicing_type;
    j["homology"] = r.homology;
}

void to_json(Json& j, const LensMemberReport& r) {
    j = Json::object();
    j["k"] = r.k;
    j["n"] = r.n;
    j["neighborly"] = r.neighborly;
    j["splitting"] = r.splitting;
    j["expected_slicing_fvector"] = r.expected_slicing;
    j["expected_h1_order"] = r.expected_h1;
    j["ok"] = r.ok();
}

void to_json(Json& j, const FixtureReport& r) {
    j = Json::object();
    j["name"] = r.name;
    j["complex"] = format(r.complex);
    j["splitting"] = r.splitting;
    j["expected_h1_order"] = r.expected_h1;
    j["ok"] = r.ok();
}

}  // namespace diffcyc
