#pragma once

// nlohmann::json conversions for the report types. Found by ADL, so
// `nlohmann::ordered_json j = report;` works for each of them.

#include <nlohmann/json.hpp>

#include "diffcyc/group.hpp"
#include "diffcyc/homology.hpp"
#include "diffcyc/lens.hpp"
#include "diffcyc/series.hpp"
#include "diffcyc/slicing.hpp"
#include "diffcyc/topology.hpp"

namespace diffcyc {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const FVector& f);
void to_json(Json& j, const HomologyGroups& h);
void to_json(Json& j, const SurfaceType& t);
void to_json(Json& j, const PolyhedralSlicing& s);  // includes the surface type when it is a surface
void to_json(Json& j, const Abelianization& a);
void to_json(Json& j, const SeriesSpec& s);
void to_json(Json& j, const DenseSeriesReport& r);
void to_json(Json& j, const LensParams& p);
void to_json(Json& j, const WindingData& w);
void to_json(Json& j, const SplittingReport& r);
void to_json(Json& j, const LensMemberReport& r);
void to_json(Json& j, const FixtureReport& r);

}  // namespace diffcyc
