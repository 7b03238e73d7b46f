#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "convexdepth/depth.hpp"
#include "convexdepth/geometry.hpp"
#include "convexdepth/hitting.hpp"
#include "convexdepth/reduction.hpp"
#include "convexdepth/tukey.hpp"

namespace cdepth {

using json = nlohmann::ordered_json;

// Parse with line/column diagnostics folded into the exception message.
json parse_json_text(const std::string& text, const std::string& source_name = "input");

// {"dim": d, "sets": [{"vertices": [[x, ...], ...]}, ...]}; coordinates are
// numbers or exact "p/q" strings.
Family family_from_json(const json& j, double tol = kDefaultTol);
json family_to_json(const Family& f);

// {"dim": 2, "points": [[x, y], ...]}
PointSet pointset_from_json(const json& j);
json pointset_to_json(const PointSet& s);

// {"N": n, "subsets": [[i, ...], ...]} with 1-based elements.
HittingInstance hitting_from_json(const json& j);
json hitting_to_json(const HittingInstance& inst);

json region_to_json(const CenterRegionApprox& region);
json certificate_to_json(const DepthCertificate& cert);
json plank_to_json(const Plank& plank);
json witness_to_json(const SimplexWitness& w);
json roundtrip_report_to_json(const RoundtripReport& rep);
json reduction_sidecar_to_json(const ReductionFamily& rf);

json bounds_table_to_json(const std::vector<BoundsRow>& rows);
std::string bounds_table_to_csv(const std::vector<BoundsRow>& rows);

// Region drawing: family outlines, filled region polygon, certified points;
// optionally one translucent strip per sampled plank.
std::string region_to_svg(const Family& f, const CenterRegionApprox& region,
                          const std::vector<Plank>& debug_planks = {});

// Round to 12 significant digits (round-half-even via the decimal formatter);
// applied to every computed float before serialization.
double round12(double x);
std::string format12(double x);
json vec_to_json(const Vec& v);
json polygon_to_json(const std::vector<Vec>& poly);

}  // namespace cdepth
