#ifndef POTCONST_IO_HPP_
#define POTCONST_IO_HPP_

#include <potconst/constants.hpp>
#include <potconst/equilibrium.hpp>
#include <potconst/fekete.hpp>
#include <potconst/verify.hpp>
#include <potconst/weighted.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace potconst::io {

using nlohmann::json;

/// Round-trip decimal form of a double.
std::string fmt(double x);

// Complex numbers are [re, im] pairs; a bare number is a real point. Numbers
// may also be given as strings.
Point point_from_json(const json& j);
json to_json(Point p);

/**
 * Set descriptions:
 *   {"kind": "disk", "center": [x, y], "radius": r}
 *   {"kind": "segment", "a": [..], "b": [..]}
 *   {"kind": "polygon", "vertices": [[..], ...]}
 *   {"kind": "arc", "center": [..], "radius": r, "angle0": t0, "angle1": t1}
 *   {"kind": "points", "points": [[..], ...]}
 *   {"kind": "curve", "closed": bool, "nodes": [[..], ...]}
 * each with an optional "boundary_samples". Malformed input throws
 * Error(InvalidInput); the result is validated.
 */
SetSpec set_from_json(const json& j);
json to_json(const SetSpec& set);

/// {"kind": "unit"|"lorentz"|"radial_exp"|"tabulated", "R_trunc"?, "values"?}
WeightSpec weight_from_json(const json& j);
json to_json(const WeightSpec& weight);

json read_json_file(const std::string& path);
SetSpec load_set(const std::string& path);
WeightSpec load_weight(const std::string& path);

std::string to_string(ConstantMethod m);
std::string to_string(CapacityMethod m);
std::string to_string(FeketeMethod m);
std::string to_string(WeightKind k);

json to_json(const QuadMeasure& mu);
json to_json(const FeketeEnsemble& ens);
json to_json(const CapacityEstimate& cap);
json to_json(const ConstantReport& r, const std::string& set_id);
json to_json(const DominantSetReport& r);
json to_json(const FactorizationExperiment& ex);
json to_json(const CountableDemo& d);

// CSV writers: a header line followed by one row per observation.
void write_measure_csv(std::ostream& os, const QuadMeasure& mu);
void write_points_csv(std::ostream& os, std::span<const Point> pts);
void write_constant_csv(std::ostream& os, std::span<const ConstantReport> rows, const std::string& set_id);
void write_riesz_csv(std::ostream& os, std::span<const RieszSample> rows);
void write_experiment_csv(std::ostream& os, std::span<const FactorizationExperiment> rows);

}  // namespace potconst::io

#endif  // POTCONST_IO_HPP_
