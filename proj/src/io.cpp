#include <potconst/error.hpp>
#include <potconst/io.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace potconst::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

double number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      bad(std::string("cannot parse ") + what + " from '" + s + "'");
    }
    if (used != s.size()) bad(std::string("trailing characters in ") + what + " '" + s + "'");
    return v;
  }
  bad(std::string(what) + " must be a number");
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Point> point_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of points");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(point_from_json(e));
  return out;
}

json point_list_json(std::span<const Point> pts) {
  json a = json::array();
  for (Point p : pts) a.push_back(to_json(p));
  return a;
}

}  // namespace

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Point point_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("a point is [re, im]");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
  }
  return {number(j, "point"), 0.0};
}

json to_json(Point p) { return json::array({p.real(), p.imag()}); }

SetSpec set_from_json(const json& j) {
  if (!j.is_object()) bad("set description must be a JSON object");
  const std::string kind = field(j, "kind").get<std::string>();
  SetSpec set;
  if (kind == "disk") {
    Disk d;
    if (j.contains("center")) d.center = point_from_json(j["center"]);
    if (j.contains("radius")) d.radius = number(j["radius"], "radius");
    set.shape = d;
  } else if (kind == "segment") {
    set.shape = Segment{point_from_json(field(j, "a")), point_from_json(field(j, "b"))};
  } else if (kind == "polygon") {
    set.shape = Polygon{point_list(field(j, "vertices"), "vertices")};
  } else if (kind == "arc") {
    CircularArc a;
    if (j.contains("center")) a.center = point_from_json(j["center"]);
    if (j.contains("radius")) a.radius = number(j["radius"], "radius");
    a.angle0 = number(field(j, "angle0"), "angle0");
    a.angle1 = number(field(j, "angle1"), "angle1");
    set.shape = a;
  } else if (kind == "points") {
    set.shape = FinitePoints{point_list(field(j, "points"), "points")};
  } else if (kind == "curve") {
    DiscretizedCurve c;
    if (j.contains("closed")) c.closed = j["closed"].get<bool>();
    c.nodes = point_list(field(j, "nodes"), "nodes");
    set.shape = c;
  } else {
    bad("unknown set kind '" + kind + "'");
  }
  if (j.contains("boundary_samples")) {
    const double n = number(j["boundary_samples"], "boundary_samples");
    if (!(n >= 1.0) || n != std::floor(n)) bad("boundary_samples must be a positive integer");
    set.boundary_samples = std::size_t(n);
  }
  validate(set);
  return set;
}

json to_json(const SetSpec& set) {
  json j;
  j["kind"] = kind_name(set);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          j["center"] = to_json(s.center);
          j["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          j["a"] = to_json(s.a);
          j["b"] = to_json(s.b);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          j["vertices"] = point_list_json(s.vertices);
        } else if constexpr (std::is_same_v<T, CircularArc>) {
          j["center"] = to_json(s.center);
          j["radius"] = s.radius;
          j["angle0"] = s.angle0;
          j["angle1"] = s.angle1;
        } else if constexpr (std::is_same_v<T, FinitePoints>) {
          j["points"] = point_list_json(s.points);
        } else {
          j["closed"] = s.closed;
          j["nodes"] = point_list_json(s.nodes);
        }
      },
      set.shape);
  j["boundary_samples"] = set.boundary_samples;
  return j;
}

WeightSpec weight_from_json(const json& j) {
  if (!j.is_object()) bad("weight description must be a JSON object");
  const std::string kind = field(j, "kind").get<std::string>();
  WeightSpec w;
  if (kind == "unit") w.kind = WeightKind::Unit;
  else if (kind == "lorentz") w.kind = WeightKind::IncompleteLorentz;
  else if (kind == "radial_exp") w.kind = WeightKind::RadialExp;
  else if (kind == "tabulated") w.kind = WeightKind::Tabulated;
  else bad("unknown weight kind '" + kind + "'");
  if (j.contains("R_trunc")) {
    const double r = number(j["R_trunc"], "R_trunc");
    if (!(r > 0.0)) bad("R_trunc must be positive");
    w.r_trunc = r;
  }
  if (j.contains("values")) {
    if (!j["values"].is_array()) bad("values must be an array");
    for (const auto& v : j["values"]) w.values.push_back(number(v, "weight value"));
  }
  if (w.kind == WeightKind::Tabulated && w.values.empty()) bad("tabulated weight needs values");
  return w;
}

json to_json(const WeightSpec& weight) {
  json j;
  j["kind"] = to_string(weight.kind);
  if (weight.r_trunc) j["R_trunc"] = *weight.r_trunc;
  if (!weight.values.empty()) j["values"] = weight.values;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

SetSpec load_set(const std::string& path) {
  try {
    return set_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

WeightSpec load_weight(const std::string& path) {
  try {
    return weight_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    bad("'" + path + "': " + e.what());
  }
}

std::string to_string(ConstantMethod m) {
  switch (m) {
    case ConstantMethod::ClosedForm: return "ClosedForm";
    case ConstantMethod::Quadrature: return "Quadrature";
    case ConstantMethod::Optimizer: return "Optimizer";
  }
  return "?";
}

std::string to_string(CapacityMethod m) {
  switch (m) {
    case CapacityMethod::Analytic: return "Analytic";
    case CapacityMethod::FeketeProduct: return "FeketeProduct";
    case CapacityMethod::ChebyshevNorm: return "ChebyshevNorm";
    case CapacityMethod::ZeroCapacity: return "ZeroCapacity";
  }
  return "?";
}

std::string to_string(FeketeMethod m) {
  return m == FeketeMethod::ExactExchange ? "ExactExchange" : "GreedyLeja";
}

std::string to_string(WeightKind k) {
  switch (k) {
    case WeightKind::Unit: return "unit";
    case WeightKind::IncompleteLorentz: return "lorentz";
    case WeightKind::RadialExp: return "radial_exp";
    case WeightKind::Tabulated: return "tabulated";
  }
  return "?";
}

json to_json(const QuadMeasure& mu) {
  json j;
  j["nodes"] = point_list_json(mu.nodes);
  j["weights"] = mu.weights;
  j["total_mass"] = mu.total_mass;
  return j;
}

json to_json(const FeketeEnsemble& ens) {
  json j;
  j["points"] = point_list_json(ens.points);
  j["weighted"] = ens.weighted;
  if (ens.weighted) j["weight_values"] = ens.weight_values;
  j["log_vandermonde"] = ens.log_vandermonde;
  j["method"] = to_string(ens.method);
  j["exchange_passes"] = ens.exchange_passes;
  return j;
}

json to_json(const CapacityEstimate& cap) {
  json j;
  j["value"] = cap.value;
  j["method"] = to_string(cap.method);
  j["n_used"] = cap.n_used;
  j["error_hint"] = cap.error_hint;
  if (cap.chebyshev_norm) j["chebyshev_norm"] = *cap.chebyshev_norm;
  if (cap.fekete_product) j["fekete_product"] = *cap.fekete_product;
  return j;
}

json to_json(const ConstantReport& r, const std::string& set_id) {
  json j;
  j["set_id"] = set_id;
  j["value"] = r.value;
  j["exp_value"] = r.exp_value;
  j["method"] = to_string(r.method);
  j["n_quadrature"] = r.n_quadrature;
  if (r.m) j["m"] = *r.m;
  if (r.maximizer_tuple) j["maximizer_tuple"] = point_list_json(*r.maximizer_tuple);
  j["restarts"] = r.restarts;
  j["error_hint"] = r.error_hint;
  if (r.optimizer_value) j["optimizer_value"] = *r.optimizer_value;
  return j;
}

json to_json(const DominantSetReport& r) {
  json j;
  j["set_points"] = point_list_json(r.set_points);
  if (r.infinite) j["cardinality"] = "Infinite";
  else j["cardinality"] = r.cardinality;
  j["distinct_attaining"] = r.distinct_attaining;
  j["certificate"] = r.certificate;
  j["heuristic"] = "infinite when distinct attaining points exceed " + fmt(infinite_dominant_threshold) +
                   " x support nodes";
  return j;
}

json to_json(const FactorizationExperiment& ex) {
  json j;
  j["set_id"] = ex.set_id;
  j["weight"] = to_json(ex.weight);
  json factors = json::array();
  for (const Factor& f : ex.factors) {
    json fj;
    fj["zeros"] = point_list_json(f.zeros);
    if (!f.exponents.empty()) fj["exponents"] = f.exponents;
    factors.push_back(fj);
  }
  j["factors"] = factors;
  j["n_total"] = ex.n_total;
  j["m"] = ex.m;
  j["lhs"] = ex.lhs;
  j["log_norm_product"] = ex.log_norm_product;
  j["rhs_m"] = ex.rhs_m;
  j["rhs"] = ex.rhs;
  j["ratio_root"] = ex.ratio_root;
  j["c_m"] = ex.constants.c_m;
  j["c"] = ex.constants.c;
  if (!ex.tuple.empty()) {
    j["tuple"] = point_list_json(ex.tuple);
    j["groups"] = ex.groups;
  }
  j["chain_holds"] = ex.chain_holds;
  return j;
}

json to_json(const CountableDemo& d) {
  json j;
  j["ratio"] = d.ratio;
  j["ratio_exact"] = d.ratio_exact;
  j["bound_holds"] = d.bound_holds;
  return j;
}

void write_measure_csv(std::ostream& os, const QuadMeasure& mu) {
  os << "re,im,weight\n";
  for (std::size_t i = 0; i < mu.size(); ++i)
    os << fmt(mu.nodes[i].real()) << ',' << fmt(mu.nodes[i].imag()) << ',' << fmt(mu.weights[i]) << '\n';
}

void write_points_csv(std::ostream& os, std::span<const Point> pts) {
  os << "re,im\n";
  for (Point p : pts) os << fmt(p.real()) << ',' << fmt(p.imag()) << '\n';
}

void write_constant_csv(std::ostream& os, std::span<const ConstantReport> rows, const std::string& set_id) {
  os << "set_id,m,value,exp_value,method,n_quadrature,error_hint\n";
  for (const ConstantReport& r : rows)
    os << set_id << ',' << (r.m ? std::to_string(*r.m) : std::string()) << ',' << fmt(r.value) << ','
       << fmt(r.exp_value) << ',' << to_string(r.method) << ',' << r.n_quadrature << ',' << fmt(r.error_hint)
       << '\n';
}

void write_riesz_csv(std::ostream& os, std::span<const RieszSample> rows) {
  os << "radius,mass_estimate\n";
  for (const RieszSample& r : rows) os << fmt(r.radius) << ',' << fmt(r.mass_estimate) << '\n';
}

void write_experiment_csv(std::ostream& os, std::span<const FactorizationExperiment> rows) {
  os << "set_id,weight,factors,n_total,m,lhs,log_norm_product,rhs_m,rhs,ratio_root,c_m,c,chain_holds\n";
  for (const FactorizationExperiment& ex : rows)
    os << ex.set_id << ',' << to_string(ex.weight.kind) << ',' << ex.factors.size() << ',' << fmt(ex.n_total)
       << ',' << ex.m << ',' << fmt(ex.lhs) << ',' << fmt(ex.log_norm_product) << ',' << fmt(ex.rhs_m) << ','
       << fmt(ex.rhs) << ',' << fmt(ex.ratio_root) << ',' << fmt(ex.constants.c_m) << ','
       << fmt(ex.constants.c) << ',' << (ex.chain_holds ? "true" : "false") << '\n';
}

}  // namespace potconst::io
