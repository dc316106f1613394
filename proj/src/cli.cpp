#include <potconst/cli.hpp>
#include <potconst/constants.hpp>
#include <potconst/equilibrium.hpp>
#include <potconst/error.hpp>
#include <potconst/fekete.hpp>
#include <potconst/io.hpp>
#include <potconst/verify.hpp>
#include <potconst/weighted.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace potconst::cli {

namespace {

using io::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

// Thrown when a result is NaN, infinite, or a constant is negative.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw NumericFailure(what + " is not finite");
}

void require_constant(const ConstantReport& r) {
  require_finite(r.value, "constant");
  require_finite(r.exp_value, "exp(constant)");
  if (r.value < -1e-9) throw NumericFailure("constant " + io::fmt(r.value) + " is negative");
}

const SetSpec& need_set(const RunConfig& c) {
  if (!c.set) bad("--set is required");
  return *c.set;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string capacity_output(const RunConfig& c) {
  const SetSpec& set = need_set(c);
  const CapacityEstimate cap = capacity(set, c.n);
  require_finite(cap.value, "capacity");
  if (c.format == Format::Json) {
    json j = io::to_json(cap);
    j["set_id"] = c.set_id;
    return dump(j);
  }
  std::ostringstream os;
  os << "set_id,value,method,n_used,error_hint\n"
     << c.set_id << ',' << io::fmt(cap.value) << ',' << io::to_string(cap.method) << ',' << cap.n_used << ','
     << io::fmt(cap.error_hint) << '\n';
  return os.str();
}

std::string constant_output(const RunConfig& c, const ConstantReport& r) {
  require_constant(r);
  if (c.format == Format::Json) return dump(io::to_json(r, c.set_id));
  std::ostringstream os;
  io::write_constant_csv(os, std::span(&r, 1), c.set_id);
  return os.str();
}

std::string dominant_output(const RunConfig& c) {
  const SetSpec& set = need_set(c);
  const DominantSetReport r = dominant_set(set, equilibrium_measure(set, c.n));
  if (c.format == Format::Json) {
    json j = io::to_json(r);
    j["set_id"] = c.set_id;
    return dump(j);
  }
  std::ostringstream os;
  io::write_points_csv(os, r.set_points);
  return os.str();
}

std::string fekete_output(const RunConfig& c) {
  const SetSpec& set = need_set(c);
  const FeketeEnsemble ens = fekete_points(set, c.n, c.weight);
  require_finite(ens.log_vandermonde, "log-Vandermonde");
  if (c.format == Format::Json) return dump(io::to_json(ens));
  std::ostringstream os;
  io::write_points_csv(os, ens.points);
  return os.str();
}

std::string riesz_output(const RunConfig& c) {
  const SetSpec& set = need_set(c);
  const auto* pts = std::get_if<FinitePoints>(&set.shape);
  if (!pts) bad("riesz-check needs a set of kind 'points'");
  std::vector<double> w(pts->points.size(), 1.0);
  if (c.weight && c.weight->kind == WeightKind::Tabulated) {
    check_weight_defined(set, *c.weight);
    w = c.weight->values;
  } else if (c.weight && c.weight->kind != WeightKind::Unit) {
    bad("riesz-check takes unit or tabulated weights");
  }
  const auto rows = riesz_mass_check(pts->points, w, c.radii);
  for (const auto& r : rows) require_finite(r.mass_estimate, "mass estimate");
  if (c.format == Format::Json) {
    json a = json::array();
    for (const auto& r : rows) a.push_back({{"radius", r.radius}, {"mass_estimate", r.mass_estimate}});
    return dump(a);
  }
  std::ostringstream os;
  io::write_riesz_csv(os, rows);
  return os.str();
}

std::string countable_output(const RunConfig& c) {
  const CountableDemo d = countable_set_demo(c.A, c.n);
  require_finite(d.ratio, "ratio");
  if (c.format == Format::Json) return dump(io::to_json(d));
  return "ratio,ratio_exact,bound_holds\n" + io::fmt(d.ratio) + ',' + d.ratio_exact + ',' +
         (d.bound_holds ? "true" : "false") + '\n';
}

std::size_t manifest_count(const json& e, const char* key, std::size_t fallback) {
  if (!e.contains(key)) return fallback;
  const auto v = e[key].get<long long>();
  if (v < 0) bad(std::string(key) + " must be non-negative");
  return std::size_t(v);
}

// Manifest entries:
//   {"set": {...} | "file.json", "weight": {...} | "file.json",
//    "kind": "random" | "partition", "m": 2, "n": 16, "seed": 1, "count": 1}
// random: `count` factorizations of total degree n into m factors.
// partition: the Fekete partition experiment with n points.
std::string verify_output(const RunConfig& c) {
  if (c.manifest.empty()) bad("--manifest is required");
  const json manifest = io::read_json_file(c.manifest);
  const std::filesystem::path base = std::filesystem::path(c.manifest).parent_path();
  const json& entries = manifest.is_array() ? manifest : manifest.at("experiments");

  auto resolve = [&](const json& j) {
    if (!j.is_string()) return j;
    return io::read_json_file((base / j.get<std::string>()).string());
  };

  std::vector<FactorizationExperiment> rows;
  for (const json& e : entries) {
    const SetSpec set = io::set_from_json(resolve(e.at("set")));
    std::optional<WeightSpec> weight;
    if (e.contains("weight")) weight = io::weight_from_json(resolve(e["weight"]));
    const std::size_t m = manifest_count(e, "m", 2);
    const std::size_t n = manifest_count(e, "n", 16);
    const std::uint64_t seed = manifest_count(e, "seed", c.seed);
    const std::string kind = e.value("kind", std::string("random"));
    if (kind == "partition") {
      rows.push_back(fekete_partition_experiment(set, weight, m, n, c.n, seed));
    } else if (kind == "random") {
      const ChainConstants k = chain_constants(set, weight, m, c.n, seed);
      const std::size_t count = manifest_count(e, "count", 1);
      for (std::size_t i = 0; i < count; ++i) {
        const auto zeros = random_factorization(set, m, n, seed + i);
        rows.push_back(product_inequality_check(set, weight, zeros, k));
      }
    } else {
      bad("unknown experiment kind '" + kind + "'");
    }
  }
  for (const auto& r : rows) {
    require_finite(r.lhs, "lhs");
    require_finite(r.rhs, "rhs");
  }
  if (c.format == Format::Json) {
    json a = json::array();
    for (const auto& r : rows) a.push_back(io::to_json(r));
    return dump(a);
  }
  std::ostringstream os;
  io::write_experiment_csv(os, rows);
  return os.str();
}

std::string execute(const RunConfig& c) {
  switch (c.command) {
    case Command::Capacity:
      return capacity_output(c);
    case Command::Constant:
      return constant_output(c, constant_me(need_set(c), c.n));
    case Command::ConstantM:
      return constant_output(c, constant_ce_m(need_set(c), *c.m, c.n, c.restarts, c.seed));
    case Command::WeightedConstant: {
      const SetSpec& set = need_set(c);
      if (c.m) return constant_output(c, constant_ce_wm(set, *c.weight, *c.m, c.n, c.restarts, c.seed));
      return constant_output(c, constant_ce_w(set, *c.weight, c.n));
    }
    case Command::DominantSet:
      return dominant_output(c);
    case Command::Verify:
      return verify_output(c);
    case Command::Fekete:
      return fekete_output(c);
    case Command::RieszCheck:
      return riesz_output(c);
    case Command::DemoCountable:
      return countable_output(c);
  }
  bad("unknown command");
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      bad(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) bad(std::string("cannot parse ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) bad(std::string(what) + " is empty");
  return out;
}

}  // namespace

void check_config(const RunConfig& c) {
  if (c.command == Command::DemoCountable) {
    if (c.A.empty()) bad("--A is required");
    if (c.n < 1) bad("--n must be positive");
    return;
  }
  if (c.n < 8) bad("--n must be at least 8");
  switch (c.command) {
    case Command::ConstantM:
      if (!c.m) bad("--m is required");
      break;
    case Command::WeightedConstant:
      if (!c.weight) bad("--weight is required");
      break;
    case Command::Verify:
      if (c.manifest.empty()) bad("--manifest is required");
      return;
    case Command::RieszCheck:
      if (c.radii.empty()) bad("--radii is required");
      break;
    default:
      break;
  }
  if (!c.set) bad("--set is required");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    check_config(config);
    text = execute(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return exit_numeric;
  } catch (const io::json::exception& e) {
    err << "error: InvalidInput: " << e.what() << '\n';
    return exit_validation;
  }
  if (config.output.empty()) {
    out << text;
    return exit_ok;
  }
  std::ofstream f(config.output, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write '" << config.output << "'\n";
    return exit_validation;
  }
  return exit_ok;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp constants for norms of products of polynomials"};
  app.require_subcommand(1);

  std::string set_path, weight_path, output, format = "json", manifest, radii, A;
  std::optional<std::size_t> m;
  std::size_t n = 512, restarts = 0;
  std::uint64_t seed = 20080101;

  const std::vector<std::pair<const char*, Command>> commands = {
      {"capacity", Command::Capacity},
      {"constant", Command::Constant},
      {"constant-m", Command::ConstantM},
      {"weighted-constant", Command::WeightedConstant},
      {"dominant-set", Command::DominantSet},
      {"verify", Command::Verify},
      {"fekete", Command::Fekete},
      {"riesz-check", Command::RieszCheck},
      {"demo-countable", Command::DemoCountable},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--set", set_path, "set description (JSON)");
    sub->add_option("--weight", weight_path, "weight description (JSON)");
    sub->add_option("--m", m, "tuple size / number of factors");
    sub->add_option("--n", n, "quadrature nodes, Fekete points, or factor count")->capture_default_str();
    sub->add_option("--restarts", restarts, "optimizer restarts (0: 8 + m)");
    sub->add_option("--seed", seed, "random seed")->capture_default_str();
    sub->add_option("--output", output, "output file (default: standard output)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (cmd == Command::Verify) sub->add_option("--manifest", manifest, "experiment manifest (JSON)");
    if (cmd == Command::RieszCheck) sub->add_option("--radii", radii, "comma-separated radii");
    if (cmd == Command::DemoCountable) sub->add_option("--A", A, "comma-separated sequence A_1, A_2, ...");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }

  RunConfig c;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) c.command = commands[i].second;
  c.m = m;
  c.n = n;
  c.restarts = restarts;
  c.seed = seed;
  c.output = output;
  c.format = format == "csv" ? Format::Csv : Format::Json;
  c.manifest = manifest;
  try {
    if (!set_path.empty()) {
      c.set = io::load_set(set_path);
      c.set_id = std::filesystem::path(set_path).stem().string();
    }
    if (!weight_path.empty()) c.weight = io::load_weight(weight_path);
    if (!radii.empty()) c.radii = parse_list(radii, "--radii");
    if (!A.empty()) c.A = parse_list(A, "--A");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }
  return run(c, out, err);
}

}  // namespace potconst::cli
