#include "convexdepth/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "convexdepth/io.hpp"
#include "convexdepth/scenarios.hpp"

namespace cdepth {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_artifact(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + cfg.output_path);
  out << text;
}

const std::string& require_param(const RunConfig& cfg, const std::string& key) {
  auto it = cfg.params.find(key);
  if (it == cfg.params.end())
    throw std::invalid_argument("missing required parameter --" + key);
  return it->second;
}

int int_param(const RunConfig& cfg, const std::string& key) {
  const std::string& s = require_param(cfg, key);
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter --" + key + " must be an integer, got '" + s + "'");
  }
}

int int_param_or(const RunConfig& cfg, const std::string& key, int fallback) {
  return cfg.params.count(key) ? int_param(cfg, key) : fallback;
}

double double_param(const RunConfig& cfg, const std::string& key) {
  const std::string& s = require_param(cfg, key);
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter --" + key + " must be a number, got '" + s + "'");
  }
}

std::uint64_t seed_param(const RunConfig& cfg) {
  return cfg.params.count("seed") ? std::stoull(cfg.params.at("seed")) : 42ull;
}

Vec vec_param(const RunConfig& cfg, const std::string& key) {
  std::string s = require_param(cfg, key);
  Vec v;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double x;
  while (in >> x) v.push_back(x);
  if (v.empty()) throw std::invalid_argument("parameter --" + key + " must be coordinates x,y");
  return v;
}

double tolerance_override() {
  const char* env = std::getenv("CONVEX_DEPTH_TOLERANCE");
  if (!env) return kDefaultTol;
  try {
    double tol = std::stod(env);
    if (!(tol >= 0)) throw std::invalid_argument("");
    return tol;
  } catch (const std::exception&) {
    throw std::invalid_argument("CONVEX_DEPTH_TOLERANCE must be a nonnegative number");
  }
}

Family load_family(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw std::invalid_argument("missing --input family file");
  return family_from_json(parse_json_text(read_file(cfg.input_path), cfg.input_path),
                          tolerance_override());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_verify(const RunConfig& cfg) {
  const std::string& scenario = require_param(cfg, "scenario");
  if (scenario != "figure1")
    throw std::invalid_argument("unknown verify scenario '" + scenario + "' (have: figure1)");

  Family fam = build_figure1_family(tolerance_override());
  Vec center = figure1_center();
  DepthCertificate cert = depth_exact_2d(fam, center);
  int rep = representative_supremum_2d(fam, center, 2000, seed_param(cfg));

  // deterministic backstop: one representative per 1e-2 grid step per segment
  int grid_sup = 0;
  const int steps = 101;
  auto at = [&](const Polytope& s, int i) {
    double t = static_cast<double>(i) / (steps - 1);
    return Vec{s.vertices[0][0] + t * (s.vertices[1][0] - s.vertices[0][0]),
               s.vertices[0][1] + t * (s.vertices[1][1] - s.vertices[0][1])};
  };
  for (int i = 0; i < steps && grid_sup < 2; ++i)
    for (int j = 0; j < steps && grid_sup < 2; ++j)
      for (int l = 0; l < steps && grid_sup < 2; ++l) {
        PointSet reps(2, {at(fam.sets[0], i), at(fam.sets[1], j), at(fam.sets[2], l)});
        grid_sup = std::max(grid_sup, tukey_depth_2d(reps, center, fam.tol));
      }

  json out;
  out["scenario"] = "figure1";
  out["depth_at_center"] = cert.value;
  out["representative_supremum_sampled"] = rep;
  out["representative_supremum_grid"] = grid_sup;
  out["expected"] = {{"depth_at_center", 2}, {"representative_supremum", 1}};
  bool ok = cert.value == 2 && rep == 1 && grid_sup == 1;
  out["ok"] = ok;
  write_artifact(cfg, dump(out));
  if (!ok) throw std::invalid_argument("verify figure1: assertions failed");
  return 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

int run_reduce(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw std::invalid_argument("missing --input hitting-instance file");
  HittingInstance inst =
      hitting_from_json(parse_json_text(read_file(cfg.input_path), cfg.input_path));
  int d = int_param_or(cfg, "d", inst.m() - 1);
  ReductionFamily rf = hitting_to_family(inst, d);

  json family = family_to_json(rf.to_family(tolerance_override()));
  json sidecar = reduction_sidecar_to_json(rf);
  json report;
  if (cfg.params.count("k") && d == 2)
    report = roundtrip_report_to_json(equivalence_roundtrip_2d(inst, int_param(cfg, "k")));

  // with --output the family file carries the plain family schema; the index
  // mapping and the report go to their own files
  if (cfg.params.count("sidecar")) write_file(cfg.params.at("sidecar"), sidecar.dump(2) + "\n");
  if (cfg.params.count("report")) {
    if (report.is_null())
      throw std::invalid_argument("reduce: --report requires --k (and d = 2)");
    write_file(cfg.params.at("report"), report.dump(2) + "\n");
  }
  if (!cfg.output_path.empty()) {
    write_artifact(cfg, dump(family));
    return 0;
  }
  json combined;
  combined["family"] = family;
  combined["sidecar"] = sidecar;
  if (!report.is_null()) combined["roundtrip"] = report;
  write_artifact(cfg, dump(combined));
  return 0;
}

}  // namespace

Command command_from_name(const std::string& name) {
  if (name == "depth") return Command::Depth;
  if (name == "max-depth") return Command::MaxDepth;
  if (name == "plank") return Command::Plank;
  if (name == "region") return Command::Region;
  if (name == "witness") return Command::Witness;
  if (name == "transversal") return Command::Transversal;
  if (name == "tukey") return Command::Tukey;
  if (name == "beta") return Command::Beta;
  if (name == "blemish") return Command::Blemish;
  if (name == "table") return Command::Table;
  if (name == "reduce") return Command::Reduce;
  if (name == "verify") return Command::Verify;
  throw std::invalid_argument("unknown command '" + name + "'");
}

int run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Depth: {
      Family fam = load_family(cfg);
      Vec p = vec_param(cfg, "point");
      std::string method = cfg.params.count("method") ? cfg.params.at("method") : "exact";
      DepthCertificate cert;
      if (method == "exact") {
        cert = depth_exact_2d(fam, p);
      } else if (method == "sampled") {
        cert = depth_sampled_upper(fam, p, int_param_or(cfg, "directions", 10000),
                                   seed_param(cfg));
      } else {
        throw std::invalid_argument("--method must be exact or sampled");
      }
      write_artifact(cfg, dump(certificate_to_json(cert)));
      return 0;
    }
    case Command::MaxDepth: {
      Family fam = load_family(cfg);
      auto [value, point] = max_depth_2d(fam);
      write_artifact(cfg, dump(json{{"max_depth", value}, {"point", vec_to_json(point)}}));
      return 0;
    }
    case Command::Plank: {
      Family fam = load_family(cfg);
      Plank plank = compute_plank(fam, vec_param(cfg, "dir"), int_param(cfg, "r"));
      write_artifact(cfg, dump(plank_to_json(plank)));
      return 0;
    }
    case Command::Region: {
      if (cfg.format == OutputFormat::Csv)
        throw std::invalid_argument("region: --format must be json or svg");
      Family fam = load_family(cfg);
      int r = int_param(cfg, "r");
      int steps = int_param_or(cfg, "steps", 360);
      CenterRegionApprox region = center_region_2d(fam, r, steps);
      auto render_svg = [&] {
        std::vector<Plank> debug;
        if (cfg.params.count("debug-planks"))
          for (int j = 0; j < steps; ++j) {
            double th = 3.14159265358979323846 * j / steps;
            debug.push_back(compute_plank(fam, {std::cos(th), std::sin(th)}, r));
          }
        return region_to_svg(fam, region, debug);
      };
      // --svg writes the drawing alongside whichever format goes to --output
      if (cfg.params.count("svg")) {
        std::ofstream svg(cfg.params.at("svg"), std::ios::binary);
        if (!svg)
          throw std::invalid_argument("cannot open output file: " + cfg.params.at("svg"));
        svg << render_svg();
      }
      if (cfg.format == OutputFormat::Svg)
        write_artifact(cfg, render_svg());
      else
        write_artifact(cfg, dump(region_to_json(region)));
      return 0;
    }
    case Command::Witness: {
      Family fam = load_family(cfg);
      auto result = simplex_witness_2d(fam, int_param(cfg, "r"),
                                       int_param_or(cfg, "resolution", 360));
      json out;
      if (std::holds_alternative<Vec>(result)) {
        out["point"] = vec_to_json(std::get<Vec>(result));
      } else {
        out["witness"] = witness_to_json(std::get<SimplexWitness>(result));
      }
      write_artifact(cfg, dump(out));
      return 0;
    }
    case Command::Transversal: {
      Family fam = load_family(cfg);
      int count = min_transversal_count_2d(fam, vec_param(cfg, "point"));
      write_artifact(cfg, dump(json{{"min_transversal_count", count}}));
      return 0;
    }
    case Command::Tukey: {
      if (cfg.input_path.empty()) throw std::invalid_argument("missing --input points file");
      PointSet pts =
          pointset_from_json(parse_json_text(read_file(cfg.input_path), cfg.input_path));
      json out;
      if (cfg.params.count("centerpoint")) {
        auto [point, depth] = rado_centerpoint_2d(pts);
        out = {{"point", vec_to_json(point)}, {"depth", depth}};
      } else {
        out = {{"depth", tukey_depth_2d(pts, vec_param(cfg, "point"))}};
      }
      write_artifact(cfg, dump(out));
      return 0;
    }
    case Command::Beta: {
      int m = int_param(cfg, "m"), k = int_param(cfg, "k"), maxN = int_param(cfg, "maxN");
      Rational beta = beta_exhaustive_small(m, k, maxN);
      write_artifact(cfg, rat_to_string(beta) + "\n");
      return 0;
    }
    case Command::Blemish: {
      int m = int_param(cfg, "m"), k = int_param(cfg, "k");
      json out;
      if (cfg.params.count("ell") || cfg.params.count("beta")) {
        BlemishParams p{m, k, int_param(cfg, "ell"), double_param(cfg, "beta")};
        double margin = blemish_margin(p);
        out["feasible"] = blemish_feasible(p);
        out["margin"] = round12(margin);
        out["within_guard_band"] = std::abs(margin) < 1e-12;
      } else {
        auto [ell, value] = blemish_optimize(m, k);
        out["ell"] = ell;
        out["beta_upper_bound"] = round12(value);
      }
      write_artifact(cfg, dump(out));
      return 0;
    }
    case Command::Table: {
      if (cfg.format == OutputFormat::Svg)
        throw std::invalid_argument("table: --format must be json or csv");
      std::vector<BoundsRow> rows = bounds_table(int_param(cfg, "dmax"));
      if (cfg.format == OutputFormat::Csv)
        write_artifact(cfg, bounds_table_to_csv(rows));
      else
        write_artifact(cfg, dump(bounds_table_to_json(rows)));
      return 0;
    }
    case Command::Reduce:
      return run_reduce(cfg);
    case Command::Verify:
      return run_verify(cfg);
  }
  throw std::invalid_argument("unhandled command");
}

}  // namespace cdepth
