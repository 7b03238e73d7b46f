#include "convexdepth/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cdepth {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rational coordinate_from_json(const json& c) {
  if (c.is_number()) return rat_from_double(c.get<double>());
  if (c.is_string()) return rat_from_string(c.get<std::string>());
  throw std::invalid_argument("coordinate must be a number or a 'p/q' string");
}

json rational_to_json(const Rational& q) {
  if (rat_fits_double(q)) return rat_to_double(q);
  return rat_to_string(q);
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(round12(x));
  return arr;
}

json polygon_to_json(const std::vector<Vec>& poly) {
  json arr = json::array();
  for (const Vec& v : poly) arr.push_back(vec_to_json(v));
  return arr;
}

json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw std::invalid_argument(source_name + ": parse error at line " + std::to_string(line) +
                                ", column " + std::to_string(col) + ": " + e.what());
  }
}

Family family_from_json(const json& j, double tol) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("sets"))
    throw std::invalid_argument("family: expected {\"dim\":d,\"sets\":[...]}");
  int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("family: dim must be positive");
  std::vector<Polytope> sets;
  for (const json& js : j.at("sets")) {
    if (!js.contains("vertices")) throw std::invalid_argument("family: set without vertices");
    std::vector<QVec> verts;
    for (const json& jv : js.at("vertices")) {
      if (!jv.is_array() || static_cast<int>(jv.size()) != dim)
        throw std::invalid_argument("family: vertex arity does not match dim");
      QVec v;
      v.reserve(dim);
      for (const json& c : jv) v.push_back(coordinate_from_json(c));
      verts.push_back(std::move(v));
    }
    sets.emplace_back(std::move(verts));
  }
  return Family(dim, std::move(sets), tol);
}

json family_to_json(const Family& f) {
  json j;
  j["dim"] = f.dim;
  json sets = json::array();
  for (const Polytope& p : f.sets) {
    json verts = json::array();
    for (const QVec& v : p.exact) {
      json coords = json::array();
      for (const Rational& c : v) coords.push_back(rational_to_json(c));
      verts.push_back(coords);
    }
    sets.push_back(json{{"vertices", verts}});
  }
  j["sets"] = sets;
  return j;
}

PointSet pointset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw std::invalid_argument("pointset: expected {\"dim\":d,\"points\":[...]}");
  int dim = j.at("dim").get<int>();
  std::vector<Vec> pts;
  for (const json& jp : j.at("points")) {
    if (!jp.is_array() || static_cast<int>(jp.size()) != dim)
      throw std::invalid_argument("pointset: point arity does not match dim");
    Vec p;
    for (const json& c : jp) p.push_back(rat_to_double(coordinate_from_json(c)));
    pts.push_back(std::move(p));
  }
  return PointSet(dim, std::move(pts));
}

json pointset_to_json(const PointSet& s) {
  json j;
  j["dim"] = s.dim;
  j["points"] = polygon_to_json(s.points);
  return j;
}

HittingInstance hitting_from_json(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("subsets"))
    throw std::invalid_argument("hitting: expected {\"N\":n,\"subsets\":[[...],...]}");
  int n = j.at("N").get<int>();
  std::vector<std::vector<int>> subsets;
  for (const json& ja : j.at("subsets")) subsets.push_back(ja.get<std::vector<int>>());
  return HittingInstance(n, std::move(subsets));
}

json hitting_to_json(const HittingInstance& inst) {
  json j;
  j["N"] = inst.ground_size;
  j["subsets"] = inst.subsets;
  return j;
}

json region_to_json(const CenterRegionApprox& region) {
  json j;
  j["r"] = region.r;
  j["outer_polygon"] = polygon_to_json(region.outer_polygon);
  j["certified"] = polygon_to_json(region.certified_points);
  j["empty"] = region.empty_flag;
  return j;
}

json certificate_to_json(const DepthCertificate& cert) {
  json j;
  j["depth"] = cert.value;
  j["witness_direction"] = vec_to_json(cert.witness_direction);
  j["method"] = cert.method == DepthMethod::Exact2D ? "exact-2d" : "sampled-upper";
  return j;
}

json plank_to_json(const Plank& plank) {
  json j;
  j["direction"] = vec_to_json(plank.direction);
  j["empty"] = plank.empty;
  if (!plank.empty) j["interval"] = json::array({round12(plank.lo), round12(plank.hi)});
  return j;
}

json witness_to_json(const SimplexWitness& w) {
  json j;
  json hs = json::array();
  for (const Halfspace& h : w.halfspaces)
    hs.push_back(json{{"normal", vec_to_json(h.normal)}, {"offset", round12(h.offset)}});
  j["halfspaces"] = hs;
  j["contain_counts"] = w.contain_counts;
  return j;
}

json roundtrip_report_to_json(const RoundtripReport& rep) {
  json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["min_ratio"] = rat_to_string(rep.min_ratio);
  j["k_intersecting"] = rep.k_intersecting;
  j["max_depth"] = rep.max_depth;
  j["maximizer"] = vec_to_json(rep.maximizer);
  j["depth_ratio"] = rat_to_string(rep.depth_ratio);
  j["bound"] = rat_to_string(rep.bound);
  j["bound_holds"] = rep.bound_holds;
  return j;
}

json reduction_sidecar_to_json(const ReductionFamily& rf) {
  json map = json::object();
  for (const ReductionElement& e : rf.elements) map[std::to_string(e.element)] = e.I;
  return json{{"I", map}};
}

json bounds_table_to_json(const std::vector<BoundsRow>& rows) {
  json arr = json::array();
  for (const BoundsRow& r : rows) {
    json j;
    j["d"] = r.d;
    j["k"] = r.k;
    j["alpha_exact"] = r.alpha_exact ? json(rat_to_string(*r.alpha_exact)) : json(nullptr);
    j["alpha_rado_lb"] = round12(r.alpha_rado_lb);
    j["rado_correction"] = r.rado_correction;
    j["alpha_blemish_lb"] = round12(r.alpha_blemish_lb);
    j["beta_exact"] = r.beta_exact ? json(rat_to_string(*r.beta_exact)) : json(nullptr);
    j["beta_blemish_ub"] = round12(r.beta_blemish_ub);
    arr.push_back(j);
  }
  return arr;
}

std::string bounds_table_to_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "d,k,alpha_exact,alpha_rado_lb,rado_correction,alpha_blemish_lb,beta_exact,beta_"
         "blemish_ub\n";
  for (const BoundsRow& r : rows) {
    out << r.d << ',' << r.k << ',';
    if (r.alpha_exact) out << rat_to_string(*r.alpha_exact);
    out << ',' << format12(round12(r.alpha_rado_lb)) << ',' << r.rado_correction << ','
        << format12(round12(r.alpha_blemish_lb)) << ',';
    if (r.beta_exact) out << rat_to_string(*r.beta_exact);
    out << ',' << format12(round12(r.beta_blemish_ub)) << '\n';
  }
  return out.str();
}

namespace {

struct SvgBox {
  double x0, y0, x1, y1;
};

void expand(SvgBox& box, const Vec& v) {
  box.x0 = std::min(box.x0, v[0]);
  box.y0 = std::min(box.y0, v[1]);
  box.x1 = std::max(box.x1, v[0]);
  box.y1 = std::max(box.y1, v[1]);
}

std::string points_attr(const std::vector<Vec>& poly) {
  std::string s;
  for (const Vec& v : poly) {
    if (!s.empty()) s += ' ';
    s += format12(round12(v[0])) + "," + format12(round12(-v[1]));  // y grows downward
  }
  return s;
}

}  // namespace

std::string region_to_svg(const Family& f, const CenterRegionApprox& region,
                          const std::vector<Plank>& debug_planks) {
  SvgBox box{1e300, 1e300, -1e300, -1e300};
  for (const Polytope& p : f.sets)
    for (const Vec& v : p.vertices) expand(box, v);
  for (const Vec& v : region.outer_polygon) expand(box, v);
  double pad = 0.2 + 0.05 * (box.x1 - box.x0 + box.y1 - box.y0);
  box = {box.x0 - pad, box.y0 - pad, box.x1 + pad, box.y1 + pad};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format12(box.x0) << " "
      << format12(-box.y1) << " " << format12(box.x1 - box.x0) << " " << format12(box.y1 - box.y0)
      << "\">\n";

  if (!debug_planks.empty()) {
    // each plank as a translucent strip wide enough to cross the view box
    double reach = box.x1 - box.x0 + box.y1 - box.y0;
    for (const Plank& plank : debug_planks) {
      if (plank.empty) continue;
      const Vec& u = plank.direction;
      Vec t = {-u[1], u[0]};
      auto corner = [&](double offs, double s) {
        return Vec{u[0] * offs + t[0] * s, u[1] * offs + t[1] * s};
      };
      std::vector<Vec> strip = {corner(plank.lo, -reach), corner(plank.hi, -reach),
                                corner(plank.hi, reach), corner(plank.lo, reach)};
      svg << "  <polygon class=\"plank\" points=\"" << points_attr(strip)
          << "\" fill=\"#4477aa\" fill-opacity=\"0.05\" stroke=\"none\"/>\n";
    }
  }

  for (const Polytope& p : f.sets) {
    if (p.vertices.size() == 1) {
      svg << "  <circle cx=\"" << format12(p.vertices[0][0]) << "\" cy=\""
          << format12(-p.vertices[0][1]) << "\" r=\"0.03\" fill=\"#222222\"/>\n";
    } else {
      svg << "  <polygon class=\"set\" points=\"" << points_attr(p.vertices)
          << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.02\"/>\n";
    }
  }

  if (!region.empty_flag && !region.outer_polygon.empty())
    svg << "  <polygon class=\"region\" points=\"" << points_attr(region.outer_polygon)
        << "\" fill=\"#cc3311\" fill-opacity=\"0.35\" stroke=\"#cc3311\" stroke-width=\"0.01\"/>\n";

  for (const Vec& q : region.certified_points)
    svg << "  <circle cx=\"" << format12(round12(q[0])) << "\" cy=\"" << format12(round12(-q[1]))
        << "\" r=\"0.02\" fill=\"#117733\"/>\n";

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cdepth
