#include "origami/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace origami {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(Errc::Config, what); }

Rational rational_from(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>()).rational();
  } catch (const Error& e) {
    config_error(where + ": " + e.what());
  }
  config_error(where + ": expected a rational string");
}

Point point_from(const Json& j, const std::string& where) {
  if (!j.is_array()) config_error(where + ": expected an array");
  Point p;
  for (const auto& c : j) p.push_back(rational_from(c, where));
  return p;
}

std::vector<Point> points_from(const Json& j, const std::string& where, std::size_t n) {
  if (!j.is_array()) config_error(where + ": expected an array of points");
  std::vector<Point> out;
  for (const auto& p : j) {
    out.push_back(point_from(p, where));
    if (out.back().size() != n) config_error(where + ": point of dimension " + std::to_string(out.back().size()));
  }
  return out;
}

std::size_t count_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) config_error(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

template <class F>
Json point_json(std::span<const F> p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(c.to_string());
  return a;
}

Json point_json(const Point& p) { return point_json<Rational>(p); }

Json points_json(std::span<const Point> ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

Json box_json(const Box& b) { return Json{{"lo", point_json(b.lo)}, {"hi", point_json(b.hi)}}; }

Json directions_json(std::span<const Direction> angles) {
  Json a = Json::array();
  for (const auto& d : angles) a.push_back(point_json(d.coords()));
  return a;
}

Json lattice_value(const LatticeBasis& lattice) {
  Json hnf = Json::array();
  for (const auto& row : lattice.hnf()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    hnf.push_back(std::move(r));
  }
  return Json{{"dimension", lattice.dimension()},
              {"generators", points_json(lattice.generators())},
              {"denominator", lattice.denominator().get_str()},
              {"hnf", std::move(hnf)}};
}

// Indented like dump(2), except that arrays of scalars stay on one line.
void write_json(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_array() && !j.empty()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
    if (flat) {
      out << j.dump(-1, ' ', false);
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      write_json(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out << pad << Json(key).dump() << ": ";
      write_json(out, value, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else {
    out << j.dump();
  }
}

std::string dump(const Json& j) {
  std::ostringstream out;
  write_json(out, j, 0);
  out << '\n';
  return out.str();
}

std::vector<Point> sorted_by_string(std::span<const Point> ps) {
  std::vector<Point> out(ps.begin(), ps.end());
  std::sort(out.begin(), out.end(), string_order_less);
  return out;
}

Json matrix_json(const std::vector<std::vector<Rational>>& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(point_json(row));
  return a;
}

}  // namespace

GenerationConfig RunConfig::generation() const {
  GenerationConfig g;
  g.max_depth = depth;
  g.retention_box = retention_box;
  g.margin_factor = margin_factor;
  g.max_points = max_points;
  return g;
}

std::vector<Direction> RunConfig::directions() const {
  std::vector<Direction> out;
  for (const auto& a : angles) out.push_back(canonicalize_direction(a));
  return out;
}

RunConfig parse_run_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) config_error("config must be a JSON object");
  static const std::set<std::string> known{"dimension", "angles",  "depth",       "retention_box", "margin_factor",
                                           "max_points", "out",    "formats",     "lattice",       "basis",
                                           "segment",   "quaternions", "coeff_range", "max_candidates"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) config_error("unknown key \"" + key + "\"");
  }
  RunConfig cfg;
  if (!j.contains("dimension")) config_error("missing \"dimension\"");
  cfg.dimension = count_from(j["dimension"], "dimension");
  if (cfg.dimension < 2) config_error("dimension must be at least 2");
  const std::size_t n = cfg.dimension;
  if (j.contains("angles")) cfg.angles = points_from(j["angles"], "angles", n);
  if (j.contains("depth")) cfg.depth = count_from(j["depth"], "depth");
  if (j.contains("retention_box")) {
    const Json& b = j["retention_box"];
    if (!b.is_object() || b.size() != 2 || !b.contains("lo") || !b.contains("hi")) {
      config_error("retention_box: expected {\"lo\": [...], \"hi\": [...]}");
    }
    Box box{point_from(b["lo"], "retention_box.lo"), point_from(b["hi"], "retention_box.hi")};
    if (box.lo.size() != n || box.hi.size() != n) config_error("retention_box: wrong dimension");
    try {
      box.validate();
    } catch (const Error& e) {
      config_error(std::string("retention_box: ") + e.what());
    }
    cfg.retention_box = std::move(box);
  }
  if (j.contains("margin_factor")) {
    cfg.margin_factor = rational_from(j["margin_factor"], "margin_factor");
    if (cfg.margin_factor < Rational(1)) config_error("margin_factor must be at least 1");
  }
  if (j.contains("max_points")) cfg.max_points = count_from(j["max_points"], "max_points");
  if (j.contains("out")) {
    if (!j["out"].is_string()) config_error("out: expected a string");
    cfg.out = j["out"].get<std::string>();
  }
  if (j.contains("formats")) {
    static const std::set<std::string> formats{"json", "csv", "svg", "md", "text"};
    if (!j["formats"].is_array()) config_error("formats: expected an array");
    for (const auto& f : j["formats"]) {
      if (!f.is_string() || !formats.count(f.get<std::string>())) config_error("formats: unsupported " + f.dump());
      cfg.formats.push_back(f.get<std::string>());
    }
  }
  if (j.contains("lattice")) cfg.lattice = points_from(j["lattice"], "lattice", n);
  if (j.contains("basis")) cfg.basis = points_from(j["basis"], "basis", n);
  if (j.contains("segment")) {
    auto seg = points_from(j["segment"], "segment", n);
    if (seg.size() != 2) config_error("segment: expected two points");
    cfg.segment = std::array<Point, 2>{seg[0], seg[1]};
  }
  if (j.contains("quaternions")) {
    if (!j["quaternions"].is_string()) config_error("quaternions: expected a string");
    cfg.quaternions = j["quaternions"].get<std::string>();
    if (cfg.quaternions != "lipschitz" && cfg.quaternions != "hurwitz") {
      config_error("quaternions: expected \"lipschitz\" or \"hurwitz\"");
    }
  }
  if (j.contains("coeff_range")) cfg.coeff_range = count_from(j["coeff_range"], "coeff_range");
  if (j.contains("max_candidates")) cfg.max_candidates = count_from(j["max_candidates"], "max_candidates");
  return cfg;
}

std::string print_run_config(const RunConfig& cfg) {
  Json j;
  j["dimension"] = cfg.dimension;
  j["angles"] = points_json(cfg.angles);
  j["depth"] = cfg.depth;
  if (cfg.retention_box) j["retention_box"] = box_json(*cfg.retention_box);
  j["margin_factor"] = cfg.margin_factor.to_string();
  j["max_points"] = cfg.max_points;
  j["out"] = cfg.out;
  j["formats"] = cfg.formats;
  if (cfg.lattice) j["lattice"] = points_json(*cfg.lattice);
  if (cfg.basis) j["basis"] = points_json(*cfg.basis);
  if (cfg.segment) j["segment"] = points_json(*cfg.segment);
  if (!cfg.quaternions.empty()) j["quaternions"] = cfg.quaternions;
  j["coeff_range"] = cfg.coeff_range;
  j["max_candidates"] = cfg.max_candidates;
  return dump(j);
}

std::string snapshot_json(const GenerationState& state) {
  Json depths = Json::array();
  Json counts = Json::array();
  for (std::size_t k = 0; k <= state.depth(); ++k) {
    depths.push_back(points_json(sorted_by_string(state.added_at_depth(k))));
    counts.push_back(state.points_at_depth(k).size());
  }
  Json j;
  j["dimension"] = state.dimension();
  j["angles"] = directions_json(state.angles());
  j["depths"] = std::move(depths);
  j["counts"] = std::move(counts);
  j["truncated"] = {{"box", state.box_truncated()}, {"cap", state.cap_truncated()}};
  return dump(j);
}

std::string snapshot_csv(const GenerationState& state) {
  std::ostringstream out;
  out << "depth";
  for (std::size_t i = 1; i <= state.dimension(); ++i) out << ",x" << i;
  out << '\n';
  for (std::size_t k = 0; k <= state.depth(); ++k) {
    for (const auto& p : sorted_by_string(state.added_at_depth(k))) {
      out << k;
      for (const auto& c : p) out << ',' << c.to_string();
      out << '\n';
    }
  }
  return out.str();
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string snapshot_svg(const GenerationState& state, bool lines) {
  if (state.dimension() != 2) throw Error(Errc::DimensionMismatch, "SVG export needs dimension 2");
  double x0, x1, y0, y1;
  if (state.config().retention_box) {
    const Box& b = *state.config().retention_box;
    x0 = b.lo[0].value().get_d();
    x1 = b.hi[0].value().get_d();
    y0 = b.lo[1].value().get_d();
    y1 = b.hi[1].value().get_d();
  } else {
    x0 = y0 = 1e300;
    x1 = y1 = -1e300;
    for (const auto& p : state.points()) {
      x0 = std::min(x0, p[0].value().get_d());
      x1 = std::max(x1, p[0].value().get_d());
      y0 = std::min(y0, p[1].value().get_d());
      y1 = std::max(y1, p[1].value().get_d());
    }
    x0 -= 0.5;
    y0 -= 0.5;
    x1 += 0.5;
    y1 += 0.5;
  }
  const double w = x1 - x0;
  const double h = y1 - y0;
  const double r = std::max(w, h) / 120.0;
  static const char* const palette[] = {"#000000", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  std::ostringstream out;
  // y grows upward in the plane, downward in SVG.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << ' ' << num(-y1) << ' ' << num(w)
      << ' ' << num(h) << "\">\n";
  if (lines && state.depth() >= 1 && state.depth() <= 3) {
    const double reach = 2 * (w + h);
    out << "<g stroke=\"#bbbbbb\" stroke-width=\"" << num(r / 4) << "\">\n";
    for (const auto& p : sorted_by_string(state.points_at_depth(state.depth() - 1))) {
      const double px = p[0].value().get_d();
      const double py = p[1].value().get_d();
      for (const auto& a : state.angles()) {
        const double ax = a.coords()[0].value().get_d();
        const double ay = a.coords()[1].value().get_d();
        const double len = std::hypot(ax, ay);
        const double dx = ax / len * reach;
        const double dy = ay / len * reach;
        out << "<line x1=\"" << num(px - dx) << "\" y1=\"" << num(-(py - dy)) << "\" x2=\"" << num(px + dx)
            << "\" y2=\"" << num(-(py + dy)) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }
  for (std::size_t k = 0; k <= state.depth(); ++k) {
    out << "<g fill=\"" << palette[std::min<std::size_t>(k, 5)] << "\">\n";
    for (const auto& p : sorted_by_string(state.added_at_depth(k))) {
      out << "<circle cx=\"" << num(p[0].value().get_d()) << "\" cy=\"" << num(-p[1].value().get_d())
          << "\" r=\"" << num(r) << "\"><title>" << format_point<Rational>(p) << " depth " << k
          << "</title></circle>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string lattice_json(const LatticeBasis& lattice) { return dump(lattice_value(lattice)); }

namespace {

Json verdict_value(const Verdict& verdict) {
  Json j;
  if (const auto* l = std::get_if<LatticeVerdict>(&verdict)) {
    j["verdict"] = "lattice";
    j["basis"] = lattice_value(l->basis);
    j["verified_depth"] = l->verified_depth;
    j["box"] = box_json(l->box);
    j["refined"] = l->refined;
    j["points_checked"] = l->points_checked;
    j["box_points"] = l->box_points;
  } else if (const auto* d = std::get_if<DenseVerdict>(&verdict)) {
    j["verdict"] = "dense_evidence";
    j["reason"] = dense_reason_code(d->reason);
    j["indices"] = d->indices;
    j["data"] = d->data;
  } else {
    j["verdict"] = "unknown";
    j["diagnostics"] = std::get<UnknownVerdict>(verdict).diagnostics;
  }
  return j;
}

Json closure_value(const ClosureReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"q", point_json(x.q)}, {"xi", x.xi}, {"phi", x.phi}, {"point", point_json(x.point)}});
  }
  return Json{{"coeff_range", report.coeff_range},
              {"checks", report.checks},
              {"defined", report.defined},
              {"ok", report.ok()},
              {"violations", std::move(v)}};
}

Json density_value(const DensityProbe& probe, const Point& a, const Point& b) {
  Json gaps = Json::array();
  for (const auto& g : probe.per_depth) {
    gaps.push_back({{"depth", g.depth}, {"on_segment", g.on_segment}, {"max_gap", g.max_gap.to_string()}});
  }
  Json j;
  j["segment"] = {point_json(a), point_json(b)};
  j["evidence"] = probe.shrinking() ? "gap_shrinking" : "inconclusive";
  j["reported_depths"] = probe.reported_depths;
  j["consecutive_run"] = {{"begin", probe.run_begin}, {"length", probe.run_length}};
  j["per_depth"] = std::move(gaps);
  return j;
}

}  // namespace

std::string verdict_json(const Verdict& verdict) { return dump(verdict_value(verdict)); }

std::string closure_json(const ClosureReport& report) { return dump(closure_value(report)); }

std::string density_json(const DensityProbe& probe, const Point& a, const Point& b) {
  return dump(density_value(probe, a, b));
}

std::string detect_json(const Verdict& verdict, const DensityProbe* probe, const Point& a, const Point& b) {
  Json j = verdict_value(verdict);
  if (probe) j["density"] = density_value(*probe, a, b);
  return dump(j);
}

std::string synthesize_json(const LatticeBasis& lattice, std::span<const Direction> angles,
                            const ClosureReport& closure) {
  return dump(Json{{"lattice", lattice_value(lattice)},
                   {"angles", directions_json(angles)},
                   {"closure", closure_value(closure)}});
}

namespace {

Json polynomials_value(const OrigamiPolynomialMatrix& m) {
  Json polys = Json::array();
  for (const auto& p : m.polynomials) polys.push_back(p.to_string());
  return Json{{"basis", points_json(m.basis)},
              {"angle_order", m.angle_order},
              {"matrix", matrix_json(m.matrix)},
              {"polynomials", std::move(polys)},
              {"degrees", m.degrees}};
}

}  // namespace

std::string polynomials_json(const OrigamiPolynomialMatrix& m) { return dump(polynomials_value(m)); }

std::string polynomials_text(const OrigamiPolynomialMatrix& m) {
  std::size_t width = 1;
  for (const auto& row : m.matrix) {
    for (const auto& c : row) width = std::max(width, c.to_string().size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.matrix.size(); ++i) {
    out << "a" << i + 1 << " |";
    for (const auto& c : m.matrix[i]) {
      const std::string s = c.to_string();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  for (std::size_t j = 0; j < m.polynomials.size(); ++j) {
    out << "p" << j + 1 << " = " << m.polynomials[j].to_string() << "  (degree " << m.degrees[j] << ")\n";
  }
  return out.str();
}

namespace {

Json distinct_degree_value(const DistinctDegreeResult& r) {
  Json ops = Json::array();
  for (const auto& row : r.column_ops) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(c.get_str());
    ops.push_back(std::move(jr));
  }
  return Json{{"changed", r.changed},
              {"basis", points_json(r.basis)},
              {"angles", points_json(r.angles)},
              {"column_ops", std::move(ops)},
              {"polynomials", polynomials_value(r.polynomials)}};
}

}  // namespace

std::string distinct_degree_json(const DistinctDegreeResult& r) { return dump(distinct_degree_value(r)); }

std::string polynomials_report_json(const OrigamiPolynomialMatrix& m, const DistinctDegreeResult* distinct,
                                    const std::string& distinct_error) {
  Json j{{"origami_polynomials", polynomials_value(m)}};
  if (distinct) {
    j["distinct_degree"] = distinct_degree_value(*distinct);
  } else {
    j["distinct_degree"] = {{"error", distinct_error}};
  }
  return dump(j);
}

std::string irrelevant_json(const IrrelevantAngle& beta, const IrrelevantReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"p", point_json(x.p)},
                 {"q", point_json(x.q)},
                 {"angle", x.angle},
                 {"beta_first", x.beta_first},
                 {"detail", x.detail}});
  }
  return dump(Json{{"beta", point_json<Scalar>(beta.raw)},
                   {"beta_canonical", point_json<Scalar>(beta.direction.coords())},
                   {"depth", report.depth},
                   {"points", report.points},
                   {"checks", report.checks},
                   {"nonexistent", report.nonexistent},
                   {"in_lattice", report.in_lattice},
                   {"violation_count", report.violation_count},
                   {"ok", report.ok()},
                   {"violations", std::move(v)}});
}

std::string basis_search_json(const BasisSearchResult& r, std::span<const Direction> angles) {
  Json bases = Json::array();
  for (const auto& b : r.bases) {
    Json dirs = Json::array();
    for (auto i : b) dirs.push_back(point_json(angles[i].coords()));
    bases.push_back({{"indices", b}, {"angles", std::move(dirs)}});
  }
  return dump(Json{{"minimal_size", r.minimal_size},
                   {"candidates_tested", r.candidates_tested},
                   {"sampled", r.sampled},
                   {"evidence", "bounded generation, not proof"},
                   {"bases", std::move(bases)}});
}

std::string order_table_json(std::span<const Quaternion> angles, const OrderTable& table) {
  Json header = Json::array();
  for (const auto& a : angles) header.push_back(a.to_string());
  Json rows = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell ? Json(cell->to_string()) : Json(nullptr));
    rows.push_back(std::move(r));
  }
  return dump(Json{{"angles", std::move(header)}, {"table", std::move(rows)}});
}

std::string angles_json(std::span<const Direction> angles) { return dump(Json{{"angles", directions_json(angles)}}); }

}  // namespace origami
