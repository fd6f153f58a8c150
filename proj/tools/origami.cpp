// origami: command-line driver for generation, lattice verdicts, synthesis,
// quaternion order tables and the polynomial / irrelevant-angle analyses.
//
// Exit codes: 0 ok, 2 configuration error, 3 point cap reached (partial
// output written), 4 internal error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "origami/io.hpp"

namespace {

using namespace origami;

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kTruncated = 3;
constexpr int kInternal = 4;

struct Options {
  std::string config_path;
  std::optional<std::size_t> depth;
  std::optional<std::string> out;
  std::vector<std::string> formats;
};

class ConfigFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunConfig load(const Options& opt) {
  std::ifstream in(opt.config_path);
  if (!in) throw ConfigFailure("cannot read " + opt.config_path);
  std::stringstream text;
  text << in.rdbuf();
  RunConfig cfg = parse_run_config(text.str());
  if (opt.depth) cfg.depth = *opt.depth;
  if (opt.out) cfg.out = *opt.out;
  if (!opt.formats.empty()) cfg.formats = opt.formats;
  return cfg;
}

// Writes to <out>.<ext>, or to stdout when no output prefix is configured.
void emit(const RunConfig& cfg, const std::string& ext, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  const std::string path = cfg.out + "." + ext;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigFailure("cannot write " + path);
  f << body;
}

std::vector<std::string> formats_or(const RunConfig& cfg, std::vector<std::string> fallback) {
  return cfg.formats.empty() ? fallback : cfg.formats;
}

void require_formats(const std::vector<std::string>& formats, std::initializer_list<const char*> allowed,
                     const char* command) {
  for (const auto& f : formats) {
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
      throw ConfigFailure(std::string(command) + ": format " + f + " not supported");
    }
  }
}

LatticeBasis lattice_of(const RunConfig& cfg) {
  if (cfg.lattice) return LatticeBasis::from_generators(*cfg.lattice);
  const Verdict v = lattice_hypothesis_test(cfg.directions(), cfg.generation());
  if (const auto* l = std::get_if<LatticeVerdict>(&v)) return l->basis;
  throw ConfigFailure("no \"lattice\" given and the angle set did not yield a lattice verdict");
}

int cmd_generate(const RunConfig& cfg) {
  const auto formats = formats_or(cfg, {"json"});
  require_formats(formats, {"json", "csv", "svg"}, "generate");
  const GenerationState state = generate(cfg.directions(), cfg.generation());
  for (const auto& f : formats) {
    if (f == "json") emit(cfg, "json", snapshot_json(state));
    if (f == "csv") emit(cfg, "csv", snapshot_csv(state));
    if (f == "svg") emit(cfg, "svg", snapshot_svg(state));
  }
  std::ostream& log = cfg.out.empty() ? std::cerr : std::cout;
  for (const auto& s : state.stats()) {
    log << "depth " << s.depth << ": " << s.total << " points (+" << s.added << ")\n";
  }
  if (state.cap_truncated()) {
    log << "point cap " << cfg.max_points << " reached; output truncated\n";
    return kTruncated;
  }
  return kOk;
}

int cmd_detect(const RunConfig& cfg) {
  require_formats(formats_or(cfg, {"json"}), {"json"}, "detect");
  const auto angles = cfg.directions();
  Verdict verdict = UnknownVerdict{"span deficient: fewer than two angles"};
  try {
    verdict = lattice_hypothesis_test(angles, cfg.generation());
  } catch (const Error& e) {
    if (e.code() != Errc::TooFewAngles) throw;
  }
  std::optional<DensityProbe> probe;
  if (cfg.segment) {
    probe = density_probe(generate(angles, cfg.generation()), (*cfg.segment)[0], (*cfg.segment)[1]);
  }
  const Point none;
  emit(cfg, "json",
       detect_json(verdict, probe ? &*probe : nullptr, cfg.segment ? (*cfg.segment)[0] : none,
                   cfg.segment ? (*cfg.segment)[1] : none));
  return kOk;
}

int cmd_synthesize(const RunConfig& cfg) {
  require_formats(formats_or(cfg, {"json"}), {"json"}, "synthesize");
  if (!cfg.lattice) throw ConfigFailure("synthesize needs \"lattice\"");
  const LatticeBasis lattice = LatticeBasis::from_generators(*cfg.lattice);
  const auto angles = angles_for_lattice(lattice);
  emit(cfg, "json", synthesize_json(lattice, angles, verify_closure_table(angles, lattice, cfg.coeff_range)));
  return kOk;
}

int cmd_quat_table(const RunConfig& cfg) {
  const auto formats = formats_or(cfg, {"md"});
  require_formats(formats, {"md", "csv", "json"}, "quat-table");
  std::vector<Quaternion> angles;
  if (cfg.quaternions == "lipschitz") {
    angles = lipschitz_angles();
  } else if (cfg.quaternions == "hurwitz") {
    angles = hurwitz_angles();
  } else {
    if (cfg.dimension != 4) throw ConfigFailure("quat-table needs dimension 4 or \"quaternions\"");
    for (const auto& a : cfg.angles) angles.push_back(Quaternion::from_point(a));
  }
  const OrderTable table = order_table(angles);
  for (const auto& f : formats) {
    if (f == "md") emit(cfg, "md", order_table_markdown(angles, table));
    if (f == "csv") emit(cfg, "csv", order_table_csv(angles, table));
    if (f == "json") emit(cfg, "json", order_table_json(angles, table));
  }
  return kOk;
}

int cmd_polynomials(const RunConfig& cfg) {
  const auto formats = formats_or(cfg, {"json"});
  require_formats(formats, {"json", "text"}, "polynomials");
  std::vector<Point> tau;
  if (cfg.basis) {
    tau = *cfg.basis;
  } else {
    for (std::size_t k = 0; k < cfg.dimension; ++k) tau.push_back(basis_vector(cfg.dimension, k));
  }
  const auto m = origami_polynomials(cfg.angles, tau);
  std::optional<DistinctDegreeResult> distinct;
  std::string why;
  try {
    distinct = distinct_degree_basis(cfg.angles, tau);
  } catch (const Error& e) {
    if (e.code() != Errc::CannotTriangularize) throw;
    why = e.what();
  }
  for (const auto& f : formats) {
    if (f == "json") emit(cfg, "json", polynomials_report_json(m, distinct ? &*distinct : nullptr, why));
    if (f == "text") emit(cfg, "txt", polynomials_text(distinct ? distinct->polynomials : m));
  }
  return kOk;
}

int cmd_irrelevant(const RunConfig& cfg) {
  require_formats(formats_or(cfg, {"json"}), {"json"}, "irrelevant");
  const LatticeBasis lattice = lattice_of(cfg);
  const auto beta = irrelevant_angle(cfg.angles, lattice);
  const auto report = verify_irrelevant(cfg.directions(), beta.raw, lattice, cfg.depth);
  emit(cfg, "json", irrelevant_json(beta, report));
  return kOk;
}

int cmd_basis_search(const RunConfig& cfg) {
  require_formats(formats_or(cfg, {"json"}), {"json"}, "basis-search");
  const auto angles = cfg.directions();
  const LatticeBasis lattice = lattice_of(cfg);
  emit(cfg, "json", basis_search_json(origami_basis_search(angles, cfg.generation(), lattice, cfg.max_candidates),
                                      angles));
  return kOk;
}

bool is_config_error(Errc c) {
  switch (c) {
    case Errc::Config:
    case Errc::Parse:
    case Errc::ZeroVector:
    case Errc::DimensionMismatch:
    case Errc::MissingUnitDirection:
    case Errc::TooFewAngles:
    case Errc::DuplicateAngle:
    case Errc::RankDeficient:
    case Errc::RankDeficientBasis:
    case Errc::NonRationalScalar:
    case Errc::DegenerateTau:
    case Errc::CollidingDirections:
    case Errc::ZeroDirection:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact origami constructions in n dimensions"};
  app.require_subcommand(1);
  Options opt;
  using Command = int (*)(const RunConfig&);
  const std::vector<std::pair<std::string, Command>> commands{
      {"generate", cmd_generate},       {"detect", cmd_detect},           {"synthesize", cmd_synthesize},
      {"quat-table", cmd_quat_table},   {"polynomials", cmd_polynomials}, {"irrelevant", cmd_irrelevant},
      {"basis-search", cmd_basis_search}};
  static const std::map<std::string, std::string> help{
      {"generate", "Generate M_0 … M_depth and export the point snapshot"},
      {"detect", "Classify the angle set: lattice, dense evidence or unknown"},
      {"synthesize", "Angle set for a given lattice, with its closure audit"},
      {"quat-table", "Table of [[0,1]] over a set of quaternion directions"},
      {"polynomials", "Origami polynomials and a distinct-degree basis"},
      {"irrelevant", "Construct the η-angle β and verify it adds no points"},
      {"basis-search", "Smallest subsets reproducing the lattice (bounded check)"}};
  Command chosen = nullptr;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("config", opt.config_path, "JSON run configuration")->required();
    sub->add_option("--depth", opt.depth, "Override the generation depth");
    sub->add_option("--out", opt.out, "Output path prefix (extension added per format)");
    sub->add_option("--format", opt.formats, "Output format(s): json, csv, svg, md, text");
    sub->callback([&chosen, f = fn] { chosen = f; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  try {
    return chosen(load(opt));
  } catch (const ConfigFailure& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    std::cerr << (is_config_error(e.code()) ? "config error: " : "error: ") << errc_name(e.code()) << ": "
              << e.what() << '\n';
    return is_config_error(e.code()) ? kConfigError : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
