#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbit/collision.hpp"
#include "orbit/density_matrix.hpp"
#include "orbit/extrema.hpp"
#include "orbit/majorization.hpp"
#include "orbit/marginal_region.hpp"
#include "orbit/serialization.hpp"
#include "orbit/spectrum.hpp"
#include "orbit/tables.hpp"
#include "orbit/threading.hpp"
#include "orbit/unitaries.hpp"

namespace {

using nlohmann::json;
using namespace orbit;

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse number '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty value list");
  return out;
}

std::vector<double> load_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    for (auto& piece : parse_values(tok)) out.push_back(piece);
  }
  if (out.empty()) throw std::invalid_argument("spectrum file holds no numbers");
  return out;
}

std::pair<int, int> parse_dims(const std::string& dims) {
  const auto x = dims.find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("dimensions must look like 2x2");
  try {
    return {std::stoi(dims.substr(0, x)), std::stoi(dims.substr(x + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("dimensions must look like 2x2");
  }
}

json pattern_rows(const Pattern& pattern, Shape shape) {
  json rows = json::array();
  for (int r = 0; r < shape.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < shape.cols; ++c)
      row.push_back(pattern[static_cast<std::size_t>(r) * shape.cols + c] + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

json spectrum_json(const Spectrum& s) {
  json values = json::array();
  for (double v : s.values()) values.push_back(v);
  return values;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string spectrum;
  std::string spectrum_file;
  std::string output;
  std::string dims = "2x2";
  std::string shape = "2x3";
  std::string family = "odd";
  std::string mode = "dephase";
  std::string format = "dot";
  std::string state_file;
  std::string save_max;
  std::string save_min;
  std::string diagonal;
  double energy = -1.0;
  double lambda_b = 0.0;
  double swap_weight = 0.9;
  bool hull = false;
  bool column_graph = false;
  bool exhaustive = false;
  int steps = 256;
  int collisions = 50;
  int arrangement = 1;
  int threads = 0;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 12345;
};

std::vector<double> spectrum_values(const Options& opt) {
  if (!opt.spectrum.empty() && !opt.spectrum_file.empty())
    throw std::invalid_argument("give either --spectrum or --spectrum-file, not both");
  if (!opt.spectrum.empty()) return parse_values(opt.spectrum);
  if (!opt.spectrum_file.empty()) return load_values(opt.spectrum_file);
  throw std::invalid_argument("a spectrum is required (--spectrum or --spectrum-file)");
}

Spectrum two_qubit_spectrum(const Options& opt) {
  return Spectrum(spectrum_values(opt), 2, 2);
}

std::string run_region(const Options& opt) {
  const Spectrum s = two_qubit_spectrum(opt);
  const Region region = opt.hull ? convex_hull_region(s) : make_region(s);
  std::string out = "# schema_version=1\n";
  out += "# spectrum=";
  for (int i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + fmt17(s[static_cast<std::size_t>(i)]);
  out += "\n# degenerate=" + std::to_string(int(region.degenerate));
  out += " hull_only=" + std::to_string(int(region.hull_only)) + "\n";
  out += "kind,lambda_a,lambda_b\n";
  for (const auto& v : region.vertices)
    out += "vertex," + fmt17(v.lambda_a) + "," + fmt17(v.lambda_b) + "\n";
  if (opt.energy >= 0.0) {
    for (const auto& c : f_line_intersections(opt.energy))
      out += "energy_corner," + fmt17(c.lambda_a) + "," + fmt17(c.lambda_b) + "\n";
  }
  return out;
}

std::string run_extremal(const Options& opt) {
  const auto [da, db] = parse_dims(opt.dims);
  const Spectrum s(spectrum_values(opt), da, db);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dims"] = {da, db};
  j["spectrum"] = spectrum_json(s);
  j["max_qmi_bound"] = max_qmi_bound(da, db);
  const Shape shape{da, db};
  const TableSearchResult min = minimal_table(s, shape);
  j["i_min"] = min.value;
  j["minimal_pattern"] = pattern_rows(min.pattern, shape);
  j["minimal_catalog_index"] = min.catalog_index + 1;
  j["minimal_tie"] = min.tie;
  if (!opt.save_min.empty()) {
    const auto ext = rho_min(s, realize_pattern(min.pattern, shape, s.values()));
    save_density(ext.state, opt.save_min);
  }
  if (da == db) {
    const auto ext = rho_max(s);
    j["i_max"] = ext.qmi_value;
    if (!opt.save_max.empty()) save_density(ext.state, opt.save_max);
  }
  if (da == 2 && db == 2) j["delta_i"] = delta_i(s);
  return dump(j);
}

std::string run_sweep(const Options& opt) {
  SweepFamily family;
  if (opt.family == "odd") family = SweepFamily::Odd;
  else if (opt.family == "even") family = SweepFamily::Even;
  else if (opt.family == "tilde") family = SweepFamily::Tilde;
  else throw std::invalid_argument("family must be odd, even or tilde");

  DensityMatrix start = [&] {
    if (!opt.state_file.empty()) return load_density(opt.state_file);
    const Spectrum s = two_qubit_spectrum(opt);
    const auto& l = s.values();
    std::vector<double> diag;
    switch (opt.arrangement) {
      case 1: diag = {l[0], l[1], l[2], l[3]}; break;
      case 2: diag = {l[1], l[0], l[2], l[3]}; break;
      case 3: diag = {l[2], l[0], l[1], l[3]}; break;
      default: throw std::invalid_argument("arrangement must be 1, 2 or 3");
    }
    return DensityMatrix::diagonal(diag, 2, 2);
  }();

  const SweepTrace trace = sweep(start, family, opt.steps);
  std::string out = "# schema_version=1\n";
  out += "angle,cos_angle,lambda_a,lambda_b,qmi,pop_a,pop_b\n";
  for (std::size_t k = 0; k < trace.angles.size(); ++k) {
    out += fmt17(trace.angles[k]) + "," + fmt17(std::cos(trace.angles[k])) + ",";
    out += fmt17(trace.points[k].lambda_a) + "," + fmt17(trace.points[k].lambda_b) + ",";
    out += fmt17(trace.qmi_values[k]) + ",";
    out += fmt17(trace.populations[k].first) + "," + fmt17(trace.populations[k].second) + "\n";
  }
  return out;
}

std::string run_collide(const Options& opt) {
  if (opt.diagonal.empty())
    throw std::invalid_argument("--diagonal populations are required");
  std::vector<double> diag = parse_values(opt.diagonal);
  if (diag.size() != 4)
    throw std::invalid_argument("the collision model runs on four populations");
  double sum = 0.0;
  for (double v : diag) {
    if (v < -1e-12) throw std::invalid_argument("populations must be non-negative");
    sum += v;
  }
  if (sum <= 0.0) throw std::invalid_argument("populations must have positive sum");
  for (double& v : diag) v = std::max(v, 0.0) / sum;

  const CollisionMode mode = [&] {
    if (opt.mode == "dephase") return CollisionMode::Dephase;
    if (opt.mode == "decorrelate") return CollisionMode::Decorrelate;
    throw std::invalid_argument("mode must be dephase or decorrelate");
  }();

  const auto trajectory =
      run_collisions(DensityMatrix::diagonal(diag, 2, 2),
                     std::vector<double>(static_cast<std::size_t>(opt.collisions),
                                         opt.swap_weight),
                     mode);
  std::string out = "# schema_version=1\n";
  out += "step,p00,p01,p10,p11,entropy_a,entropy_b,gap,qmi\n";
  for (std::size_t k = 0; k < trajectory.steps.size(); ++k) {
    const auto& step = trajectory.steps[k];
    out += std::to_string(k);
    for (double v : step.diagonal) out += "," + fmt17(v);
    out += "," + fmt17(step.entropy_a) + "," + fmt17(step.entropy_b);
    out += "," + fmt17(step.gap) + "," + fmt17(step.qmi_value) + "\n";
  }
  return out;
}

std::string run_heatcheck(const Options& opt) {
  const HeatFlowSummary summary = sample_heat_flow_checks(opt.samples, opt.seed);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["samples"] = summary.samples;
  j["seed"] = opt.seed;
  j["violations"] = summary.violations;
  j["min_slack_nats"] = summary.min_slack_nats;
  j["holds"] = summary.violations == 0;
  return dump(j);
}

Shape parse_shape(const std::string& text) {
  const auto [r, c] = parse_dims(text);
  return Shape{r, c};
}

std::string run_enumerate(const Options& opt) {
  const Shape shape = parse_shape(opt.shape);
  const YoungSet ys = enumerate_young(shape);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["shape"] = {shape.rows, shape.cols};
  j["count"] = ys.patterns.size();
  j["standard_fillings"] = hook_count(shape);
  json pats = json::array();
  for (const auto& p : ys.patterns) pats.push_back(pattern_rows(p, shape));
  j["patterns"] = std::move(pats);
  return dump(j);
}

std::string run_minimize(const Options& opt) {
  const Shape shape = parse_shape(opt.shape);
  const Spectrum s(spectrum_values(opt), shape.rows, shape.cols);
  const TableSearchResult min = minimal_table(s, shape);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["shape"] = {shape.rows, shape.cols};
  j["spectrum"] = spectrum_json(s);
  j["value"] = min.value;
  j["pattern"] = pattern_rows(min.pattern, shape);
  j["catalog_index"] = min.catalog_index + 1;
  j["tie"] = min.tie;
  if (opt.exhaustive) {
    j["exhaustive_minimum"] = exhaustive_minimum(s, shape);
    const TableSearchResult max = max_classical_table(s, shape);
    j["max_value"] = max.value;
    j["max_pattern"] = pattern_rows(max.pattern, shape);
    j["max_tie"] = max.tie;
  }
  return dump(j);
}

std::string run_histogram(const Options& opt) {
  const Shape shape = parse_shape(opt.shape);
  const MinimizerHistogram hist =
      histogram_minimizers(shape, opt.samples, opt.seed);
  std::string out = "# schema_version=1\n";
  out += "# shape=" + std::to_string(shape.rows) + "x" + std::to_string(shape.cols);
  out += " samples=" + std::to_string(opt.samples) + " seed=" + std::to_string(opt.seed) + "\n";
  out += "# ties=" + std::to_string(hist.tie_count) + "\n";
  out += "catalog_index,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i)
    out += std::to_string(i + 1) + "," + std::to_string(hist.counts[i]) + "\n";
  return out;
}

std::string run_graph(const Options& opt) {
  const Shape shape = parse_shape(opt.shape);
  TableGraph graph = build_row_graph(shape);
  if (opt.column_graph) graph = reversed(graph);
  if (opt.format == "dot") return to_dot(graph);
  if (opt.format != "csv")
    throw std::invalid_argument("format must be dot or csv");
  std::string out = "# schema_version=1\n";
  out += "from,to\n";
  for (const auto& [a, b] : graph.edges)
    out += std::to_string(a + 1) + "," + std::to_string(b + 1) + "\n";
  return out;
}

std::string run_demon(const Options& opt) {
  const Spectrum s = two_qubit_spectrum(opt);
  const DemonReport report = demon_scenario(s, opt.lambda_b);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["spectrum"] = spectrum_json(s);
  j["lambda_a"] = report.lambda_a;
  j["lambda_b"] = report.lambda_b;
  j["cos_phi"] = report.cos_phi;
  j["cos_phi_prime"] = report.cos_phi_prime;
  j["qmi_initial"] = report.qmi_rho_d;
  j["qmi_final"] = report.qmi_gamma_d;
  j["energy_a_initial"] = report.energy_a_initial;
  j["energy_b_initial"] = report.energy_b_initial;
  j["energy_a_final"] = report.energy_a_final;
  j["energy_b_final"] = report.energy_b_final;
  j["energy_total_initial"] = report.energy_a_initial + report.energy_b_initial;
  j["energy_total_final"] = report.energy_a_final + report.energy_b_final;
  j["spectrum_residual"] = report.spectrum_residual;
  j["marginal_offdiag_residual"] = report.marginal_offdiag_residual;
  return dump(j);
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return std::cout ? 0 : 2;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "cannot write output file: " << path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual information along unitary orbits of bipartite states"};
  app.require_subcommand(1);

  Options opt;
  std::string content;

  app.add_option("--threads", opt.threads, "worker thread cap (0 = auto)");
  app.add_option("--output", opt.output, "output file (default stdout)");

  auto add_spectrum = [&](CLI::App* sc) {
    sc->add_option("--spectrum", opt.spectrum, "comma-separated weights, any positive scale");
    sc->add_option("--spectrum-file", opt.spectrum_file, "file with whitespace/comma separated weights");
  };

  auto dispatch = [&opt, &content](std::string (*fn)(const Options&)) {
    return [&opt, &content, fn] {
      if (opt.threads > 0) set_worker_count(opt.threads);
      content = fn(opt);
    };
  };

  auto* region = app.add_subcommand("region", "compatible marginal region vertices");
  add_spectrum(region);
  region->add_flag("--hull", opt.hull, "drop the |x-y| constraints (classical hull)");
  region->add_option("--energy", opt.energy, "append energy-line corners for this budget");
  region->callback(dispatch(&run_region));

  auto* extremal = app.add_subcommand("extremal", "orbit extrema of the mutual information");
  add_spectrum(extremal);
  extremal->add_option("--dims", opt.dims, "subsystem dimensions, e.g. 2x2");
  extremal->add_option("--save-max", opt.save_max, "write the maximizer state JSON here");
  extremal->add_option("--save-min", opt.save_min, "write the minimizer state JSON here");
  extremal->callback(dispatch(&run_extremal));

  auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter orbit slice");
  add_spectrum(sweep_cmd);
  sweep_cmd->add_option("--family", opt.family, "odd | even | tilde");
  sweep_cmd->add_option("--steps", opt.steps, "angle samples over [0, pi]")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--arrangement", opt.arrangement, "starting diagonal: 1, 2 or 3");
  sweep_cmd->add_option("--state", opt.state_file, "start from this state JSON instead");
  sweep_cmd->callback(dispatch(&run_sweep));

  auto* collide = app.add_subcommand("collide", "repeated partial-swap collisions");
  collide->add_option("--diagonal", opt.diagonal, "four computational-basis populations");
  collide->add_option("--p", opt.swap_weight, "swap weight in [0, 1]");
  collide->add_option("--steps", opt.collisions, "number of collisions")->check(CLI::NonNegativeNumber);
  collide->add_option("--mode", opt.mode, "dephase | decorrelate");
  collide->callback(dispatch(&run_collide));

  auto* heat = app.add_subcommand("heatcheck", "randomized audit of the heat-flow bound");
  heat->add_option("--samples", opt.samples, "sample count");
  heat->add_option("--seed", opt.seed, "RNG seed");
  heat->callback(dispatch(&run_heatcheck));

  auto* tab = app.add_subcommand("tableaux", "rectangular table catalogs and searches");
  tab->require_subcommand(1);
  auto* tab_enum = tab->add_subcommand("enumerate", "catalog of non-increasing patterns");
  tab_enum->add_option("--shape", opt.shape, "rows x cols, e.g. 2x3");
  tab_enum->callback(dispatch(&run_enumerate));
  auto* tab_min = tab->add_subcommand("minimize", "minimal-MI arrangement for a spectrum");
  add_spectrum(tab_min);
  tab_min->add_option("--shape", opt.shape, "rows x cols, e.g. 2x3");
  tab_min->add_flag("--exhaustive", opt.exhaustive, "also search all d! arrangements (d <= 9)");
  tab_min->callback(dispatch(&run_minimize));
  auto* tab_hist = tab->add_subcommand("histogram", "minimizer histogram over random spectra");
  tab_hist->add_option("--shape", opt.shape, "rows x cols, e.g. 2x3");
  tab_hist->add_option("--samples", opt.samples, "sample count");
  tab_hist->add_option("--seed", opt.seed, "RNG seed");
  tab_hist->callback(dispatch(&run_histogram));

  auto* graph = app.add_subcommand("graph", "directed swap relations between catalog tables");
  graph->add_option("--shape", opt.shape, "rows x cols, e.g. 2x3");
  graph->add_flag("--column", opt.column_graph, "emit the column-direction graph (reversed edges)");
  graph->add_option("--format", opt.format, "dot | csv");
  graph->callback(dispatch(&run_graph));

  auto* demon = app.add_subcommand("demon", "work-extraction scenario states and energies");
  add_spectrum(demon);
  demon->add_option("--lambda-b", opt.lambda_b, "target B-side marginal eigenvalue")->required();
  demon->callback(dispatch(&run_demon));

  for (CLI::App* sc : {region, extremal, sweep_cmd, collide, heat, tab, tab_enum,
                       tab_min, tab_hist, graph, demon})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return write_output(opt.output, content);
}
