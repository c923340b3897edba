// command line front end: time-optimal evolution tables, Monte Carlo
// distribution runs, entanglement-floor minimization, and the analytic case
// studies, with CSV/JSON outputs for offline plotting

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "brachisto/entanglement.hpp"
#include "brachisto/experiments.hpp"
#include "brachisto/geodesic.hpp"
#include "brachisto/state_io.hpp"

namespace {

using brachisto::Complex;
using brachisto::PureState;
using brachisto::Shape;
using brachisto::Vector;
using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

json complex_list(const Vector& v) {
  json out = json::array();
  for (int k = 0; k < v.size(); ++k) {
    out.push_back({v(k).real(), v(k).imag()});
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw brachisto::ConfigError("cannot write '" + path + "'");
}

void print_envelope(const std::string& command, json config, json payload,
                    double elapsed_seconds) {
  json envelope;
  envelope["schema_version"] = kSchemaVersion;
  envelope["command"] = command;
  envelope["config"] = std::move(config);
  envelope["payload"] = std::move(payload);
  envelope["elapsed_seconds"] = elapsed_seconds;
  std::cout << envelope.dump(2) << "\n";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct EvolveArgs {
  std::string shape;
  std::string initial_path;
  std::string final_path;
  int grid = 101;
  std::string out;
};

int cmd_evolve(const EvolveArgs& args) {
  Stopwatch timer;
  const Shape shape = brachisto::parse_shape(args.shape);
  const PureState psi_i = brachisto::load_state_file(args.initial_path, shape);
  const PureState psi_f = brachisto::load_state_file(args.final_path, shape);
  if (args.grid < 1) throw brachisto::ConfigError("grid must be >= 1");

  const brachisto::GeodesicPath path = brachisto::decompose(psi_i, psi_f);
  const auto measure = brachisto::EntanglementMeasureSpec::for_shape(shape);

  std::string csv = "xi";
  for (int k = 0; k < psi_i.dim(); ++k) {
    csv += ",re_" + std::to_string(k) + ",im_" + std::to_string(k);
  }
  csv += ",entanglement\n";
  const double half_theta = path.theta() / 2.0;
  for (int g = 0; g < args.grid; ++g) {
    const double xi =
        args.grid == 1 ? 0.0 : half_theta * g / (args.grid - 1);
    const PureState state = brachisto::evolve(path, xi);
    csv += brachisto::format_double(xi);
    for (int k = 0; k < state.dim(); ++k) {
      csv += "," + brachisto::format_double(state.amplitude(k).real());
      csv += "," + brachisto::format_double(state.amplitude(k).imag());
    }
    csv += "," + brachisto::format_double(
                     brachisto::evaluate_measure(measure, state));
    csv += "\n";
  }

  if (!args.out.empty()) write_text_file(args.out, csv);

  json config{{"shape", args.shape},
              {"initial", args.initial_path},
              {"final", args.final_path},
              {"grid", args.grid},
              {"out", args.out}};
  json payload{{"theta", path.theta()},
               {"phi", path.phi()},
               {"rows", args.grid}};
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    print_envelope("evolve", std::move(config), std::move(payload),
                   timer.seconds());
  }
  return kExitOk;
}

struct SampleArgs {
  std::string shape;
  std::string subspace = "full";
  long samples = 100000;
  std::uint64_t seed = 0;
  int bins = 100;
  int workers = 1;
  std::string out;
};

int cmd_sample(const SampleArgs& args) {
  Stopwatch timer;
  brachisto::ExperimentConfig config;
  config.shape = brachisto::parse_shape(args.shape);
  config.subspace = brachisto::parse_subspace(args.subspace);
  config.samples = args.samples;
  config.seed = args.seed;
  config.bins = args.bins;
  config.workers = args.workers;

  const brachisto::DistributionSummary summary =
      brachisto::run_distribution(config);

  std::string csv = "bin_center,density\n";
  for (const auto& bin : summary.histogram) {
    csv += brachisto::format_double(bin.center) + "," +
           brachisto::format_double(bin.density) + "\n";
  }
  write_text_file(args.out + ".hist.csv", csv);

  json summary_json{{"min", summary.min},       {"max", summary.max},
                    {"mean", summary.mean},     {"mode", summary.mode},
                    {"samples", summary.samples}, {"seed", summary.seed}};
  write_text_file(args.out + ".summary.json", summary_json.dump(2) + "\n");

  json config_json{{"shape", args.shape},   {"subspace", args.subspace},
                   {"samples", args.samples}, {"seed", args.seed},
                   {"bins", args.bins},     {"workers", args.workers},
                   {"out", args.out}};
  print_envelope("sample", std::move(config_json), std::move(summary_json),
                 timer.seconds());
  return kExitOk;
}

struct MinimizeArgs {
  std::string shape;
  std::string subspace = "symmetric";
  int budget = 64;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out;
};

int cmd_minimize(const MinimizeArgs& args) {
  Stopwatch timer;
  const Shape shape = brachisto::parse_shape(args.shape);
  const brachisto::MinimizationResult result =
      brachisto::minimize_avg_entanglement(
          shape, brachisto::parse_subspace(args.subspace), args.budget,
          args.seed, args.workers);

  json payload{{"value", result.value},
               {"coeff_initial", complex_list(result.coeff_initial)},
               {"coeff_final", complex_list(result.coeff_final)},
               {"psi_initial", complex_list(result.pair[0].amplitudes())},
               {"psi_final", complex_list(result.pair[1].amplitudes())}};
  if (!args.out.empty()) write_text_file(args.out, payload.dump(2) + "\n");

  json config{{"shape", args.shape}, {"subspace", args.subspace},
              {"budget", args.budget}, {"seed", args.seed},
              {"workers", args.workers}, {"out", args.out}};
  print_envelope("minimize", std::move(config), std::move(payload),
                 timer.seconds());
  return kExitOk;
}

int cmd_cases(const std::string& out) {
  Stopwatch timer;
  const std::vector<brachisto::CaseResult> report =
      brachisto::run_case_studies();

  std::string csv = "name,computed,reference,pass\n";
  json rows = json::array();
  bool all_pass = true;
  for (const auto& row : report) {
    all_pass = all_pass && row.pass;
    csv += row.name + "," + brachisto::format_double(row.computed) + "," +
           brachisto::format_double(row.reference) + "," +
           (row.pass ? "1" : "0") + "\n";
    rows.push_back({{"name", row.name},
                    {"computed", row.computed},
                    {"reference", row.reference},
                    {"pass", row.pass}});
  }
  if (!out.empty()) write_text_file(out, csv);

  json payload{{"cases", std::move(rows)},
               {"all_pass", all_pass},
               {"tolerance", brachisto::kCaseStudyTol}};
  print_envelope("cases", json{{"out", out}}, std::move(payload),
                 timer.seconds());
  return all_pass ? kExitOk : kExitToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-optimal quantum evolutions and their entanglement"};
  app.require_subcommand(1);

  EvolveArgs evolve_args;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "tabulate the optimal path between two states");
  evolve->add_option("--shape", evolve_args.shape, "local dimensions, e.g. 2x2")
      ->required();
  evolve->add_option("--initial", evolve_args.initial_path,
                     "initial state file ('re im' per line)")
      ->required();
  evolve->add_option("--final", evolve_args.final_path, "final state file")
      ->required();
  evolve->add_option("--grid", evolve_args.grid,
                     "number of xi grid points on [0, theta/2]");
  evolve->add_option("--out", evolve_args.out,
                     "CSV output path (default: CSV on stdout)");

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo distribution of the time-averaged entanglement");
  sample->add_option("--shape", sample_args.shape, "2x2, 2x2x2 or 3x3")
      ->required();
  sample->add_option("--subspace", sample_args.subspace, "symmetric|full");
  sample->add_option("--samples", sample_args.samples, "number of random pairs");
  sample->add_option("--seed", sample_args.seed, "RNG seed")
      ->envname("BRACHISTO_SEED");
  sample->add_option("--bins", sample_args.bins, "histogram bins on [0,1]");
  sample->add_option("--workers", sample_args.workers, "worker threads");
  sample->add_option("--out", sample_args.out,
                     "output prefix for .hist.csv and .summary.json")
      ->required();

  MinimizeArgs minimize_args;
  CLI::App* minimize = app.add_subcommand(
      "minimize", "locate the entanglement floor over orthogonal pairs");
  minimize->add_option("--shape", minimize_args.shape, "2x2, 2x2x2 or 3x3")
      ->required();
  minimize->add_option("--subspace", minimize_args.subspace, "symmetric|full");
  minimize->add_option("--budget", minimize_args.budget, "random restarts");
  minimize->add_option("--seed", minimize_args.seed, "RNG seed")
      ->envname("BRACHISTO_SEED");
  minimize->add_option("--workers", minimize_args.workers, "worker threads");
  minimize->add_option("--out", minimize_args.out, "JSON output path");

  std::string cases_out;
  CLI::App* cases = app.add_subcommand(
      "cases", "reproduce the analytic two-qubit case studies");
  cases->add_option("--out", cases_out, "CSV output path");

  try {
    app.parse(argc, argv);
    if (evolve->parsed()) return cmd_evolve(evolve_args);
    if (sample->parsed()) return cmd_sample(sample_args);
    if (minimize->parsed()) return cmd_minimize(minimize_args);
    return cmd_cases(cases_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const brachisto::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const brachisto::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const brachisto::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const brachisto::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
