#include "brachisto/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "brachisto/nelder_mead.hpp"
#include "brachisto/quadrature.hpp"

namespace brachisto {

namespace {

SubspaceEmbedding embedding_for(const Shape& shape, Subspace subspace) {
  return subspace == Subspace::symmetric ? symmetric_basis(shape)
                                         : full_basis(shape);
}

// runs fn(i) for i in [0, count) across `workers` threads over contiguous
// chunks; fn must only touch slot i of shared output
template <typename Fn>
void parallel_for(long count, int workers, const Fn& fn) {
  workers = static_cast<int>(std::min<long>(workers, count));
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = w * chunk;
    const long hi = std::min(count, lo + chunk);
    pool.emplace_back([&fn, lo, hi] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

void validate(const ExperimentConfig& config) {
  if (config.samples < 1) throw ConfigError("samples must be >= 1");
  if (config.bins < 2) throw ConfigError("bins must be >= 2");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.shape.size() != 2 && config.shape != Shape{2, 2, 2}) {
    throw ConfigError("supported shapes: any bipartite, or (2,2,2)");
  }
  if (config.subspace == Subspace::symmetric && config.shape != Shape{2, 2} &&
      config.shape != Shape{2, 2, 2} && config.shape != Shape{3, 3}) {
    throw ConfigError("symmetric subspace needs shape (2,2), (2,2,2) or (3,3)");
  }
}

// in-place Givens rotation on coordinates (k, k+1)
void apply_givens(Vector& v, int k, double angle, double phase) {
  const double c = std::cos(angle);
  const Complex s = std::sin(angle) * std::exp(Complex(0.0, phase));
  const Complex a = v(k);
  const Complex b = v(k + 1);
  v(k) = c * a - std::conj(s) * b;
  v(k + 1) = s * a + c * b;
}

}  // namespace

std::pair<Vector, Vector> two_column_unitary(int n,
                                             const Eigen::VectorXd& params) {
  if (n < 2) throw DomainError("need coefficient dimension >= 2");
  if (params.size() != 4 * n - 6) {
    throw DimensionError("expected 4n-6 parameters");
  }
  // layout: n-1 angles and n-1 phases for the chain lifting e1, then n-2
  // angles and n-2 phases for the chain lifting e2 inside the complement
  const auto t1 = params.segment(0, n - 1);
  const auto p1 = params.segment(n - 1, n - 1);
  const auto t2 = params.segment(2 * (n - 1), n - 2);
  const auto p2 = params.segment(2 * (n - 1) + (n - 2), n - 2);

  Vector u = Vector::Zero(n);
  Vector v = Vector::Zero(n);
  u(0) = 1.0;
  v(1) = 1.0;
  for (int k = 0; k < n - 2; ++k) apply_givens(v, k + 1, t2(k), p2(k));
  for (int k = 0; k < n - 1; ++k) {
    apply_givens(u, k, t1(k), p1(k));
    apply_givens(v, k, t1(k), p1(k));
  }
  return {std::move(u), std::move(v)};
}

DistributionSummary run_distribution(const ExperimentConfig& config) {
  validate(config);
  const SubspaceEmbedding embedding =
      embedding_for(config.shape, config.subspace);
  const EntanglementMeasureSpec measure =
      EntanglementMeasureSpec::for_shape(config.shape);

  std::vector<double> values(config.samples);
  parallel_for(config.samples, config.workers, [&](long i) {
    RandomSource rng(config.seed, static_cast<std::uint64_t>(i));
    const auto [psi_i, psi_f] = random_orthogonal_pair(embedding, rng);
    values[i] = time_averaged_entanglement(decompose(psi_i, psi_f), measure);
  });

  DistributionSummary summary;
  summary.samples = config.samples;
  summary.seed = config.seed;
  summary.min = values[0];
  summary.max = values[0];
  double sum = 0.0;
  std::vector<long> counts(config.bins, 0);
  const double width = 1.0 / config.bins;
  for (double v : values) {
    summary.min = std::min(summary.min, v);
    summary.max = std::max(summary.max, v);
    sum += v;
    const int bin = std::clamp(static_cast<int>(v * config.bins), 0,
                               config.bins - 1);
    ++counts[bin];
  }
  summary.mean = sum / static_cast<double>(config.samples);

  summary.histogram.resize(config.bins);
  long best = -1;
  for (int b = 0; b < config.bins; ++b) {
    summary.histogram[b].center = (b + 0.5) * width;
    summary.histogram[b].density =
        static_cast<double>(counts[b]) /
        (static_cast<double>(config.samples) * width);
    if (counts[b] > best) {
      best = counts[b];
      summary.mode = summary.histogram[b].center;
    }
  }
  return summary;
}

MinimizationResult minimize_avg_entanglement(const Shape& shape,
                                             Subspace subspace, int budget,
                                             std::uint64_t seed, int workers) {
  if (budget < 1) throw DomainError("minimization budget must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  const SubspaceEmbedding embedding = embedding_for(shape, subspace);
  const EntanglementMeasureSpec measure =
      EntanglementMeasureSpec::for_shape(shape);
  const int n = embedding.coeff_dim();
  const int nparams = 4 * n - 6;

  auto objective = [&](const Eigen::VectorXd& params) {
    const auto [cu, cv] = two_column_unitary(n, params);
    return time_averaged_entanglement(
        decompose(embedding.embed(cu), embedding.embed(cv)), measure);
  };

  std::vector<NelderMeadResult> runs(budget);
  parallel_for(budget, workers, [&](long r) {
    RandomSource rng(seed, static_cast<std::uint64_t>(r));
    Eigen::VectorXd x0(nparams);
    // angles in [0, pi), phases in [0, 2 pi)
    for (int k = 0; k < nparams; ++k) {
      const bool is_angle = (k < n - 1) || (k >= 2 * (n - 1) && k < 3 * n - 4);
      x0(k) = rng.next_double() * (is_angle ? 1.0 : 2.0) * std::numbers::pi;
    }
    runs[r] = nelder_mead(objective, x0, 0.4);
  });

  // deterministic merge: value first, restart index as tie-break
  int best = 0;
  for (int r = 1; r < budget; ++r) {
    if (runs[r].value < runs[best].value) best = r;
  }

  // polish the winner with progressively smaller simplices
  NelderMeadResult winner = runs[best];
  for (double step : {0.05, 0.002}) {
    NelderMeadResult polished = nelder_mead(objective, winner.x, step);
    if (polished.value < winner.value) winner = polished;
  }

  MinimizationResult result;
  result.value = winner.value;
  auto [cu, cv] = two_column_unitary(n, winner.x);
  result.coeff_initial = std::move(cu);
  result.coeff_final = std::move(cv);
  result.pair.push_back(embedding.embed(result.coeff_initial));
  result.pair.push_back(embedding.embed(result.coeff_final));
  return result;
}

std::vector<CaseResult> run_case_studies() {
  const Shape shape{2, 2};
  const EntanglementMeasureSpec measure{MeasureKind::bipartite_linear_entropy};
  const double r2 = 1.0 / std::sqrt(2.0);
  std::vector<CaseResult> report;

  auto add = [&report](std::string name, double computed, double reference) {
    const bool pass = std::abs(computed - reference) <= kCaseStudyTol;
    report.push_back({std::move(name), computed, reference, pass});
  };

  // (i): |00> -> cos(a)/sqrt2 (|01>+|10>) + sin(a)|11>
  const PureState zero_zero(Vector{{1.0, 0.0, 0.0, 0.0}}, shape);
  const double alphas[] = {0.0, std::asin(1.0 / std::sqrt(3.0)),
                           std::numbers::pi / 2.0};
  const char* labels[] = {"case i, alpha=0", "case i, alpha=asin(1/sqrt3)",
                          "case i, alpha=pi/2"};
  for (int k = 0; k < 3; ++k) {
    const double a = alphas[k];
    Vector fin{{0.0, std::cos(a) * r2, std::cos(a) * r2, std::sin(a)}};
    const PureState psi_f(std::move(fin), shape);
    add(labels[k],
        time_averaged_entanglement(decompose(zero_zero, psi_f), measure),
        case_i_closed_form(a));
  }

  // (ii): (|01>+|10>)/sqrt2 -> (|00>+|11>)/sqrt2
  {
    const PureState psi_i(Vector{{0.0, r2, r2, 0.0}}, shape);
    const PureState psi_f(Vector{{r2, 0.0, 0.0, r2}}, shape);
    add("case ii",
        time_averaged_entanglement(decompose(psi_i, psi_f), measure), 0.5);
  }

  // (iii): (|00> - i|11>)/sqrt2 -> (i|00> - |11>)/sqrt2, maximally
  // entangled at every point of the path
  {
    const Complex i(0.0, 1.0);
    const PureState psi_i(Vector{{r2, 0.0, 0.0, -i * r2}}, shape);
    const PureState psi_f(Vector{{i * r2, 0.0, 0.0, -r2}}, shape);
    const GeodesicPath path = decompose(psi_i, psi_f);
    add("case iii, <E>", time_averaged_entanglement(path, measure), 1.0);

    const QuadratureRule rule =
        gauss_legendre(kTimeAverageNodes, 0.0, path.theta() / 2.0);
    double worst = 1.0;
    for (double xi : rule.nodes) {
      const double e = linear_entropy(evolve(path, xi));
      if (std::abs(e - 1.0) > std::abs(worst - 1.0)) worst = e;
    }
    add("case iii, E at worst node", worst, 1.0);
  }
  return report;
}

std::string subspace_name(Subspace subspace) {
  return subspace == Subspace::symmetric ? "symmetric" : "full";
}

Subspace parse_subspace(const std::string& name) {
  if (name == "symmetric") return Subspace::symmetric;
  if (name == "full") return Subspace::full;
  throw ConfigError("unknown subspace '" + name + "' (use symmetric|full)");
}

}  // namespace brachisto
