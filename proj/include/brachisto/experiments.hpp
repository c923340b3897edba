#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brachisto/entanglement.hpp"
#include "brachisto/sampling.hpp"

namespace brachisto {

enum class Subspace { symmetric, full };

struct ExperimentConfig {
  Shape shape;
  Subspace subspace = Subspace::full;
  long samples = 100000;
  std::uint64_t seed = 0;
  int bins = 100;
  int workers = 1;
};

struct HistogramBin {
  double center;
  double density;
};

// Histogram plus scalar statistics of <E> over random orthogonal pairs.
// The mode is the center of the bin with the highest density (first such
// bin on ties).
struct DistributionSummary {
  std::vector<HistogramBin> histogram;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double mode = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

// Draws `samples` random orthogonal pairs in the configured subspace and
// summarizes the distribution of their time-averaged entanglement. Sample i
// owns RNG stream i, so results are bit-identical for any worker count.
DistributionSummary run_distribution(const ExperimentConfig& config);

struct MinimizationResult {
  double value = 0.0;
  Vector coeff_initial;  // optimal pair in the subspace coefficient basis
  Vector coeff_final;
  std::vector<PureState> pair;  // the same pair embedded in the full space
};

// Multi-start Nelder-Mead minimization of <E> over orthogonal pairs in the
// chosen subspace. Candidate pairs are the first two columns of a unitary
// built from a chain of Givens rotations (angles + phases), so orthogonality
// holds by construction. `budget` is the number of random restarts.
MinimizationResult minimize_avg_entanglement(const Shape& shape,
                                             Subspace subspace, int budget,
                                             std::uint64_t seed,
                                             int workers = 1);

struct CaseResult {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  bool pass = false;
};

// tolerance applied to every case-study comparison
inline constexpr double kCaseStudyTol = 1e-6;

// The two-qubit analytic case studies: the separable-to-|psi(alpha)> family
// at alpha in {0, arcsin(1/sqrt3), pi/2}, the Bell-to-Bell transfer, and the
// path that stays maximally entangled throughout.
std::vector<CaseResult> run_case_studies();

// orthonormal pair in C^n from 4n-6 real parameters (Givens angles/phases)
std::pair<Vector, Vector> two_column_unitary(int n,
                                             const Eigen::VectorXd& params);

// helpers shared by the CLI
std::string subspace_name(Subspace subspace);
Subspace parse_subspace(const std::string& name);

}  // namespace brachisto
