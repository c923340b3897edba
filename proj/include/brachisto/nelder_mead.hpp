#pragma once

#include <Eigen/Dense>
#include <functional>

namespace brachisto {

struct NelderMeadOptions {
  int max_evals = 20000;
  double f_tol = 1e-13;   // spread of simplex values
  double x_tol = 1e-10;   // spread of simplex vertices
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

// Downhill simplex minimization, initial simplex x0 plus `step` along each
// coordinate.
NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& x0, double step,
    const NelderMeadOptions& options = {});

}  // namespace brachisto
