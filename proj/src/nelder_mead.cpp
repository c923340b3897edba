#include "brachisto/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "brachisto/errors.hpp"

namespace brachisto {

NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& x0, double step, const NelderMeadOptions& opt) {
  const int n = static_cast<int>(x0.size());
  if (n < 1) throw DomainError("nelder_mead needs at least one parameter");

  std::vector<Eigen::VectorXd> x(n + 1, x0);
  std::vector<double> f(n + 1);
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& p) {
    ++evals;
    return objective(p);
  };

  for (int i = 1; i <= n; ++i) x[i](i - 1) += step;
  for (int i = 0; i <= n; ++i) f[i] = eval(x[i]);

  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);

  NelderMeadResult result;
  while (true) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f[a] < f[b]; });
    const int best = order[0], worst = order[n], second_worst = order[n - 1];

    double xspread = 0.0;
    for (int i = 1; i <= n; ++i) {
      xspread = std::max(xspread, (x[order[i]] - x[best]).lpNorm<Eigen::Infinity>());
    }
    if (std::abs(f[worst] - f[best]) <= opt.f_tol && xspread <= opt.x_tol) {
      result.converged = true;
      break;
    }
    if (evals >= opt.max_evals) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += x[order[i]];
    centroid /= n;

    const Eigen::VectorXd reflected =
        centroid + opt.reflection * (centroid - x[worst]);
    const double fr = eval(reflected);

    if (fr < f[best]) {
      const Eigen::VectorXd expanded =
          centroid + opt.expansion * (reflected - centroid);
      const double fe = eval(expanded);
      if (fe < fr) {
        x[worst] = expanded;
        f[worst] = fe;
      } else {
        x[worst] = reflected;
        f[worst] = fr;
      }
    } else if (fr < f[second_worst]) {
      x[worst] = reflected;
      f[worst] = fr;
    } else {
      const bool outside = fr < f[worst];
      const Eigen::VectorXd contracted =
          outside ? centroid + opt.contraction * (reflected - centroid)
                  : centroid + opt.contraction * (x[worst] - centroid);
      const double fc = eval(contracted);
      if (fc < std::min(fr, f[worst])) {
        x[worst] = contracted;
        f[worst] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          const int k = order[i];
          x[k] = x[best] + opt.shrink * (x[k] - x[best]);
          f[k] = eval(x[k]);
        }
      }
    }
  }

  const int best = *std::min_element(order.begin(), order.end(),
                                     [&](int a, int b) { return f[a] < f[b]; });
  result.x = x[best];
  result.value = f[best];
  result.evals = evals;
  return result;
}

}  // namespace brachisto
