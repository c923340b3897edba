#include "brachisto/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "brachisto/errors.hpp"

namespace brachisto {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("quadrature order must be >= 1");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // Newton iteration on P_n from the asymptotic root estimate; the roots
  // come in symmetric pairs so only half are computed.
  const int pairs = (n + 1) / 2;
  for (int k = 0; k < pairs; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < n; ++j) {
        const double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[k] = mid - half * x;
    rule.nodes[n - 1 - k] = mid + half * x;
    rule.weights[k] = half * w;
    rule.weights[n - 1 - k] = half * w;
  }
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int n) {
  const QuadratureRule rule = gauss_legendre(n, a, b);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += rule.weights[k] * f(rule.nodes[k]);
  return sum;
}

}  // namespace brachisto
