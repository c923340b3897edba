#pragma once

#include <functional>
#include <vector>

namespace brachisto {

// Gauss-Legendre nodes and weights on [a, b].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule, exact for polynomials up to degree 2n-1
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

double integrate(const std::function<double(double)>& f, double a, double b,
                 int n = 64);

}  // namespace brachisto
