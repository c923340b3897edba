// test-only reference implementations, kept independent of the library code
// paths they are used to check
#pragma once

#include <functional>
#include <vector>

#include "brachisto/rng.hpp"
#include "brachisto/state.hpp"

namespace brachisto::oracle {

// reduced matrix by explicit summation over multi-indices (digit
// decomposition), independent of the stride logic in partial_trace
inline Matrix brute_force_reduced(const PureState& state, int keep) {
  const Shape& shape = state.shape();
  const int subsystems = static_cast<int>(shape.size());
  const int dim = state.dim();

  auto digits_of = [&](int flat) {
    std::vector<int> digits(subsystems);
    for (int k = subsystems - 1; k >= 0; --k) {
      digits[k] = flat % shape[k];
      flat /= shape[k];
    }
    return digits;
  };

  Matrix rho = Matrix::Zero(shape[keep], shape[keep]);
  for (int u = 0; u < dim; ++u) {
    const auto du = digits_of(u);
    for (int v = 0; v < dim; ++v) {
      const auto dv = digits_of(v);
      bool rest_equal = true;
      for (int k = 0; k < subsystems; ++k) {
        if (k != keep && du[k] != dv[k]) rest_equal = false;
      }
      if (rest_equal) {
        rho(du[keep], dv[keep]) +=
            state.amplitude(u) * std::conj(state.amplitude(v));
      }
    }
  }
  return rho;
}

// normalized complex-Gaussian vector: the direct route to a Haar-random
// pure state
inline PureState random_state(const Shape& shape, RandomSource& rng) {
  Vector v(shape_dim(shape));
  for (int k = 0; k < v.size(); ++k) v(k) = rng.next_complex_normal();
  return PureState(std::move(v), shape);
}

// product state a (x) b, row-major with a slowest
inline PureState tensor(const PureState& a, const PureState& b) {
  Vector v(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      v(i * b.dim() + j) = a.amplitude(i) * b.amplitude(j);
    }
  }
  Shape shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  return PureState(std::move(v), shape);
}

// composite trapezoid rule, an integrator with no code in common with the
// Gauss-Legendre implementation
inline double trapezoid(const std::function<double(double)>& f, double a,
                        double b, int intervals) {
  double sum = 0.5 * (f(a) + f(b));
  const double h = (b - a) / intervals;
  for (int k = 1; k < intervals; ++k) sum += f(a + k * h);
  return sum * h;
}

}  // namespace brachisto::oracle
