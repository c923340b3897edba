#include "brachisto/entanglement.hpp"

#include <cmath>
#include <numbers>

#include "brachisto/quadrature.hpp"

namespace brachisto {

EntanglementMeasureSpec EntanglementMeasureSpec::for_shape(const Shape& shape) {
  if (shape.size() == 2) {
    return {MeasureKind::bipartite_linear_entropy};
  }
  if (shape == Shape{2, 2, 2}) {
    return {MeasureKind::averaged_single_subsystem_bipartitions};
  }
  throw DimensionError("no default entanglement measure for this shape");
}

double linear_entropy(const PureState& state) {
  if (state.subsystems() != 2) {
    throw DimensionError("linear entropy requires exactly two subsystems");
  }
  // reduce the smaller subsystem; ties go to A
  const int keep = state.shape()[0] <= state.shape()[1] ? 0 : 1;
  const double na = state.shape()[keep];
  return na / (na - 1.0) * (1.0 - purity(partial_trace(state, keep)));
}

double multipartite_entanglement(const PureState& state) {
  if (state.shape() != Shape{2, 2, 2}) {
    throw DimensionError("three-qubit measure requires shape (2,2,2)");
  }
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    sum += 2.0 * (1.0 - purity(partial_trace(state, k)));
  }
  return sum / 3.0;
}

double evaluate_measure(const EntanglementMeasureSpec& measure,
                        const PureState& state) {
  switch (measure.kind) {
    case MeasureKind::bipartite_linear_entropy:
      return linear_entropy(state);
    case MeasureKind::averaged_single_subsystem_bipartitions:
      return multipartite_entanglement(state);
  }
  throw DomainError("unknown entanglement measure kind");
}

double time_averaged_entanglement(const GeodesicPath& path,
                                  const EntanglementMeasureSpec& measure) {
  static const QuadratureRule base = gauss_legendre(kTimeAverageNodes, 0.0, 1.0);
  const double half_theta = path.theta() / 2.0;
  double sum = 0.0;
  for (int k = 0; k < kTimeAverageNodes; ++k) {
    const double xi = half_theta * base.nodes[k];
    sum += base.weights[k] * evaluate_measure(measure, evolve(path, xi));
  }
  // the half_theta node scaling and the 2/theta prefactor cancel to 1
  return sum;
}

double case_i_closed_form(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return 3.0 / 8.0 * c * c * c * c -
         2.0 / std::numbers::pi * c * c * s + 0.5 * s * s;
}

}  // namespace brachisto
