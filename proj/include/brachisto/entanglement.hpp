#pragma once

#include "brachisto/geodesic.hpp"
#include "brachisto/state.hpp"

namespace brachisto {

enum class MeasureKind {
  bipartite_linear_entropy,
  averaged_single_subsystem_bipartitions,
};

struct EntanglementMeasureSpec {
  MeasureKind kind = MeasureKind::bipartite_linear_entropy;

  // bipartite linear entropy for two subsystems, the three-bipartition
  // average for (2,2,2)
  static EntanglementMeasureSpec for_shape(const Shape& shape);
};

// Linear entropy N_A/(N_A-1) [1 - Tr(rho_A^2)] of a bipartite pure state,
// reducing the subsystem of smaller dimension (ties go to subsystem A).
// 0 for product states, 1 for maximally entangled ones.
double linear_entropy(const PureState& state);

// Three-qubit measure: arithmetic mean of the linear entropy over the three
// qubit-vs-rest bipartitions, each normalized with N_A = 2.
double multipartite_entanglement(const PureState& state);

// dispatch on the measure kind, checking shape compatibility
double evaluate_measure(const EntanglementMeasureSpec& measure,
                        const PureState& state);

// Time average (2/theta) * integral_0^{theta/2} E(xi) dxi along the path,
// evaluated with a fixed 64-node Gauss-Legendre rule. Independent of the
// energy scale omega by construction.
double time_averaged_entanglement(const GeodesicPath& path,
                                  const EntanglementMeasureSpec& measure);

// Closed form for the |00> -> cos(a)/sqrt2 (|01>+|10>) + sin(a)|11> family:
//   <E>(a) = (3/8) cos^4 a - (2/pi) cos^2 a sin a + (1/2) sin^2 a
double case_i_closed_form(double alpha);

// number of quadrature nodes used by time_averaged_entanglement
inline constexpr int kTimeAverageNodes = 64;

}  // namespace brachisto
