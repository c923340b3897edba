#include "brachisto/geodesic.hpp"

#include <cmath>
#include <numbers>

namespace brachisto {

namespace {
constexpr double kDegenerateTheta = 1e-8;
constexpr double kXiSlack = 1e-12;
// below this magnitude the overlap is rounding noise and its phase carries
// no information; treat the pair as exactly orthogonal (delta = 0)
constexpr double kPhaseNoiseFloor = 1e-12;

double wrap_to_2pi(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(angle, two_pi);
  if (w < 0.0) w += two_pi;
  return w;
}
}  // namespace

GeodesicPath decompose(const PureState& psi_i, const PureState& psi_f) {
  if (psi_i.shape() != psi_f.shape()) {
    throw DimensionError("geodesic endpoints must have equal shapes");
  }

  const Complex overlap = inner_product(psi_i, psi_f);
  const double c = std::min(std::abs(overlap), 1.0);
  const double theta = 2.0 * std::acos(c);
  if (theta < kDegenerateTheta) {
    throw DegeneratePathError("initial and final states coincide up to a phase");
  }

  // remove the global phase of psi_F so the overlap becomes real and >= 0
  const double delta = c > kPhaseNoiseFloor ? std::arg(overlap) : 0.0;
  const Complex phase = std::exp(Complex(0.0, -delta));
  PureState psi_f_canonical(phase * psi_f.amplitudes(), psi_f.shape());

  // Gram-Schmidt residual of the raw psi_F against psi_I
  Vector residual = psi_f.amplitudes() - overlap * psi_i.amplitudes();
  PureState psi_i_perp(std::move(residual), psi_i.shape());

  // phase of the complement coefficient in the canonical expansion
  // psi_F_canonical = cos(theta/2) psi_I + e^{i(phi+pi/2)} sin(theta/2) psi_I_perp
  const Complex comp_coeff =
      psi_i_perp.amplitudes().dot(psi_f_canonical.amplitudes());
  const double phi = wrap_to_2pi(std::arg(comp_coeff) - std::numbers::pi / 2.0);

  return GeodesicPath(psi_i, psi_f, std::move(psi_f_canonical),
                      std::move(psi_i_perp), theta, phi);
}

PureState evolve(const GeodesicPath& path, double xi) {
  const double half_theta = path.theta() / 2.0;
  if (xi < -kXiSlack || xi > half_theta + kXiSlack) {
    throw DomainError("path parameter xi outside [0, theta/2]");
  }
  const double s = std::sin(half_theta);
  const double ci = std::cos(xi) - (std::cos(half_theta) / s) * std::sin(xi);
  const double cf = std::sin(xi) / s;
  Vector amps = ci * path.initial().amplitudes() +
                cf * path.canonical_final().amplitudes();
  return PureState(std::move(amps), path.initial().shape());
}

double duration(double theta, double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  return theta / (2.0 * omega);
}

}  // namespace brachisto
