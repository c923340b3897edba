#pragma once

#include "brachisto/state.hpp"

namespace brachisto {

// Canonicalized pair of pure states together with the data of the
// time-optimal path connecting them: separation angle theta defined by
// |<psi_I|psi_F>| = cos(theta/2), relative phase phi, the in-plane
// complement |psi_I_perp> orthogonal to |psi_I>, and psi_F with its global
// phase adjusted so that <psi_I|psi_F> is real and non-negative.
class GeodesicPath {
 public:
  const PureState& initial() const { return psi_i_; }
  const PureState& final_state() const { return psi_f_; }
  const PureState& canonical_final() const { return psi_f_canonical_; }
  const PureState& complement() const { return psi_i_perp_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  friend GeodesicPath decompose(const PureState& psi_i, const PureState& psi_f);
  GeodesicPath(PureState psi_i, PureState psi_f, PureState psi_f_canonical,
               PureState psi_i_perp, double theta, double phi)
      : psi_i_(std::move(psi_i)),
        psi_f_(std::move(psi_f)),
        psi_f_canonical_(std::move(psi_f_canonical)),
        psi_i_perp_(std::move(psi_i_perp)),
        theta_(theta),
        phi_(phi) {}

  PureState psi_i_;
  PureState psi_f_;
  PureState psi_f_canonical_;
  PureState psi_i_perp_;
  double theta_;
  double phi_;
};

// Builds the path data for a state pair. The complement is the normalized
// Gram-Schmidt residual of psi_F against psi_I; theta = 2 arccos|<psi_I|psi_F>|.
// Throws DegeneratePathError when the states coincide up to a global phase
// (theta < 1e-8), since the complement is then undefined.
GeodesicPath decompose(const PureState& psi_i, const PureState& psi_f);

// State at path parameter xi = omega t / hbar, 0 <= xi <= theta/2:
//   [cos(xi) - cot(theta/2) sin(xi)] |psi_I> + [sin(xi)/sin(theta/2)] |psi_F_canonical>
// For orthogonal pairs this is cos(xi)|psi_I> + sin(xi)|psi_F>.
PureState evolve(const GeodesicPath& path, double xi);

// Optimal transit time hbar*theta/(2*omega), in hbar = 1 working units.
double duration(double theta, double omega);

}  // namespace brachisto
