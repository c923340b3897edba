#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "brachisto/errors.hpp"

namespace brachisto {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// ordered list of local dimensions (N_A, N_B, ...), each >= 2
using Shape = std::vector<int>;

// total Hilbert-space dimension of a shape
int shape_dim(const Shape& shape);

// Normalized complex state vector over a multipartite Hilbert space.
// Amplitudes are indexed row-major with subsystem A slowest:
// |i_A i_B> sits at index i_A * N_B + i_B.
class PureState {
 public:
  // normalizes the input; rejects zero vectors and invalid shapes
  PureState(Vector amplitudes, Shape shape);

  const Vector& amplitudes() const { return amps_; }
  const Shape& shape() const { return shape_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  int subsystems() const { return static_cast<int>(shape_.size()); }
  Complex amplitude(int i) const { return amps_(i); }

 private:
  Vector amps_;
  Shape shape_;
};

// Hermitian, unit-trace complex matrix. Positive semidefiniteness is not
// enforced here; tests check it on demand.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  const Matrix& entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()); }

 private:
  Matrix entries_;
};

// <a|b> with a conjugated
Complex inner_product(const PureState& a, const PureState& b);

// reduced density matrix of subsystem `keep`, tracing out all others
DensityMatrix partial_trace(const PureState& state, int keep);

// Tr(rho^2); real because rho is Hermitian
double purity(const DensityMatrix& rho);

}  // namespace brachisto
