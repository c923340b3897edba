#include "brachisto/state.hpp"

#include <cmath>

namespace brachisto {

namespace {
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kZeroNormTol = 1e-12;
}  // namespace

int shape_dim(const Shape& shape) {
  int dim = 1;
  for (int d : shape) dim *= d;
  return dim;
}

PureState::PureState(Vector amplitudes, Shape shape)
    : amps_(std::move(amplitudes)), shape_(std::move(shape)) {
  if (shape_.empty()) throw DimensionError("state shape must not be empty");
  for (int d : shape_) {
    if (d < 2) throw DimensionError("local dimensions must be >= 2");
  }
  if (shape_dim(shape_) != amps_.size()) {
    throw DimensionError("amplitude count does not match shape");
  }
  const double norm = amps_.norm();
  if (!(norm > kZeroNormTol)) {
    throw DomainError("cannot normalize a (near-)zero amplitude vector");
  }
  amps_ /= norm;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw DomainError("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw DomainError("density matrix trace differs from 1");
  }
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.shape() != b.shape()) throw DimensionError("inner product requires equal shapes");
  return a.amplitudes().dot(b.amplitudes());
}

DensityMatrix partial_trace(const PureState& state, int keep) {
  const Shape& shape = state.shape();
  if (state.subsystems() < 2) {
    throw DimensionError("partial trace requires at least two subsystems");
  }
  if (keep < 0 || keep >= state.subsystems()) {
    throw DimensionError("subsystem index out of range");
  }

  // split the flat index as (pre, kept, post) with row-major strides
  int pre = 1, post = 1;
  for (int k = 0; k < keep; ++k) pre *= shape[k];
  for (int k = keep + 1; k < state.subsystems(); ++k) post *= shape[k];
  const int d = shape[keep];

  const Vector& psi = state.amplitudes();
  Matrix rho = Matrix::Zero(d, d);
  for (int p = 0; p < pre; ++p) {
    for (int q = 0; q < post; ++q) {
      for (int i = 0; i < d; ++i) {
        const Complex ai = psi((p * d + i) * post + q);
        for (int j = 0; j < d; ++j) {
          rho(i, j) += ai * std::conj(psi((p * d + j) * post + q));
        }
      }
    }
  }
  return DensityMatrix(std::move(rho));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho
  return rho.entries().squaredNorm();
}

}  // namespace brachisto
