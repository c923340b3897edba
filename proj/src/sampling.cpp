#include "brachisto/sampling.hpp"

#include <cmath>

namespace brachisto {

namespace {
constexpr double kOrthonormalTol = 1e-10;

PureState basis_state(const Shape& shape, std::initializer_list<int> indices,
                      std::initializer_list<double> amps) {
  Vector v = Vector::Zero(shape_dim(shape));
  auto it = amps.begin();
  for (int idx : indices) v(idx) = *it++;
  return PureState(std::move(v), shape);
}
}  // namespace

SubspaceEmbedding::SubspaceEmbedding(std::vector<PureState> basis,
                                     Shape full_shape)
    : basis_(std::move(basis)), full_shape_(std::move(full_shape)) {
  if (basis_.empty()) throw DimensionError("embedding needs at least one basis state");
  const int dim = shape_dim(full_shape_);
  columns_.resize(dim, static_cast<int>(basis_.size()));
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k].shape() != full_shape_) {
      throw DimensionError("embedding basis state has wrong shape");
    }
    columns_.col(static_cast<int>(k)) = basis_[k].amplitudes();
  }
  const Matrix gram = columns_.adjoint() * columns_;
  if ((gram - Matrix::Identity(coeff_dim(), coeff_dim())).cwiseAbs().maxCoeff() >
      kOrthonormalTol) {
    throw DomainError("embedding basis is not orthonormal");
  }
}

PureState SubspaceEmbedding::embed(const Vector& coeffs) const {
  if (coeffs.size() != coeff_dim()) {
    throw DimensionError("coefficient vector has wrong length");
  }
  return PureState(columns_ * coeffs, full_shape_);
}

Matrix haar_unitary(int dim, RandomSource& rng) {
  if (dim < 1) throw DomainError("unitary dimension must be >= 1");
  Matrix ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ginibre(i, j) = rng.next_complex_normal();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix& qrm = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = qrm(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

SubspaceEmbedding symmetric_basis(const Shape& shape) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  if (shape == Shape{2, 2}) {
    return SubspaceEmbedding(
        {
            basis_state(shape, {0}, {1.0}),       // |00>
            basis_state(shape, {1, 2}, {r2, r2}),  // (|01>+|10>)/sqrt2
            basis_state(shape, {3}, {1.0}),       // |11>
        },
        shape);
  }
  if (shape == Shape{2, 2, 2}) {
    return SubspaceEmbedding(
        {
            basis_state(shape, {0}, {1.0}),                // |000>
            basis_state(shape, {1, 2, 4}, {r3, r3, r3}),   // W
            basis_state(shape, {3, 5, 6}, {r3, r3, r3}),   // W-bar
            basis_state(shape, {7}, {1.0}),                // |111>
        },
        shape);
  }
  if (shape == Shape{3, 3}) {
    return SubspaceEmbedding(
        {
            basis_state(shape, {0}, {1.0}),       // |00>
            basis_state(shape, {4}, {1.0}),       // |11>
            basis_state(shape, {8}, {1.0}),       // |22>
            basis_state(shape, {1, 3}, {r2, r2}),  // (|01>+|10>)/sqrt2
            basis_state(shape, {2, 6}, {r2, r2}),  // (|02>+|20>)/sqrt2
            basis_state(shape, {5, 7}, {r2, r2}),  // (|12>+|21>)/sqrt2
        },
        shape);
  }
  throw DimensionError("symmetric basis supports shapes (2,2), (2,2,2), (3,3)");
}

SubspaceEmbedding full_basis(const Shape& shape) {
  const int dim = shape_dim(shape);
  std::vector<PureState> basis;
  basis.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    basis.emplace_back(std::move(v), shape);
  }
  return SubspaceEmbedding(std::move(basis), shape);
}

std::pair<PureState, PureState> random_orthogonal_pair(
    const SubspaceEmbedding& embedding, RandomSource& rng) {
  if (embedding.coeff_dim() < 2) {
    throw DomainError("orthogonal pairs need coefficient dimension >= 2");
  }
  const Matrix u = haar_unitary(embedding.coeff_dim(), rng);
  return {embedding.embed(u.col(0)), embedding.embed(u.col(1))};
}

}  // namespace brachisto
