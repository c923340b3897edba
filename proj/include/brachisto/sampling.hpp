#pragma once

#include <utility>
#include <vector>

#include "brachisto/rng.hpp"
#include "brachisto/state.hpp"

namespace brachisto {

// Isometry from a low-dimensional coefficient space into the full Hilbert
// space, given by an orthonormal list of basis states.
class SubspaceEmbedding {
 public:
  SubspaceEmbedding(std::vector<PureState> basis, Shape full_shape);

  const std::vector<PureState>& basis() const { return basis_; }
  const Shape& full_shape() const { return full_shape_; }
  int coeff_dim() const { return static_cast<int>(basis_.size()); }

  // sum_k coeffs[k] |basis_k>
  PureState embed(const Vector& coeffs) const;

 private:
  std::vector<PureState> basis_;
  Shape full_shape_;
  Matrix columns_;  // basis states as columns, for fast embedding
};

// Haar-distributed unitary: complex Ginibre matrix, QR factorization, then
// each column of Q rescaled by the unit phase of the matching diagonal entry
// of R (plain QR alone is not Haar).
Matrix haar_unitary(int dim, RandomSource& rng);

// Permutation-symmetric orthonormal basis. Supported shapes: (2,2) with the
// 3 states {|00>, (|01>+|10>)/sqrt2, |11>}, (2,2,2) with the 4 Dicke states,
// and (3,3) with the 6 states {|00>,|11>,|22>,(|01>+|10>)/sqrt2,
// (|02>+|20>)/sqrt2,(|12>+|21>)/sqrt2}.
SubspaceEmbedding symmetric_basis(const Shape& shape);

// identity embedding of the full space
SubspaceEmbedding full_basis(const Shape& shape);

// First two columns of a Haar unitary on the coefficient space, mapped
// through the embedding: an orthonormal state pair.
std::pair<PureState, PureState> random_orthogonal_pair(
    const SubspaceEmbedding& embedding, RandomSource& rng);

}  // namespace brachisto
