#pragma once

#include <Eigen/Core>
#include <vector>

namespace exrot {

using Matrix = Eigen::MatrixXd;  // dense, column-major, 64-bit reals
using Vector = Eigen::VectorXd;

/// Kronecker product. Block (i,j) of the result equals a(i,j)*b.
Matrix kron(const Matrix& a, const Matrix& b);

/// n-fold Kronecker power v ⊗ v ⊗ ... ⊗ v. n == 0 yields the 1x1 matrix [1].
Matrix kron_power(const Matrix& v, int n);

/// Stacks the columns of m into a single column vector.
Vector vec(const Matrix& m);

/// Inverse of vec: reshapes v into a rows x cols matrix, column by column.
Matrix devec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Entrywise product. Dimensions must match.
Matrix hadamard(const Matrix& a, const Matrix& b);

/// vec(I_d): the d²-vector with ones at positions (i-1)*d + i.
Vector delta2(int d);

/// A permutation of the factors of a Kronecker product, applied lazily as an
/// index permutation instead of a materialized commutation matrix. For rank-1
/// inputs, commutation_apply maps a_1 ⊗ ... ⊗ a_n to a_{σ⁻¹(1)} ⊗ ... ⊗ a_{σ⁻¹(n)},
/// i.e. factor k moves to slot mapping[k]; general vectors follow by linearity.
struct IndexPermutation {
  std::vector<int> dims;     // per-factor dimensions d_1..d_n, all >= 1
  std::vector<int> mapping;  // bijection on {0..n-1}; factor k goes to slot mapping[k]

  int arity() const { return static_cast<int>(dims.size()); }
  Eigen::Index total_size() const;
  IndexPermutation inverse() const;

  /// Swap of factors i and j (0-based) among n factors of common dimension d.
  static IndexPermutation swap(int n, int i, int j, int d);
  static IndexPermutation identity(int n, int d);
};

Vector commutation_apply(const IndexPermutation& p, const Vector& v);

}  // namespace exrot
