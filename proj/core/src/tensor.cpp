#include "exrot/tensor.hpp"

#include <numeric>
#include <stdexcept>

namespace exrot {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron_power(const Matrix& v, int n) {
  if (n < 0) throw std::invalid_argument("kron_power: negative power");
  Matrix out = Matrix::Ones(1, 1);
  for (int k = 0; k < n; ++k) out = kron(out, v);
  return out;
}

Vector vec(const Matrix& m) {
  Vector out(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(k++) = m(i, j);
  return out;
}

Matrix devec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("devec: length does not match rows*cols");
  Matrix out(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = v(k++);
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hadamard: dimension mismatch");
  return a.cwiseProduct(b);
}

Vector delta2(int d) {
  if (d < 1) throw std::invalid_argument("delta2: d must be >= 1");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) out(static_cast<Eigen::Index>(i) * d + i) = 1.0;
  return out;
}

Eigen::Index IndexPermutation::total_size() const {
  Eigen::Index t = 1;
  for (int d : dims) t *= d;
  return t;
}

IndexPermutation IndexPermutation::inverse() const {
  // Acts on the permuted layout and sends each factor back to its home slot.
  IndexPermutation inv;
  const int n = arity();
  inv.dims.resize(n);
  inv.mapping.resize(n);
  for (int k = 0; k < n; ++k) {
    inv.mapping[mapping[k]] = k;
    inv.dims[mapping[k]] = dims[k];
  }
  return inv;
}

IndexPermutation IndexPermutation::swap(int n, int i, int j, int d) {
  IndexPermutation p = identity(n, d);
  std::swap(p.mapping[i], p.mapping[j]);
  return p;
}

IndexPermutation IndexPermutation::identity(int n, int d) {
  IndexPermutation p;
  p.dims.assign(n, d);
  p.mapping.resize(n);
  std::iota(p.mapping.begin(), p.mapping.end(), 0);
  return p;
}

Vector commutation_apply(const IndexPermutation& p, const Vector& v) {
  const int n = p.arity();
  if (v.size() != p.total_size())
    throw std::invalid_argument("commutation_apply: length does not match factor dims");
  for (int d : p.dims)
    if (d < 1) throw std::invalid_argument("commutation_apply: factor dims must be >= 1");

  // Output slot s holds the factor p.mapping⁻¹(s); its dimension follows the factor.
  std::vector<int> slot_factor(n);
  for (int k = 0; k < n; ++k) slot_factor[p.mapping[k]] = k;
  std::vector<Eigen::Index> out_dims(n);
  for (int s = 0; s < n; ++s) out_dims[s] = p.dims[slot_factor[s]];

  // Strides of the input multi-index (first factor outermost, Kronecker order).
  std::vector<Eigen::Index> in_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) in_stride[k] = in_stride[k + 1] * p.dims[k + 1];

  Vector out(v.size());
  std::vector<Eigen::Index> idx(n, 0);  // output multi-index
  for (Eigen::Index lin = 0; lin < out.size(); ++lin) {
    Eigen::Index src = 0;
    for (int s = 0; s < n; ++s) src += idx[s] * in_stride[slot_factor[s]];
    out(lin) = v(src);
    for (int s = n - 1; s >= 0; --s) {
      if (++idx[s] < out_dims[s]) break;
      idx[s] = 0;
    }
  }
  return out;
}

}  // namespace exrot
