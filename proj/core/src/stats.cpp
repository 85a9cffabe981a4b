#include "exrot/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace exrot {

Cumulants1D cumulants_1d(std::span<const double> data) {
  const std::size_t n = data.size();
  if (n < 4) throw std::invalid_argument("cumulants_1d: need at least 4 samples");

  long double mean = 0.0L;
  for (double x : data) mean += x;
  mean /= n;

  long double m2 = 0.0L, m3 = 0.0L, m4 = 0.0L;
  for (double x : data) {
    const long double d = x - mean;
    const long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (!(m2 > 0.0L)) throw std::invalid_argument("cumulants_1d: zero variance");

  Cumulants1D out;
  out.n = n;
  out.mean = static_cast<double>(mean);
  out.sigma = std::sqrt(static_cast<double>(m2));
  out.k3 = static_cast<double>(m3);
  out.k4 = static_cast<double>(m4 - 3.0L * m2 * m2);
  return out;
}

Vector moment_vector(const Matrix& data, int k, bool centered) {
  const Eigen::Index n = data.rows();
  const Eigen::Index d = data.cols();
  if (n == 0) throw std::invalid_argument("moment_vector: empty data");
  if (k < 0 || k > 4)
    throw std::invalid_argument("moment_vector: supported orders are 0..4");
  if (n < k) throw std::invalid_argument("moment_vector: need n >= k samples");

  Vector center = Vector::Zero(d);
  if (centered) center = data.colwise().mean();

  Eigen::Index len = 1;
  for (int i = 0; i < k; ++i) len *= d;
  std::vector<long double> acc(static_cast<std::size_t>(len), 0.0L);
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(std::max(k, 1)), 0);

  for (Eigen::Index r = 0; r < n; ++r) {
    std::fill(idx.begin(), idx.end(), 0);
    for (Eigen::Index lin = 0; lin < len; ++lin) {
      long double p = 1.0L;
      for (int j = 0; j < k; ++j) p *= data(r, idx[j]) - center(idx[j]);
      acc[static_cast<std::size_t>(lin)] += p;
      for (int j = k - 1; j >= 0; --j) {
        if (++idx[j] < d) break;
        idx[j] = 0;
      }
    }
  }
  Vector out(len);
  for (Eigen::Index i = 0; i < len; ++i)
    out(i) = static_cast<double>(acc[static_cast<std::size_t>(i)] / n);
  return out;
}

Vector symmetrize(const Vector& v, int d, int k) {
  Eigen::Index len = 1;
  for (int i = 0; i < k; ++i) len *= d;
  if (v.size() != len) throw std::invalid_argument("symmetrize: length mismatch");

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Vector out = Vector::Zero(len);
  std::vector<Eigen::Index> stride(k, 1);
  for (int j = k - 2; j >= 0; --j) stride[j] = stride[j + 1] * d;

  int count = 0;
  std::vector<Eigen::Index> idx(k, 0);
  do {
    ++count;
    std::fill(idx.begin(), idx.end(), 0);
    for (Eigen::Index lin = 0; lin < len; ++lin) {
      Eigen::Index src = 0;
      for (int j = 0; j < k; ++j) src += idx[perm[j]] * stride[j];
      out(lin) += v(src);
      for (int j = k - 1; j >= 0; --j) {
        if (++idx[j] < d) break;
        idx[j] = 0;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out / count;
}

CumulantVectors cumulant_vectors(const Matrix& whitened_data) {
  const int d = static_cast<int>(whitened_data.cols());
  const Vector m2 = moment_vector(whitened_data, 2, true);
  const Matrix cov = devec(m2, d, d);
  if ((cov - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-2)
    throw std::invalid_argument(
        "cumulant_vectors: data is not whitened (covariance deviates from I)");

  CumulantVectors out;
  out.d = d;
  out.m2 = m2;
  out.c3 = symmetrize(moment_vector(whitened_data, 3, true), d, 3);

  Vector c4 = moment_vector(whitened_data, 4, true);
  // subtract the three pair-pairings delta_ij delta_kl + delta_ik delta_jl
  // + delta_il delta_jk (the Gaussian part of m(4,d) under covariance I)
  std::array<Eigen::Index, 4> idx{};
  const Eigen::Index len = c4.size();
  for (Eigen::Index lin = 0; lin < len; ++lin) {
    const bool p12 = idx[0] == idx[1], p34 = idx[2] == idx[3];
    const bool p13 = idx[0] == idx[2], p24 = idx[1] == idx[3];
    const bool p14 = idx[0] == idx[3], p23 = idx[1] == idx[2];
    c4(lin) -= (p12 && p34 ? 1.0 : 0.0) + (p13 && p24 ? 1.0 : 0.0) +
               (p14 && p23 ? 1.0 : 0.0);
    for (int j = 3; j >= 0; --j) {
      if (++idx[j] < d) break;
      idx[j] = 0;
    }
  }
  out.c4 = symmetrize(c4, d, 4);
  return out;
}

CumulantVectors make_cumulant_vectors(int d, Vector c3, Vector c4) {
  Eigen::Index l3 = 1, l4 = 1;
  for (int i = 0; i < 3; ++i) l3 *= d;
  for (int i = 0; i < 4; ++i) l4 *= d;
  if (c3.size() != l3 || c4.size() != l4)
    throw std::invalid_argument("make_cumulant_vectors: length mismatch");
  CumulantVectors out;
  out.d = d;
  out.m2 = delta2(d);
  out.c3 = std::move(c3);
  out.c4 = std::move(c4);
  return out;
}

std::pair<Matrix, WhitenTransform> whiten(const Matrix& data) {
  const Eigen::Index n = data.rows();
  const Eigen::Index d = data.cols();
  if (n < d + 1) throw std::invalid_argument("whiten: not enough samples");

  WhitenTransform t;
  t.center = data.colwise().mean();
  Matrix centered = data.rowwise() - t.center.transpose();
  Matrix cov = (centered.transpose() * centered) / static_cast<double>(n);

  Eigen::SelfAdjointEigenSolver<Matrix> es(cov);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("whiten: eigendecomposition failed");
  const Vector evals = es.eigenvalues();
  if (evals.minCoeff() <= 1e-12 * std::max(1.0, evals.maxCoeff()))
    throw std::invalid_argument("whiten: singular covariance");

  const Matrix v = es.eigenvectors();
  t.forward = v * evals.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
  t.inverse = v * evals.cwiseSqrt().asDiagonal() * v.transpose();
  return {centered * t.forward.transpose(), t};
}

}  // namespace exrot
