#pragma once

#include <span>

#include "exrot/tensor.hpp"

namespace exrot {

/// Plug-in (biased) moment estimates for one variable: sigma is the plain
/// sample standard deviation sqrt(m2), k3 the third central moment and
/// k4 = m4 - 3 m2² the fourth cumulant. k-statistics can be swapped in later
/// if unbiasedness at small n ever matters; the benchmark sample sizes make
/// the difference negligible.
struct Cumulants1D {
  std::size_t n;
  double mean;
  double sigma;
  double k3;
  double k4;
};

Cumulants1D cumulants_1d(std::span<const double> data);

/// Kronecker-stacked moment vector m(k,d): entry (i_1..i_k) is the sample
/// mean of prod_j x_{i_j}. Rows of data are observations.
Vector moment_vector(const Matrix& data, int k, bool centered);

/// Moment/cumulant vectors up to order 4 for whitened data (covariance I):
/// c3 = m(3,d); c4 = m(4,d) minus the three pair-pairings of vec(I) ⊗ vec(I);
/// both symmetrized over all factor permutations.
struct CumulantVectors {
  int d;
  Vector m2;  // d² entries
  Vector c3;  // d³ entries
  Vector c4;  // d⁴ entries
};

CumulantVectors cumulant_vectors(const Matrix& whitened_data);

/// Construct directly from already-known cumulant vectors (d inferred).
CumulantVectors make_cumulant_vectors(int d, Vector c3, Vector c4);

/// Affine whitening transform: y = forward * (x - center) has zero mean and
/// identity covariance. forward is the symmetric (ZCA) inverse square root.
struct WhitenTransform {
  Vector center;
  Matrix forward;
  Matrix inverse;
};

std::pair<Matrix, WhitenTransform> whiten(const Matrix& data);

/// Symmetrize a Kronecker-stacked order-k vector over all factor permutations.
Vector symmetrize(const Vector& v, int d, int k);

}  // namespace exrot
