#pragma once

#include <array>
#include <vector>

#include "exrot/tensor.hpp"

namespace exrot {

struct Cumulants1D;   // stats.hpp
struct CumulantVectors;

/// Probabilists' Hermite polynomial H_n(z) by the three-term recurrence
/// H_0 = 1, H_1 = z, H_{n+1} = z H_n - n H_{n-1}.
double hermite_1d(int n, double z);

/// n-th derivative of the Gaussian density G(x; mu, sigma):
/// G^{(n)}(x) = sigma^{-n} (-1)^n H_n((x-mu)/sigma) G(x; mu, sigma).
double gaussian_derivative_1d(int n, double x, double mu, double sigma);

/// Zero-mean multivariate normal density with covariance cov (SPD required).
double gaussian_pdf_nd(const Vector& x, const Matrix& cov);

/// Kronecker-stacked multivariate Hermite polynomial of order n (d^n entries).
/// Entry (i_1..i_n) satisfies the recursion
///   H_n[(i_1..i_n)] = H_{n-1}[(i_1..i_{n-1})] x_{i_n}
///                     - sum_j cov(i_n, i_j) H_{n-2}[(.. omit i_j ..)],
/// the index-permutation form of the commutation-matrix recursion; it agrees
/// with the Rodrigues form G^{-1} (-1)^n (cov D)^{⊗n} G.
struct HermiteVector {
  int order;
  int d;
  Vector values;  // d^order entries, Kronecker (first factor outermost) order
};
HermiteVector hermite_vector(int n, const Vector& x, const Matrix& cov);

/// Coefficients alpha(0..6) of the generalized Gram-Charlier expansion in
/// terms of the cumulant differences delta(1..6); alpha(0) = 1.
struct AlphaCoefficients {
  int d;
  std::array<Vector, 7> alpha;  // alpha[k] has d^k entries (alpha[0] = [1])
};
AlphaCoefficients alpha_coefficients(const std::vector<Vector>& deltas);

/// Truncated Gram-Charlier A density around G(x; mu, sigma). cumulants_3_up
/// holds the central cumulants k_3.. up to max_order (max_order <= 6). The
/// series is an approximation, not a pdf: values may be negative.
double gca_density_1d(double x, double mu, double sigma,
                      const std::vector<double>& cumulants_3_up, int max_order);

/// Convenience overload truncating at order 4, using estimated cumulants.
double gca_density(double x, const Cumulants1D& c, int max_order = 4);

/// Multivariate GCA around the standard normal (whitened convention),
/// truncated at max_order <= 4.
double gca_density(const Vector& x, const CumulantVectors& cv, int max_order = 4);

}  // namespace exrot
