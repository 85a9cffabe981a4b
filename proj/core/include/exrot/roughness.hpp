#pragma once

#include <string>
#include <vector>

#include "exrot/stats.hpp"

namespace exrot {

/// Additive breakdown of the correction factor C, plus the multiplicative
/// Gaussian prefactor: value = gaussian_base * c_factor and
/// c_factor = leading + k3_term + k4_sq_term + k4_cross_term.
struct RoughnessTerms {
  double gaussian_base;   // multiplicative prefactor (roughness when C = 1)
  double k3_term;         // skewness contribution to C
  double k4_sq_term;      // quadratic kurtosis contribution to C
  double k4_cross_term;   // linear kurtosis contribution to C
};

struct RoughnessReport {
  double value;      // the roughness functional itself
  double c_factor;   // bracketed correction C
  RoughnessTerms terms;
  bool degenerate;   // C fell at or below the positivity guard (1e-6)
};

/// int x^n exp(-a x²) dx: (n-1)!!/(2a)^{n/2} sqrt(pi/a) for even n, 0 for odd.
double gaussian_moment_integral(int n, double a);

/// Cross integrals of squared Gaussians against standardized Hermite pairs,
/// in the normalization used by the closed-form roughness brackets:
/// T(m,n) = (2 - [m==n]) * int e^{-z²} H_m(z) H_n(z) dz / (2 sqrt(pi))
/// scaled by sigma^{-(m+n+1)}. Supported for m, n <= 7.
double hermite_cross_integral_1d(int m, int n, double sigma);

/// Scalar coefficient of the radial Gaussian moment rule:
/// int r^n exp(-vec(C⁻¹)' x⊗x) dx = coeff * (pi/|C⁻¹|)^{d/2} * c(2,d)^{⊗n/2},
/// coeff = d(d+2)...(d+n-2) / 2^{n/2} for even n (0 for odd). n <= 12, d <= 3.
double gaussian_vector_moment_integral(int n, int d);

/// Radial integral of a product of two probabilists' Hermite polynomials
/// against exp(-r²) over R^d, divided by pi^{d/2}. This single kernel
/// generates every closed-form bracket below; m, n <= 7, d <= 3.
double radial_hermite_product_integral(int m, int n, int d);

/// Closed-form approximations of R(f'') under the 4th-order Gram-Charlier
/// truncation. The univariate form is
///   R(f'') = 3/(8 sqrt(pi) sigma^5) * C,
///   C = 1 + (315/288) k3²/sigma⁶ + (3465/9216) k4²/sigma⁸ + (35/48) k4/sigma⁴
/// with exact rationals assembled from the T2/T3/T6 integrals.
RoughnessReport roughness_exrot_1d(const Cumulants1D& c);

/// Whitened d-dimensional version (covariance I assumed upstream):
///   C = 1 + A3(d) X3/3!² + A4(d) X4/4!² + 2 AX(d) XX/4!,
/// X3 = c3⊗²'δ₂⊗³, X4 = c4⊗²'δ₂⊗⁴, XX = c4'δ₂⊗², the A's being the
/// base-normalized radial brackets (d=2: 1.25, 0.390625, 0.25).
RoughnessReport roughness_exrot_nd(const CumulantVectors& cv);

/// R(f³) for the first-derivative estimator (Gaussian kernel):
///   value = C / (2 sqrt(pi) sigma),
///   C = 15/(8 sigma⁶) + (k3/3!)² 10395/(64 sigma¹²)
///       + (k4/4!)² 135135/(128 sigma¹⁴) + (k4/4!) 2·945/(32 sigma⁹).
RoughnessReport roughness_derivative_1d(const Cumulants1D& c);

/// Whitened d-dimensional derivative-estimator roughness,
/// value = 2^{-d} pi^{-d/2} C with C = 3 + 6.25 X3 + 2.734375 X4 + 2.25 XX
/// at d = 2.
RoughnessReport roughness_derivative_nd(const CumulantVectors& cv);

/// Normalized rule coefficients (the A's above). Exposed for the constants
/// table and the acceptance suite.
double exrot_nd_skew_coefficient(int d);        // X3 multiplier (1.25 at d=2)
double exrot_nd_kurt_sq_coefficient(int d);     // X4 multiplier (0.390625 at d=2)
double exrot_nd_kurt_cross_coefficient(int d);  // XX multiplier (0.25 at d=2)

/// Oracle-validated constants: every closed-form bracket together with its
/// residual against adaptive quadrature of the defining integral.
struct CoefficientEntry {
  int d;
  std::string name;
  double value;
  double oracle_residual;  // |closed form - quadrature| / max(1, |closed form|)
};
std::vector<CoefficientEntry> coefficient_table(int max_d = 3);
std::string coefficient_table_json(int max_d = 3);

}  // namespace exrot
