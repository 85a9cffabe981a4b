#pragma once

#include <string>

#include "exrot/roughness.hpp"
#include "exrot/stats.hpp"

namespace exrot {

/// Kernel constants entering the AMISE formulas. Only the Gaussian kernel is
/// supported; the selector constants below assume it.
struct KernelSpec {
  std::string name = "gaussian";
  double mu2 = 1.0;  // second moment of the kernel

  /// R(K) of the d-dimensional product kernel: 2^{-d} pi^{-d/2}.
  double roughness(int d) const;
  /// R of a first partial derivative of the product kernel:
  /// 2^{-(d+1)} pi^{-d/2} (univariate: 1/(4 sqrt(pi))).
  double deriv_roughness(int d) const;

  static const KernelSpec& gaussian();
};

enum class Rule { rot, exrot, exrot_deriv };
const char* rule_name(Rule r);
Rule rule_from_name(const std::string& s);

struct BandwidthResult {
  Rule rule;
  Vector h;             // one entry, or d entries for the per-axis rule
  double c_factor;      // correction factor used (1 for plain ROT)
  bool fallback_used;   // C hit the positivity guard and was reset to Gaussian
  int d;
  std::size_t n;

  double h_scalar() const { return h(0); }
};

/// AMISE-optimal bandwidth h = (R(K) / (mu2² R n))^{1/(d+4)}.
double h_amise(const KernelSpec& kernel, double roughness, std::size_t n, int d);

/// Density-derivative analogue (order r, kernel order v):
/// h = ((v!)²/(2v) R(K^{(r)}) / (mu2² R n))^{1/(2v+2r+d)}.
double h_amise_derivative(const KernelSpec& kernel, double roughness,
                          std::size_t n, int d, int r = 1, int v = 2);

/// h = (4/3)^{1/5} sigma n^{-1/5} (the 1.0592 rule).
BandwidthResult h_rot_1d(double sigma, std::size_t n);

/// Extended rule: h = (4/3)^{1/5} sigma (C n)^{-1/5} with C from
/// roughness_exrot_1d; falls back to C = 1 when the truncation turns the
/// roughness nonpositive.
BandwidthResult h_exrot_1d(const Cumulants1D& c, std::size_t n);

/// h = (4/((2+d) n))^{1/(4+d)} sigma, equal spread in all directions.
BandwidthResult h_rot_nd(double sigma, std::size_t n, int d);

/// Whitened-space extended rule, H = h I. Zero cumulants reproduce
/// h_rot_nd(1, n, d) exactly; callers map h back through their
/// WhitenTransform.
BandwidthResult h_exrot_nd(const CumulantVectors& cv, std::size_t n);

/// Diagonal-H one-shot rule: h_i = (R(K)/(mu2² R_i n))^{1/(d+4)}.
BandwidthResult h_exrot_per_axis(const CumulantVectors& cv,
                                 const Vector& per_axis_roughness,
                                 std::size_t n);

/// First-derivative estimation rules (r = 1, v = 2, exponent 1/(d+6+...)):
/// univariate h = sigma (2 C n)^{-1/7}, d-dimensional h = (2 C n)^{-1/(d+6)}.
BandwidthResult h_exrot_deriv_1d(const Cumulants1D& c, std::size_t n);
BandwidthResult h_exrot_deriv_nd(const CumulantVectors& cv, std::size_t n);

}  // namespace exrot
