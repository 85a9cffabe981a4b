#include "exrot/bandwidth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exrot {

namespace {

void require_n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("bandwidth: need n >= 2 samples");
}

BandwidthResult scalar_result(Rule rule, double h, double c, bool fallback,
                              int d, std::size_t n) {
  BandwidthResult r;
  r.rule = rule;
  r.h = Vector::Constant(1, h);
  r.c_factor = c;
  r.fallback_used = fallback;
  r.d = d;
  r.n = n;
  return r;
}

struct GuardedRoughness {
  double value;
  double c_factor;
  bool fallback;
};

// Applies the positivity fallback: a degenerate report is replaced by its own
// Gaussian case (all cumulant terms dropped).
GuardedRoughness guarded(const RoughnessReport& rep) {
  if (!rep.degenerate) return {rep.value, rep.c_factor, false};
  const double gaussian_c = rep.c_factor - rep.terms.k3_term -
                            rep.terms.k4_sq_term - rep.terms.k4_cross_term;
  return {rep.terms.gaussian_base * gaussian_c, gaussian_c, true};
}

}  // namespace

double KernelSpec::roughness(int d) const {
  return std::pow(2.0, -d) * std::pow(std::numbers::pi, -d / 2.0);
}

double KernelSpec::deriv_roughness(int d) const {
  return std::pow(2.0, -(d + 1)) * std::pow(std::numbers::pi, -d / 2.0);
}

const KernelSpec& KernelSpec::gaussian() {
  static const KernelSpec k;
  return k;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::rot: return "rot";
    case Rule::exrot: return "exrot";
    case Rule::exrot_deriv: return "exrot-deriv";
  }
  return "?";
}

Rule rule_from_name(const std::string& s) {
  if (s == "rot") return Rule::rot;
  if (s == "exrot") return Rule::exrot;
  if (s == "exrot-deriv" || s == "exrot_deriv") return Rule::exrot_deriv;
  throw std::invalid_argument("unknown rule: " + s);
}

double h_amise(const KernelSpec& kernel, double roughness, std::size_t n, int d) {
  require_n(n);
  if (!(roughness > 0.0))
    throw std::invalid_argument("h_amise: roughness must be positive");
  return std::pow(kernel.roughness(d) /
                      (kernel.mu2 * kernel.mu2 * roughness * static_cast<double>(n)),
                  1.0 / (d + 4));
}

double h_amise_derivative(const KernelSpec& kernel, double roughness,
                          std::size_t n, int d, int r, int v) {
  require_n(n);
  if (!(roughness > 0.0))
    throw std::invalid_argument("h_amise_derivative: roughness must be positive");
  double vfact = 1.0;
  for (int i = 2; i <= v; ++i) vfact *= i;
  const double prefactor = vfact * vfact / (2.0 * v);
  return std::pow(prefactor * kernel.deriv_roughness(d) /
                      (kernel.mu2 * kernel.mu2 * roughness * static_cast<double>(n)),
                  1.0 / (2 * v + 2 * r + d));
}

BandwidthResult h_rot_1d(double sigma, std::size_t n) {
  if (!(sigma > 0.0)) throw std::invalid_argument("h_rot_1d: sigma must be positive");
  Cumulants1D gaussian{n, 0.0, sigma, 0.0, 0.0};
  const double rough = roughness_exrot_1d(gaussian).value;
  const double h = h_amise(KernelSpec::gaussian(), rough, n, 1);
  return scalar_result(Rule::rot, h, 1.0, false, 1, n);
}

BandwidthResult h_exrot_1d(const Cumulants1D& c, std::size_t n) {
  const GuardedRoughness g = guarded(roughness_exrot_1d(c));
  const double h = h_amise(KernelSpec::gaussian(), g.value, n, 1);
  return scalar_result(Rule::exrot, h, g.c_factor, g.fallback, 1, n);
}

BandwidthResult h_rot_nd(double sigma, std::size_t n, int d) {
  if (!(sigma > 0.0)) throw std::invalid_argument("h_rot_nd: sigma must be positive");
  if (d < 1) throw std::invalid_argument("h_rot_nd: d must be >= 1");
  CumulantVectors cv = make_cumulant_vectors(
      d, Vector::Zero(static_cast<Eigen::Index>(std::pow(d, 3))),
      Vector::Zero(static_cast<Eigen::Index>(std::pow(d, 4))));
  // whitened-space base, rescaled so the selected h is linear in sigma
  const double rough =
      roughness_exrot_nd(cv).value / std::pow(sigma, d + 4);
  const double h = h_amise(KernelSpec::gaussian(), rough, n, d);
  return scalar_result(Rule::rot, h, 1.0, false, d, n);
}

BandwidthResult h_exrot_nd(const CumulantVectors& cv, std::size_t n) {
  const GuardedRoughness g = guarded(roughness_exrot_nd(cv));
  const double h = h_amise(KernelSpec::gaussian(), g.value, n, cv.d);
  return scalar_result(Rule::exrot, h, g.c_factor, g.fallback, cv.d, n);
}

BandwidthResult h_exrot_per_axis(const CumulantVectors& cv,
                                 const Vector& per_axis_roughness,
                                 std::size_t n) {
  require_n(n);
  if (per_axis_roughness.size() != cv.d)
    throw std::invalid_argument("h_exrot_per_axis: need one roughness per axis");
  BandwidthResult r;
  r.rule = Rule::exrot;
  r.h = Vector(cv.d);
  for (int i = 0; i < cv.d; ++i)
    r.h(i) = h_amise(KernelSpec::gaussian(), per_axis_roughness(i), n, cv.d);
  r.c_factor = 1.0;
  r.fallback_used = false;
  r.d = cv.d;
  r.n = n;
  return r;
}

BandwidthResult h_exrot_deriv_1d(const Cumulants1D& c, std::size_t n) {
  const GuardedRoughness g = guarded(roughness_derivative_1d(c));
  const double h = h_amise_derivative(KernelSpec::gaussian(), g.value, n, 1);
  return scalar_result(Rule::exrot_deriv, h, g.c_factor, g.fallback, 1, n);
}

BandwidthResult h_exrot_deriv_nd(const CumulantVectors& cv, std::size_t n) {
  const GuardedRoughness g = guarded(roughness_derivative_nd(cv));
  const double h = h_amise_derivative(KernelSpec::gaussian(), g.value, n, cv.d);
  return scalar_result(Rule::exrot_deriv, h, g.c_factor, g.fallback, cv.d, n);
}

}  // namespace exrot
