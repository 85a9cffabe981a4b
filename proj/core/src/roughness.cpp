#include "exrot/roughness.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exrot/hermite.hpp"
#include "exrot/quadrature.hpp"
#include "exrot/tensor.hpp"

namespace exrot {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kDegenerateC = 1e-6;

// Coefficient array of the probabilists' Hermite polynomial (index = power).
std::vector<double> hermite_coeffs(int n) {
  std::vector<double> hm1 = {1.0};
  if (n == 0) return hm1;
  std::vector<double> h = {0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(h.size() + 1, 0.0);
    for (std::size_t i = 0; i < h.size(); ++i) next[i + 1] += h[i];
    for (std::size_t i = 0; i < hm1.size(); ++i) next[i] -= k * hm1[i];
    hm1 = std::move(h);
    h = std::move(next);
  }
  return h;
}

std::vector<double> poly_product(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// d (d+2) (d+4) ... (d+n-2), the ascending double-factorial product with n/2
// factors; equals the classical (d+n-2)!! for d <= 3.
double ascending_even_product(int d, int n) {
  double p = 1.0;
  for (int i = 0; i < n / 2; ++i) p *= d + 2 * i;
  return p;
}

double require_supported(int m, int n, int d) {
  if (m < 0 || n < 0 || m > 7 || n > 7)
    throw std::invalid_argument("hermite product integral: order must be <= 7");
  if (d < 1 || d > 3)
    throw std::invalid_argument("hermite product integral: d must be in 1..3");
  return 0.0;
}

// Quadrature oracle for radial_hermite_product_integral; used only by the
// constants table (tests run their own copies).
double radial_bracket_quadrature(int m, int n, int d) {
  const auto p = poly_product(hermite_coeffs(m), hermite_coeffs(n));
  auto poly_r = [p](double r2) {
    double v = 0.0, pw = 1.0;
    for (std::size_t k = 0; k < p.size(); k += 2) {
      v += p[k] * pw;
      pw *= r2;
    }
    return v;
  };
  if ((m + n) % 2 != 0) return 0.0;
  const double lim = 9.0;
  switch (d) {
    case 1:
      return integrate([&](double x) { return std::exp(-x * x) * poly_r(x * x); },
                       -lim, lim, 1e-12) /
             kSqrtPi;
    case 2:
      return integrate_2d(
                 [&](double x, double y) {
                   const double r2 = x * x + y * y;
                   return std::exp(-r2) * poly_r(r2);
                 },
                 -lim, lim, -lim, lim, 1e-10) /
             std::numbers::pi;
    default: {
      // surface-measure reduction: S_2 = 4 pi
      const double val = integrate(
          [&](double r) { return r * r * std::exp(-r * r) * poly_r(r * r); },
          0.0, lim, 1e-12);
      return 4.0 * std::numbers::pi * val / std::pow(std::numbers::pi, 1.5);
    }
  }
}

struct NdContractions {
  double x3;  // c3⊗²' δ₂⊗³
  double x4;  // c4⊗²' δ₂⊗⁴
  double xx;  // c4' δ₂⊗²
};

NdContractions contract(const CumulantVectors& cv) {
  const Vector d2 = delta2(cv.d);
  NdContractions out;
  out.x3 = Vector(kron(Matrix(cv.c3), Matrix(cv.c3))).dot(Vector(kron_power(Matrix(d2), 3)));
  out.x4 = Vector(kron(Matrix(cv.c4), Matrix(cv.c4))).dot(Vector(kron_power(Matrix(d2), 4)));
  out.xx = cv.c4.dot(Vector(kron_power(Matrix(d2), 2)));
  return out;
}

RoughnessReport assemble(double gaussian_base, double leading, double k3_term,
                         double k4_sq_term, double k4_cross_term) {
  RoughnessReport r;
  r.c_factor = leading + k3_term + k4_sq_term + k4_cross_term;
  r.terms = {gaussian_base, k3_term, k4_sq_term, k4_cross_term};
  r.degenerate = !(r.c_factor > kDegenerateC);
  r.value = gaussian_base * r.c_factor;
  return r;
}

}  // namespace

double gaussian_moment_integral(int n, double a) {
  if (n < 0) throw std::invalid_argument("gaussian_moment_integral: negative n");
  if (!(a > 0.0))
    throw std::invalid_argument("gaussian_moment_integral: a must be positive");
  if (n % 2 != 0) return 0.0;
  return ascending_even_product(1, n) / std::pow(2.0 * a, n / 2) *
         std::sqrt(std::numbers::pi / a);
}

double radial_hermite_product_integral(int m, int n, int d) {
  require_supported(m, n, d);
  if ((m + n) % 2 != 0) return 0.0;
  const auto p = poly_product(hermite_coeffs(m), hermite_coeffs(n));
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); k += 2) {
    const int nk = static_cast<int>(k);
    total += p[k] * ascending_even_product(d, nk) / std::pow(2.0, nk / 2);
  }
  return total;
}

double hermite_cross_integral_1d(int m, int n, double sigma) {
  require_supported(m, n, 1);
  if (!(sigma > 0.0))
    throw std::invalid_argument("hermite_cross_integral_1d: sigma must be positive");
  const double factor = (m == n) ? 1.0 : 2.0;
  return factor * radial_hermite_product_integral(m, n, 1) /
         (2.0 * kSqrtPi * std::pow(sigma, m + n + 1));
}

double gaussian_vector_moment_integral(int n, int d) {
  if (n < 0 || n > 12)
    throw std::invalid_argument("gaussian_vector_moment_integral: n must be in 0..12");
  if (d < 1 || d > 3)
    throw std::invalid_argument("gaussian_vector_moment_integral: d must be in 1..3");
  if (n % 2 != 0) return 0.0;
  return ascending_even_product(d, n) / std::pow(2.0, n / 2);
}

RoughnessReport roughness_exrot_1d(const Cumulants1D& c) {
  if (!(c.sigma > 0.0))
    throw std::invalid_argument("roughness_exrot_1d: sigma must be positive");
  const double s = c.sigma;
  const double base1 = radial_hermite_product_integral(2, 2, 1);  // 3/4
  const double gaussian_base =
      base1 / (2.0 * kSqrtPi * std::pow(s, 5));  // 3/(8 sqrt(pi) s^5)

  const double coef_k3 = radial_hermite_product_integral(5, 5, 1) / (36.0 * base1);
  const double coef_k4sq = radial_hermite_product_integral(6, 6, 1) / (576.0 * base1);
  const double coef_k4 = 2.0 * radial_hermite_product_integral(2, 6, 1) / (24.0 * base1);

  return assemble(gaussian_base, 1.0,
                  coef_k3 * c.k3 * c.k3 / std::pow(s, 6),
                  coef_k4sq * c.k4 * c.k4 / std::pow(s, 8),
                  coef_k4 * c.k4 / std::pow(s, 4));
}

double exrot_nd_skew_coefficient(int d) {
  return radial_hermite_product_integral(5, 5, d) /
         (36.0 * radial_hermite_product_integral(2, 2, d));
}

double exrot_nd_kurt_sq_coefficient(int d) {
  return radial_hermite_product_integral(6, 6, d) /
         (576.0 * radial_hermite_product_integral(2, 2, d));
}

double exrot_nd_kurt_cross_coefficient(int d) {
  return 2.0 * radial_hermite_product_integral(2, 6, d) /
         (24.0 * radial_hermite_product_integral(2, 2, d));
}

RoughnessReport roughness_exrot_nd(const CumulantVectors& cv) {
  const int d = cv.d;
  if (d < 1 || d > 3)
    throw std::invalid_argument("roughness_exrot_nd: d must be in 1..3");
  const NdContractions x = contract(cv);
  const double gaussian_base =
      (d + 2) / (std::pow(2.0, d + 2) * std::pow(std::numbers::pi, d / 2.0));
  return assemble(gaussian_base, 1.0, exrot_nd_skew_coefficient(d) * x.x3,
                  exrot_nd_kurt_sq_coefficient(d) * x.x4,
                  exrot_nd_kurt_cross_coefficient(d) * x.xx);
}

RoughnessReport roughness_derivative_1d(const Cumulants1D& c) {
  if (!(c.sigma > 0.0))
    throw std::invalid_argument("roughness_derivative_1d: sigma must be positive");
  const double s = c.sigma;
  const double gaussian_base = 1.0 / (2.0 * kSqrtPi * s);

  const double leading =
      radial_hermite_product_integral(3, 3, 1) / std::pow(s, 6);  // 15/8
  const double k3t = (c.k3 / 6.0) * (c.k3 / 6.0) *
                     radial_hermite_product_integral(6, 6, 1) / std::pow(s, 12);
  const double k4sq = (c.k4 / 24.0) * (c.k4 / 24.0) *
                      radial_hermite_product_integral(7, 7, 1) / std::pow(s, 14);
  const double k4x = (c.k4 / 24.0) * 2.0 *
                     radial_hermite_product_integral(3, 7, 1) / std::pow(s, 9);
  return assemble(gaussian_base, leading, k3t, k4sq, k4x);
}

RoughnessReport roughness_derivative_nd(const CumulantVectors& cv) {
  const int d = cv.d;
  if (d < 1 || d > 3)
    throw std::invalid_argument("roughness_derivative_nd: d must be in 1..3");
  const NdContractions x = contract(cv);
  const double gaussian_base =
      1.0 / (std::pow(2.0, d) * std::pow(std::numbers::pi, d / 2.0));

  const double leading = radial_hermite_product_integral(3, 3, d);
  const double k3t = radial_hermite_product_integral(6, 6, d) * x.x3 / 36.0;
  const double k4sq = radial_hermite_product_integral(7, 7, d) * x.x4 / 576.0;
  const double k4x = 2.0 * radial_hermite_product_integral(3, 7, d) * x.xx / 24.0;
  return assemble(gaussian_base, leading, k3t, k4sq, k4x);
}

std::vector<CoefficientEntry> coefficient_table(int max_d) {
  if (max_d < 1 || max_d > 3)
    throw std::invalid_argument("coefficient_table: max_d must be in 1..3");

  struct Named {
    const char* name;
    int m, n;
  };
  static constexpr Named kBrackets[] = {
      {"laplacian_base", 2, 2}, {"skew_sq", 5, 5},      {"kurt_sq", 6, 6},
      {"kurt_cross", 2, 6},     {"grad_base", 3, 3},    {"grad_kurt_sq", 7, 7},
      {"grad_kurt_cross", 3, 7}};

  std::vector<CoefficientEntry> out;
  for (int d = 1; d <= max_d; ++d) {
    for (const auto& b : kBrackets) {
      const double closed = radial_hermite_product_integral(b.m, b.n, d);
      const double quad = radial_bracket_quadrature(b.m, b.n, d);
      out.push_back({d, b.name, closed,
                     std::abs(closed - quad) / std::max(1.0, std::abs(closed))});
    }
    // Normalized rule coefficients; residuals from the same quadrature ratios.
    const double base_q = radial_bracket_quadrature(2, 2, d);
    auto push_ratio = [&](const char* name, double closed, int m, int n,
                          double scale, double factor) {
      const double quad = factor * radial_bracket_quadrature(m, n, d) / (scale * base_q);
      out.push_back({d, name, closed,
                     std::abs(closed - quad) / std::max(1.0, std::abs(closed))});
    };
    push_ratio("exrot_skew_coefficient", exrot_nd_skew_coefficient(d), 5, 5, 36.0, 1.0);
    push_ratio("exrot_kurt_sq_coefficient", exrot_nd_kurt_sq_coefficient(d), 6, 6,
               576.0, 1.0);
    push_ratio("exrot_kurt_cross_coefficient", exrot_nd_kurt_cross_coefficient(d),
               2, 6, 24.0, 2.0);
  }
  return out;
}

std::string coefficient_table_json(int max_d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : coefficient_table(max_d))
    arr.push_back({{"d", e.d},
                   {"coefficient_name", e.name},
                   {"value", e.value},
                   {"oracle_residual", e.oracle_residual}});
  return arr.dump(2);
}

}  // namespace exrot
