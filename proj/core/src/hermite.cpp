#include "exrot/hermite.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exrot/stats.hpp"

namespace exrot {

double hermite_1d(int n, double z) {
  if (n < 0) throw std::invalid_argument("hermite_1d: negative order");
  if (n == 0) return 1.0;
  double hm1 = 1.0, h = z;
  for (int k = 1; k < n; ++k) {
    const double next = z * h - k * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

double gaussian_derivative_1d(int n, double x, double mu, double sigma) {
  if (n < 0) throw std::invalid_argument("gaussian_derivative_1d: negative order");
  if (!(sigma > 0.0))
    throw std::invalid_argument("gaussian_derivative_1d: sigma must be positive");
  const double z = (x - mu) / sigma;
  const double g =
      std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * hermite_1d(n, z) * g / std::pow(sigma, n);
}

double gaussian_pdf_nd(const Vector& x, const Matrix& cov) {
  const Eigen::Index d = x.size();
  if (cov.rows() != d || cov.cols() != d)
    throw std::invalid_argument("gaussian_pdf_nd: dimension mismatch");
  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("gaussian_pdf_nd: covariance is not SPD");
  const Matrix l = llt.matrixL();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) logdet += std::log(l(i, i));
  const Vector w = llt.solve(x);
  const double quad = x.dot(w);
  return std::exp(-0.5 * quad - logdet -
                  0.5 * d * std::log(2.0 * std::numbers::pi));
}

HermiteVector hermite_vector(int n, const Vector& x, const Matrix& cov) {
  const int d = static_cast<int>(x.size());
  if (n < 0 || n > 8)
    throw std::invalid_argument("hermite_vector: order must be in 0..8");
  if (cov.rows() != d || cov.cols() != d)
    throw std::invalid_argument("hermite_vector: dimension mismatch");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
      Eigen::LLT<Matrix>(cov).info() != Eigen::Success)
    throw std::invalid_argument("hermite_vector: covariance is not SPD");

  // H_0 = 1, H_1 = x; each step appends one factor and subtracts the
  // covariance pairings of the new index with every previous one.
  std::vector<Vector> h(n + 1);
  h[0] = Vector::Ones(1);
  if (n >= 1) h[1] = x;

  for (int m = 2; m <= n; ++m) {
    const Eigen::Index len_prev = h[m - 1].size();
    Vector out(len_prev * d);
    std::vector<Eigen::Index> idx(m, 0);  // multi-index (i_1..i_m)
    std::vector<Eigen::Index> stride_m2(std::max(m - 2, 0), 1);
    for (int j = m - 4; j >= 0; --j) stride_m2[j] = stride_m2[j + 1] * d;

    for (Eigen::Index lin = 0; lin < out.size(); ++lin) {
      const Eigen::Index lead = lin / d;   // (i_1..i_{m-1})
      const Eigen::Index last = lin % d;   // i_m
      double val = h[m - 1](lead) * x(last);
      // decompose lead into (i_1..i_{m-1})
      Eigen::Index rest = lead;
      for (int j = m - 2; j >= 0; --j) {
        idx[j] = rest % d;
        rest /= d;
      }
      for (int j = 0; j < m - 1; ++j) {
        // index into H_{m-2} with slot j removed
        Eigen::Index sub = 0;
        int pos = 0;
        for (int t = 0; t < m - 1; ++t) {
          if (t == j) continue;
          sub += idx[t] * stride_m2[pos++];
        }
        val -= cov(last, idx[j]) * h[m - 2](sub);
      }
      out(lin) = val;
    }
    h[m] = std::move(out);
  }

  return HermiteVector{n, d, h[n]};
}

AlphaCoefficients alpha_coefficients(const std::vector<Vector>& deltas) {
  if (deltas.size() != 6)
    throw std::invalid_argument("alpha_coefficients: need delta(1..6)");
  const Eigen::Index d = deltas[0].size();
  for (int k = 0; k < 6; ++k) {
    Eigen::Index expect = 1;
    for (int i = 0; i <= k; ++i) expect *= d;
    if (deltas[static_cast<std::size_t>(k)].size() != expect)
      throw std::invalid_argument("alpha_coefficients: delta length mismatch");
  }

  const auto& d1 = deltas[0];
  const auto& d2 = deltas[1];
  const auto& d3 = deltas[2];
  const auto& d4 = deltas[3];
  const auto& d5 = deltas[4];
  const auto& d6 = deltas[5];
  auto kp = [](const Vector& v, int n) {
    return Vector(kron_power(Matrix(v), n));
  };
  auto kv = [](const Vector& a, const Vector& b) {
    return Vector(kron(Matrix(a), Matrix(b)));
  };

  AlphaCoefficients out;
  out.d = static_cast<int>(d);
  out.alpha[0] = Vector::Ones(1);
  out.alpha[1] = d1;
  out.alpha[2] = d2 + kp(d1, 2);
  out.alpha[3] = d3 + 3.0 * kv(d2, d1) + kp(d1, 3);
  out.alpha[4] =
      d4 + 4.0 * kv(d3, d1) + 3.0 * kp(d2, 2) + 6.0 * kv(d2, kp(d1, 2)) + kp(d1, 4);
  out.alpha[5] = d5 + 5.0 * kv(d4, d1) + 10.0 * kv(d3, d2) +
                 10.0 * kv(d3, kp(d1, 2)) + 15.0 * kv(kp(d2, 2), d1) +
                 10.0 * kv(d2, kp(d1, 3)) + kp(d1, 5);
  out.alpha[6] = d6 + 6.0 * kv(d5, d1) + 15.0 * kv(d4, d2) +
                 15.0 * kv(d4, kp(d1, 2)) + 10.0 * kp(d3, 2) +
                 60.0 * kv(d3, kv(d2, d1)) + 20.0 * kv(d3, kp(d1, 3)) +
                 15.0 * kp(d2, 3) + 45.0 * kv(kp(d2, 2), kp(d1, 2)) +
                 15.0 * kv(d2, kp(d1, 4)) + kp(d1, 6);
  return out;
}

double gca_density_1d(double x, double mu, double sigma,
                      const std::vector<double>& cumulants_3_up, int max_order) {
  if (max_order < 2 || max_order > 6)
    throw std::invalid_argument("gca_density_1d: order must be in 2..6");
  if (cumulants_3_up.size() + 2 < static_cast<std::size_t>(max_order))
    throw std::invalid_argument("gca_density_1d: missing cumulants");
  const double z = (x - mu) / sigma;
  const double g = gaussian_derivative_1d(0, x, mu, sigma);

  auto k = [&](int r) { return cumulants_3_up[static_cast<std::size_t>(r - 3)]; };
  static constexpr double kFact[] = {1, 1, 2, 6, 24, 120, 720};

  // f = sum_r alpha_r (-1)^r G^{(r)} / r!  with G^{(r)} = (-1)^r sigma^{-r} H_r G,
  // so each term is alpha_r H_r(z) G / (r! sigma^r).
  double series = 1.0;
  for (int r = 3; r <= max_order; ++r) {
    double alpha = k(r);
    if (r == 6) alpha += 10.0 * k(3) * k(3);
    series += alpha * hermite_1d(r, z) / (kFact[r] * std::pow(sigma, r));
  }
  return g * series;
}

double gca_density(double x, const Cumulants1D& c, int max_order) {
  if (max_order < 2 || max_order > 4)
    throw std::invalid_argument("gca_density: Cumulants1D supports order <= 4");
  std::vector<double> ks = {c.k3, c.k4};
  return gca_density_1d(x, c.mean, c.sigma, ks, max_order);
}

double gca_density(const Vector& x, const CumulantVectors& cv, int max_order) {
  if (max_order < 2 || max_order > 4)
    throw std::invalid_argument("gca_density: CumulantVectors supports order <= 4");
  const Matrix eye = Matrix::Identity(cv.d, cv.d);
  const double g = gaussian_pdf_nd(x, eye);
  double series = 1.0;
  if (max_order >= 3) {
    const HermiteVector h3 = hermite_vector(3, x, eye);
    series += cv.c3.dot(h3.values) / 6.0;
  }
  if (max_order >= 4) {
    const HermiteVector h4 = hermite_vector(4, x, eye);
    series += cv.c4.dot(h4.values) / 24.0;
  }
  return g * series;
}

}  // namespace exrot
