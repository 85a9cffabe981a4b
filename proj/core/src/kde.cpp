#include "exrot/kde.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "exrot/hermite.hpp"

namespace exrot {

namespace {
constexpr double kWindowSigmas = 10.0;  // exp(-50) ~ 2e-22: below double noise

void require_h(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("kde: bandwidth must be positive");
}
}  // namespace

DensityEstimate kde_derivative_1d(std::span<const double> samples, double h,
                                  int r, std::span<const double> grid) {
  require_h(h);
  if (r < 0 || r > 2)
    throw std::invalid_argument("kde_derivative_1d: r must be in {0, 1, 2}");
  if (samples.empty()) throw std::invalid_argument("kde: no samples");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  DensityEstimate est;
  est.grid.assign(grid.begin(), grid.end());
  est.values.resize(grid.size());
  est.h = h;
  est.n = samples.size();

  const double window = kWindowSigmas * h;
  const double inv_n = 1.0 / static_cast<double>(est.n);
  for (std::size_t g = 0; g < est.grid.size(); ++g) {
    const double x = est.grid[g];
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), x - window);
    const auto hi = std::upper_bound(lo, sorted.end(), x + window);
    double acc = 0.0;
    for (auto it = lo; it != hi; ++it)
      acc += gaussian_derivative_1d(r, x - *it, 0.0, h);
    est.values[g] = acc * inv_n;
  }
  return est;
}

DensityEstimate kde_1d(std::span<const double> samples, double h,
                       std::span<const double> grid) {
  return kde_derivative_1d(samples, h, 0, grid);
}

DensityEstimateNd kde_nd(const Matrix& samples, const Vector& h,
                         const Matrix& points) {
  const Eigen::Index n = samples.rows();
  const Eigen::Index d = samples.cols();
  if (n == 0) throw std::invalid_argument("kde_nd: no samples");
  if (h.size() != d || points.cols() != d)
    throw std::invalid_argument("kde_nd: dimension mismatch");
  for (Eigen::Index j = 0; j < d; ++j) require_h(h(j));

  DensityEstimateNd est;
  est.points = points;
  est.values.resize(points.rows());
  est.h = h;
  est.n = static_cast<std::size_t>(n);

  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index p = 0; p < points.rows(); ++p) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double prod = 1.0;
      for (Eigen::Index j = 0; j < d; ++j)
        prod *= gaussian_derivative_1d(0, points(p, j) - samples(i, j), 0.0, h(j));
      acc += prod;
    }
    est.values[static_cast<std::size_t>(p)] = acc * inv_n;
  }
  return est;
}

std::vector<double> make_grid(double lo, double hi, int m) {
  if (m < 2) throw std::invalid_argument("make_grid: need at least 2 points");
  if (!(hi > lo)) throw std::invalid_argument("make_grid: empty interval");
  std::vector<double> g(static_cast<std::size_t>(m));
  const double step = (hi - lo) / (m - 1);
  for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)] = lo + step * i;
  return g;
}

std::vector<double> default_grid(std::span<const double> samples, double h,
                                 int m) {
  require_h(h);
  if (samples.empty()) throw std::invalid_argument("default_grid: no samples");
  const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
  return make_grid(*mn - 5.0 * h, *mx + 5.0 * h, m);
}

void write_estimate_csv(const DensityEstimate& est, std::ostream& os) {
  os << "point,value\n";
  char buf[64];
  for (std::size_t i = 0; i < est.grid.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", est.grid[i], est.values[i]);
    os << buf;
  }
}

}  // namespace exrot
