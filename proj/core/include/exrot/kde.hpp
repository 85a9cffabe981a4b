#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "exrot/tensor.hpp"

namespace exrot {

/// A kernel (derivative) estimate evaluated on a strictly increasing grid.
struct DensityEstimate {
  std::vector<double> grid;
  std::vector<double> values;
  double h = 0.0;
  std::size_t n = 0;
};

/// Gaussian-kernel density estimate by direct summation,
/// f̂(x) = (1/(N h)) sum K((x - x_i)/h). Samples beyond 10h from a grid point
/// contribute below double precision and are skipped.
DensityEstimate kde_1d(std::span<const double> samples, double h,
                       std::span<const double> grid);

/// r-th derivative estimate, (1/N) sum K_h^{(r)}(x - x_i) with the Gaussian
/// derivative kernel (r in {0, 1, 2}; r = 0 is kde_1d by the same code path).
DensityEstimate kde_derivative_1d(std::span<const double> samples, double h,
                                  int r, std::span<const double> grid);

/// Product-kernel estimate with per-axis bandwidths. Rows of samples and
/// points are observations / evaluation points.
struct DensityEstimateNd {
  Matrix points;
  std::vector<double> values;
  Vector h;
  std::size_t n = 0;
};
DensityEstimateNd kde_nd(const Matrix& samples, const Vector& h,
                         const Matrix& points);

/// Default 1-D evaluation grid: m equispaced points on [min - 5h, max + 5h].
std::vector<double> default_grid(std::span<const double> samples, double h,
                                 int m = 4096);
/// Equispaced grid on an explicit interval.
std::vector<double> make_grid(double lo, double hi, int m);

/// Two-column (point, value) CSV.
void write_estimate_csv(const DensityEstimate& est, std::ostream& os);

}  // namespace exrot
