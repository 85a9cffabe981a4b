#include "exrot/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace exrot {

namespace {
using GK15 = boost::math::quadrature::gauss_kronrod<double, 15>;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  double err = 0.0;
  const double value = GK15::integrate(f, a, b, 15, 1e-12, &err);
  if (!(err <= std::max(abs_tol, std::abs(value) * 1e-10)))
    throw QuadratureError("adaptive Gauss-Kronrod did not converge");
  return value;
}

double integrate_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, double abs_tol) {
  auto outer = [&](double x) {
    double err = 0.0;
    return GK15::integrate([&](double y) { return f(x, y); }, ay, by, 12, 1e-12,
                           &err);
  };
  double err = 0.0;
  const double value = GK15::integrate(outer, ax, bx, 12, 1e-12, &err);
  if (!(err <= std::max(abs_tol, std::abs(value) * 1e-9)))
    throw QuadratureError("2-D adaptive quadrature did not converge");
  return value;
}

}  // namespace exrot
