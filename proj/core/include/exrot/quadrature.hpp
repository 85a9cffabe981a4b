#pragma once

#include <functional>
#include <stdexcept>

namespace exrot {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss–Kronrod (15-point) integration of f over [a, b].
/// Throws QuadratureError when the error estimate stays above
/// max(abs_tol, |I| * 1e-10) after the refinement budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

/// Iterated 2-D integral over [ax, bx] x [ay, by] (inner integral in y).
double integrate_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, double abs_tol = 1e-9);

}  // namespace exrot
