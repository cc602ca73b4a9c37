#pragma once

#include <Eigen/Core>

namespace kgbem {

using Point2 = Eigen::Vector2d;

/// One coordinate of a closed curve as a truncated trigonometric series,
///   f(t) = constant + sum_k cos_coeffs[k-1] cos(kt) + sin_coeffs[k-1] sin(kt).
struct TrigSeries {
  double constant = 0.0;
  Eigen::VectorXd cos_coeffs;
  Eigen::VectorXd sin_coeffs;
};

/// Point, first and second derivative, Jacobian and unit normal of a curve
/// at one parameter value.
struct CurveSample {
  Point2 x;    // x(t)
  Point2 dx;   // x'(t)
  Point2 ddx;  // x''(t)
  double jac;  // |x'(t)|
  Point2 nu;   // (x2'(t), -x1'(t)) / |x'(t)|
};

/// A closed 2pi-periodic C^2 boundary curve with analytic derivatives.
///
/// Construction verifies, on a dense parameter sample, that the tangent
/// never vanishes and that the parametrization runs counterclockwise
/// (positive signed area).  Invalid shapes throw std::domain_error.
class ParametricCurve {
 public:
  static ParametricCurve circle(double r);
  static ParametricCurve ellipse(double a, double b);
  static ParametricCurve trig(TrigSeries x1, TrigSeries x2);

  const TrigSeries& x1() const { return x1_; }
  const TrigSeries& x2() const { return x2_; }

 private:
  ParametricCurve(TrigSeries x1, TrigSeries x2);

  TrigSeries x1_;
  TrigSeries x2_;
};

/// Evaluate the curve and its first two derivatives at parameter t.
CurveSample sample(const ParametricCurve& curve, double t);

/// The 2M equidistant parameter nodes t_j = j pi / M, j = 0 .. 2M-1.
Eigen::VectorXd nodes(int M);

/// (x2' x1'' - x1' x2'') / (2 |x'|^3), the curvature-type diagonal term of the
/// smooth kernel parts.
double curvature_term(const CurveSample& s);

}  // namespace kgbem
