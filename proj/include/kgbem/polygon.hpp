#pragma once

#include <Eigen/Core>

#include "kgbem/geometry.hpp"

namespace kgbem {

/// Closed polygonal approximation of a curve with n vertices at equidistant
/// parameter values (columns of the result).
Eigen::Matrix2Xd curve_polygon(const ParametricCurve& curve, int n);

/// Winding number of a closed polygon around a point.
int winding_number(const Eigen::Matrix2Xd& poly, const Point2& p);

/// Ray-casting even-odd test against a closed polygon.
bool point_in_polygon(const Eigen::Matrix2Xd& poly, const Point2& p);

/// Distance from a point to the closest polygon edge.
double distance_to_polygon(const Eigen::Matrix2Xd& poly, const Point2& p);

}  // namespace kgbem
