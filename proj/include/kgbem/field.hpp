#pragma once

#include "kgbem/geometry.hpp"
#include "kgbem/solver.hpp"

namespace kgbem {

/// Free-space fundamental solution Phi(x,y) = (1/2pi) K0(kappa |x-y|), x != y.
double fundamental_solution(const Point2& x, const Point2& y, double kappa);

/// True when x lies strictly inside the annular domain, tested by ray casting
/// against 4M-segment polygonal approximations of both curves with a 1e-9
/// clearance margin.
bool point_in_domain(const ProblemSpec& problem, int M, const Point2& x);

/// Approximate solution u(x) at an interior point, via the trapezoid rule on
/// the single-layer representation.  The node densities are upsampled by
/// their trigonometric interpolant first, so the quadrature keeps its rate
/// for probes a fraction of a curve radius away from a boundary.  Points
/// outside the domain or within 1e-9 of a curve throw std::domain_error.
double eval_interior(const DensitySolution& sol, const Point2& x);

/// Approximate solution on curve i at any parameter t: the own-curve sum uses
/// the logarithmic quadrature of the split boundary kernel, the other-curve
/// sum the plain trapezoid rule.
double eval_on_boundary(const DensitySolution& sol, int i, double t);

/// Analytic Robin datum f_i(x_i(t)) at arbitrary t for fundamental-type data;
/// other data kinds throw std::domain_error.
double robin_data_probe(const ProblemSpec& problem, int i, double t);

}  // namespace kgbem
