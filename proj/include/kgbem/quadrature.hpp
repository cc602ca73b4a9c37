#pragma once

#include <Eigen/Core>

namespace kgbem {

/// Composite rule data on the 2M equidistant nodes t_j = j pi / M.
struct QuadratureRule {
  explicit QuadratureRule(int M);

  int M;
  Eigen::VectorXd nodes;  // 2M strictly increasing values, spacing pi/M
};

/// Trapezoid rule for the mean value: (1/2M) sum_j samples[j], which
/// approximates (1/2pi) int_0^{2pi} f(tau) dtau with spectral accuracy for
/// smooth 2pi-periodic f.
double trapezoid(const QuadratureRule& rule, const Eigen::VectorXd& samples);

/// Weights R_j(t) with
///   sum_j R_j(t) f(t_j) ~ (1/2pi) int_0^{2pi} f(tau) ln((4/e) sin^2((t-tau)/2)) dtau,
/// exact for trigonometric polynomials of degree < M.  t may be any real,
/// on-node or not.
Eigen::VectorXd log_weights(const QuadratureRule& rule, double t);

/// Values of the trigonometric interpolant of 2M periodic samples on the
/// 2*M_out nodes of a finer rule.  Exact on the original nodes when
/// M_out is a multiple of M.
Eigen::VectorXd upsample_periodic(const QuadratureRule& rule,
                                  const Eigen::VectorXd& samples, int M_out);

}  // namespace kgbem
