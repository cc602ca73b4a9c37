#include "kgbem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "kgbem/geometry.hpp"

namespace kgbem {

QuadratureRule::QuadratureRule(int M_) : M(M_), nodes(kgbem::nodes(M_)) {}

double trapezoid(const QuadratureRule& rule, const Eigen::VectorXd& samples) {
    if (samples.size() != 2 * rule.M) {
        throw std::domain_error("trapezoid: expected 2M sample values");
    }
    return samples.sum() / (2.0 * rule.M);
}

Eigen::VectorXd upsample_periodic(const QuadratureRule& rule,
                                  const Eigen::VectorXd& samples, int M_out) {
    const int M = rule.M;
    if (samples.size() != 2 * M) {
        throw std::domain_error("upsample_periodic: expected 2M sample values");
    }
    if (M_out < 1) throw std::domain_error("upsample_periodic: M_out must be >= 1");

    // Real Fourier coefficients of the degree-M interpolant.
    Eigen::VectorXd a = Eigen::VectorXd::Zero(M + 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(M + 1);
    for (int m = 0; m <= M; ++m) {
        double ca = 0.0, cb = 0.0;
        for (int j = 0; j < 2 * M; ++j) {
            ca += samples[j] * std::cos(m * rule.nodes[j]);
            cb += samples[j] * std::sin(m * rule.nodes[j]);
        }
        a[m] = ca / M;
        b[m] = cb / M;
    }

    const Eigen::VectorXd t_out = nodes(M_out);
    Eigen::VectorXd out(2 * M_out);
    for (int k = 0; k < 2 * M_out; ++k) {
        double v = 0.5 * a[0] + 0.5 * (a[M] * std::cos(M * t_out[k]) +
                                       b[M] * std::sin(M * t_out[k]));
        for (int m = 1; m < M; ++m) {
            v += a[m] * std::cos(m * t_out[k]) + b[m] * std::sin(m * t_out[k]);
        }
        out[k] = v;
    }
    return out;
}

Eigen::VectorXd log_weights(const QuadratureRule& rule, double t) {
    // Trigonometric-interpolation weights for the periodic logarithm,
    //   R_j(t) = -(1/M) sum_{m=1}^{M-1} cos(m(t-t_j))/m
    //            - cos(M(t-t_j))/(2M^2) - 1/(2M).
    // The trailing constant accounts for the mean value -1 of
    // ln((4/e) sin^2(.)); without it only the zero-mean ln(4 sin^2(.)) part
    // is integrated and constants pick up an O(1/M) error.
    const int M = rule.M;
    Eigen::VectorXd w(2 * M);
    for (int j = 0; j < 2 * M; ++j) {
        const double d = t - rule.nodes[j];
        double s = 0.0;
        for (int m = 1; m < M; ++m) s += std::cos(m * d) / m;
        w[j] = -s / M - std::cos(M * d) / (2.0 * M * M) - 1.0 / (2.0 * M);
    }
    return w;
}

}  // namespace kgbem
