#include "kgbem/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kgbem/kernels.hpp"
#include "kgbem/polygon.hpp"
#include "kgbem/quadrature.hpp"
#include "kgbem/special_functions.hpp"

namespace kgbem {

namespace {

constexpr double kBoundaryClearance = 1e-9;

void require_curve_index(const char* fn, int i) {
    if (i != 1 && i != 2) {
        throw std::invalid_argument(std::string(fn) + ": curve index must be 1 or 2");
    }
}

}  // namespace

double fundamental_solution(const Point2& x, const Point2& y, double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw std::domain_error("fundamental_solution: kappa must be positive");
    }
    const double r = (x - y).norm();
    if (r == 0.0) {
        throw std::domain_error("fundamental_solution: coincident points");
    }
    return k0(kappa * r) / (2.0 * std::numbers::pi);
}

bool point_in_domain(const ProblemSpec& problem, int M, const Point2& x) {
    const Eigen::Matrix2Xd p1 = curve_polygon(problem.gamma1, 4 * M);
    const Eigen::Matrix2Xd p2 = curve_polygon(problem.gamma2, 4 * M);
    return point_in_polygon(p1, x) && !point_in_polygon(p2, x) &&
           distance_to_polygon(p1, x) > kBoundaryClearance &&
           distance_to_polygon(p2, x) > kBoundaryClearance;
}

// Trapezoid evaluation of the layer representation.  The densities are first
// upsampled by their trigonometric interpolant: the plain 2M-node rule decays
// only like e^{-2M d} in the distance d to a curve, which is far too slow for
// probes a fraction of a curve radius away, while the interpolation error of
// the density itself stays at the solver's spectral level.
constexpr int kEvalRefinement = 192;

double eval_interior(const DensitySolution& sol, const Point2& x) {
    if (!x.allFinite()) throw std::domain_error("eval_interior: non-finite point");
    if (!point_in_domain(sol.problem, sol.M, x)) {
        throw std::domain_error("eval_interior: point outside the solution domain");
    }
    const int m_ref = std::max(kEvalRefinement, sol.M);
    const QuadratureRule rule(sol.M);
    const Eigen::VectorXd psi1 =
        m_ref == sol.M ? sol.psi1 : upsample_periodic(rule, sol.psi1, m_ref);
    const Eigen::VectorXd psi2 =
        m_ref == sol.M ? sol.psi2 : upsample_periodic(rule, sol.psi2, m_ref);
    const Eigen::VectorXd t = nodes(m_ref);
    const double kappa = sol.problem.physics.kappa;
    double u = 0.0;
    for (int j = 0; j < 2 * m_ref; ++j) {
        u += psi1[j] * k0(kappa * (x - sample(sol.problem.gamma1, t[j]).x).norm());
        u += psi2[j] * k0(kappa * (x - sample(sol.problem.gamma2, t[j]).x).norm());
    }
    return u / (2.0 * m_ref);
}

double eval_on_boundary(const DensitySolution& sol, int i, double t) {
    require_curve_index("eval_on_boundary", i);
    const QuadratureRule rule(sol.M);
    const KernelSplit ks(sol.problem.physics, sol.problem.gamma1, sol.problem.gamma2);
    const Eigen::VectorXd w = log_weights(rule, t);
    const double trap = 1.0 / (2.0 * sol.M);
    const Eigen::VectorXd& own = i == 1 ? sol.psi1 : sol.psi2;
    const Eigen::VectorXd& other = i == 1 ? sol.psi2 : sol.psi1;
    const int other_index = i == 1 ? 2 : 1;
    const Point2 x = sample(ks.curve(i), t).x;

    double u = 0.0;
    for (int j = 0; j < 2 * sol.M; ++j) {
        const BoundaryKernelParts parts = boundary_kernel_split(ks, i, t, rule.nodes[j]);
        u += own[j] * (w[j] * parts.log_part + trap * parts.smooth_part);
        u += other[j] * trap * field_kernel(ks, other_index, x, rule.nodes[j]);
    }
    return u;
}

double robin_data_probe(const ProblemSpec& problem, int i, double t) {
    require_curve_index("robin_data_probe", i);
    if (problem.data.kind != RobinData::Kind::Fundamental) {
        throw std::domain_error("robin_data_probe: data is not fundamental-type");
    }
    const double kappa = problem.physics.kappa;
    const CurveSample s = sample(i == 1 ? problem.gamma1 : problem.gamma2, t);
    const Point2 d = s.x - problem.data.y_star;
    const double r = d.norm();
    const double dphi_dnu = -kappa * k1(kappa * r) * d.dot(s.nu) /
                            (r * 2.0 * std::numbers::pi);
    return dphi_dnu + problem.physics.lambda(i) * k0(kappa * r) /
                          (2.0 * std::numbers::pi);
}

}  // namespace kgbem
