#include "kgbem/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kgbem/special_functions.hpp"

namespace kgbem {

namespace {

// ln(4) - 1, so that ln((4/e) q^2) = kLn4OverE + 2 ln q.
const double kLn4OverE = std::log(4.0) - 1.0;

void require_curve_index(const char* fn, int i) {
    if (i != 1 && i != 2) {
        throw std::invalid_argument(std::string(fn) + ": curve index must be 1 or 2");
    }
}

}  // namespace

PhysicsParams::PhysicsParams(double kappa_, double lambda1_, double lambda2_)
    : kappa(kappa_), lambda1(lambda1_), lambda2(lambda2_) {
    if (!(kappa > 0.0) || !std::isfinite(kappa) || !(lambda1 > 0.0) ||
        !std::isfinite(lambda1) || !(lambda2 > 0.0) || !std::isfinite(lambda2)) {
        throw std::domain_error(
            "physics parameters kappa, lambda1, lambda2 must be positive and finite");
    }
}

double PhysicsParams::lambda(int i) const {
    require_curve_index("PhysicsParams::lambda", i);
    return i == 1 ? lambda1 : lambda2;
}

KernelSplit::KernelSplit(PhysicsParams physics, ParametricCurve gamma1,
                         ParametricCurve gamma2)
    : physics_(physics), gamma1_(std::move(gamma1)), gamma2_(std::move(gamma2)) {}

const ParametricCurve& KernelSplit::curve(int i) const {
    require_curve_index("KernelSplit::curve", i);
    return i == 1 ? gamma1_ : gamma2_;
}

double log_factor(double t, double tau) {
    const double s = std::sin(0.5 * (t - tau));
    return kLn4OverE + 2.0 * std::log(std::abs(s));
}

double h_full(const KernelSplit& ks, int i, int j, double t, double tau) {
    require_curve_index("h_full", i);
    require_curve_index("h_full", j);
    if (i == j && std::abs(std::sin(0.5 * (t - tau))) < 1e-12) {
        throw std::domain_error("h_full: coincident kernel points; use the split");
    }
    const CurveSample sx = sample(ks.curve(i), t);
    const CurveSample sy = sample(ks.curve(j), tau);
    const Point2 d = sx.x - sy.x;
    const double r = d.norm();
    if (r == 0.0) {
        throw std::domain_error("h_full: coincident kernel points; use the split");
    }
    const double kappa = ks.physics().kappa;
    return -kappa * k1(kappa * r) * d.dot(sx.nu) / r +
           ks.physics().lambda(i) * k0(kappa * r);
}

// H_ii carries two logarithmic contributions: -(lambda_i/2) I0(kappa r) from
// the K0 term and -(kappa/2) I1(kappa r) q/r from the K1 normal-derivative
// term (q = (x-y).nu(x), zero on the diagonal).  Both must sit in the
// coefficient of ln((4/e) sin^2((t-tau)/2)): with only the first, the
// remainder keeps a theta^2 ln|theta| part and the scheme drops to algebraic
// convergence.  The full remainder is analytic,
//   H^(2) = -H^(1) ln(16 sin^2((t-tau)/2)/(e kappa^2 r^2))
//           - q/r^2 - kappa sigma1(kappa r) q/r + lambda_i sigma0(kappa r).

double h_diag_log(const KernelSplit& ks, int i, double t, double tau) {
    require_curve_index("h_diag_log", i);
    const double kappa = ks.physics().kappa;
    const double lam = ks.physics().lambda(i);
    const CurveSample sx = sample(ks.curve(i), t);

    if (std::sin(0.5 * (t - tau)) == 0.0) return -0.5 * lam;
    const Point2 d = sx.x - sample(ks.curve(i), tau).x;
    const double r = d.norm();
    if (r == 0.0) return -0.5 * lam;

    const double q = d.dot(sx.nu);
    return -0.5 * kappa * i1(kappa * r) * q / r - 0.5 * lam * i0(kappa * r);
}

double h_diag_smooth(const KernelSplit& ks, int i, double t, double tau) {
    require_curve_index("h_diag_smooth", i);
    const double kappa = ks.physics().kappa;
    const double lam = ks.physics().lambda(i);
    const CurveSample sx = sample(ks.curve(i), t);

    const double s = std::sin(0.5 * (t - tau));
    const double r = s == 0.0 ? 0.0 : (sx.x - sample(ks.curve(i), tau).x).norm();
    if (r == 0.0) {
        // Diagonal limit.
        return curvature_term(sx) +
               0.5 * lam * std::log(4.0 / (std::numbers::e * kappa * kappa * sx.jac * sx.jac)) -
               lam * euler_gamma;
    }

    const CurveSample sy = sample(ks.curve(i), tau);
    const Point2 d = sx.x - sy.x;
    const double q = d.dot(sx.nu);
    const double z = kappa * r;
    // ln(16 sin^2((t-tau)/2) / (e kappa^2 r^2)) via the smooth ratio 2|s|/(kappa r).
    const double log_ratio = kLn4OverE + 2.0 * std::log(2.0 * std::abs(s) / (kappa * r));
    const double log_coeff = -0.5 * kappa * i1(z) * q / r - 0.5 * lam * i0(z);
    return -log_coeff * log_ratio - q / (r * r) - kappa * sigma1(z) * q / r +
           lam * sigma0(z);
}

double field_kernel(const KernelSplit& ks, int j, const Point2& x, double tau) {
    require_curve_index("field_kernel", j);
    const double r = (x - sample(ks.curve(j), tau).x).norm();
    if (r == 0.0) {
        throw std::domain_error("field_kernel: evaluation point lies on the curve");
    }
    return k0(ks.physics().kappa * r);
}

BoundaryKernelParts boundary_kernel_split(const KernelSplit& ks, int i, double t,
                                          double tau) {
    require_curve_index("boundary_kernel_split", i);
    const double kappa = ks.physics().kappa;
    const CurveSample sx = sample(ks.curve(i), t);

    const double s = std::sin(0.5 * (t - tau));
    const double r = s == 0.0 ? 0.0 : (sx.x - sample(ks.curve(i), tau).x).norm();
    if (r == 0.0) {
        const double diag =
            0.5 * std::log(4.0 / (std::numbers::e * kappa * kappa * sx.jac * sx.jac)) -
            euler_gamma;
        return {-0.5, diag};
    }

    const double z = kappa * r;
    const double log_ratio = kLn4OverE + 2.0 * std::log(2.0 * std::abs(s) / (kappa * r));
    return {-0.5 * i0(z), 0.5 * i0(z) * log_ratio + sigma0(z)};
}

}  // namespace kgbem
