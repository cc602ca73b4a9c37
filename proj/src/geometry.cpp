#include "kgbem/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kgbem {

namespace {

void eval_series(const TrigSeries& s, double t, double& f, double& df,
                 double& ddf) {
    f = s.constant;
    df = 0.0;
    ddf = 0.0;
    for (int k = 1; k <= s.cos_coeffs.size(); ++k) {
        const double a = s.cos_coeffs[k - 1];
        const double c = std::cos(k * t);
        const double sn = std::sin(k * t);
        f += a * c;
        df += -a * k * sn;
        ddf += -a * k * k * c;
    }
    for (int k = 1; k <= s.sin_coeffs.size(); ++k) {
        const double b = s.sin_coeffs[k - 1];
        const double c = std::cos(k * t);
        const double sn = std::sin(k * t);
        f += b * sn;
        df += b * k * c;
        ddf += -b * k * k * sn;
    }
}

void require_finite_series(const TrigSeries& s) {
    if (!std::isfinite(s.constant) || !s.cos_coeffs.allFinite() ||
        !s.sin_coeffs.allFinite()) {
        throw std::domain_error("curve coefficients must be finite");
    }
}

}  // namespace

ParametricCurve::ParametricCurve(TrigSeries x1, TrigSeries x2)
    : x1_(std::move(x1)), x2_(std::move(x2)) {
    require_finite_series(x1_);
    require_finite_series(x2_);

    // Dense validity check: nonvanishing tangent and counterclockwise
    // orientation (positive signed area), both on 512 sample points.
    constexpr int n = 512;
    const double h = 2.0 * std::numbers::pi / n;
    double area2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const CurveSample s = sample(*this, j * h);
        if (!(s.jac > 0.0) || !std::isfinite(s.jac)) {
            throw std::domain_error("curve tangent vanishes: |x'(t)| = 0");
        }
        area2 += s.x.x() * s.dx.y() - s.x.y() * s.dx.x();
    }
    area2 *= h;  // trapezoid value of the closed contour integral
    if (!(area2 > 0.0)) {
        throw std::domain_error(
            "curve must be simple and counterclockwise (signed area > 0)");
    }
}

ParametricCurve ParametricCurve::circle(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("circle radius must be positive");
    }
    TrigSeries x1;
    x1.cos_coeffs = Eigen::VectorXd::Constant(1, r);
    TrigSeries x2;
    x2.sin_coeffs = Eigen::VectorXd::Constant(1, r);
    return ParametricCurve(std::move(x1), std::move(x2));
}

ParametricCurve ParametricCurve::ellipse(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::domain_error("ellipse semi-axes must be positive");
    }
    TrigSeries x1;
    x1.cos_coeffs = Eigen::VectorXd::Constant(1, a);
    TrigSeries x2;
    x2.sin_coeffs = Eigen::VectorXd::Constant(1, b);
    return ParametricCurve(std::move(x1), std::move(x2));
}

ParametricCurve ParametricCurve::trig(TrigSeries x1, TrigSeries x2) {
    return ParametricCurve(std::move(x1), std::move(x2));
}

CurveSample sample(const ParametricCurve& curve, double t) {
    CurveSample s;
    eval_series(curve.x1(), t, s.x.x(), s.dx.x(), s.ddx.x());
    eval_series(curve.x2(), t, s.x.y(), s.dx.y(), s.ddx.y());
    s.jac = s.dx.norm();
    s.nu = Point2(s.dx.y(), -s.dx.x()) / s.jac;
    return s;
}

Eigen::VectorXd nodes(int M) {
    if (M < 1) throw std::domain_error("nodes: M must be >= 1");
    Eigen::VectorXd t(2 * M);
    for (int j = 0; j < 2 * M; ++j) t[j] = j * std::numbers::pi / M;
    return t;
}

double curvature_term(const CurveSample& s) {
    return (s.dx.y() * s.ddx.x() - s.dx.x() * s.ddx.y()) /
           (2.0 * s.jac * s.jac * s.jac);
}

}  // namespace kgbem
