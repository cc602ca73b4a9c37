#include "kgbem/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace kgbem {

Eigen::Matrix2Xd curve_polygon(const ParametricCurve& curve, int n) {
    if (n < 3) throw std::domain_error("curve_polygon: need at least 3 vertices");
    Eigen::Matrix2Xd poly(2, n);
    const double h = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) poly.col(j) = sample(curve, j * h).x;
    return poly;
}

namespace {

// Twice the signed area of the triangle (a, b, p).
double is_left(const Point2& a, const Point2& b, const Point2& p) {
    return (b.x() - a.x()) * (p.y() - a.y()) - (p.x() - a.x()) * (b.y() - a.y());
}

}  // namespace

int winding_number(const Eigen::Matrix2Xd& poly, const Point2& p) {
    const Eigen::Index n = poly.cols();
    int wn = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const Point2 a = poly.col(j);
        const Point2 b = poly.col((j + 1) % n);
        if (a.y() <= p.y()) {
            if (b.y() > p.y() && is_left(a, b, p) > 0.0) ++wn;
        } else {
            if (b.y() <= p.y() && is_left(a, b, p) < 0.0) --wn;
        }
    }
    return wn;
}

bool point_in_polygon(const Eigen::Matrix2Xd& poly, const Point2& p) {
    // Even-odd crossing count of a horizontal ray towards +x.
    const Eigen::Index n = poly.cols();
    bool inside = false;
    for (Eigen::Index j = 0; j < n; ++j) {
        const Point2 a = poly.col(j);
        const Point2 b = poly.col((j + 1) % n);
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            const double x_cross =
                a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (x_cross > p.x()) inside = !inside;
        }
    }
    return inside;
}

double distance_to_polygon(const Eigen::Matrix2Xd& poly, const Point2& p) {
    const Eigen::Index n = poly.cols();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Point2 a = poly.col(j);
        const Point2 b = poly.col((j + 1) % n);
        const Point2 ab = b - a;
        const double len2 = ab.squaredNorm();
        double s = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
        s = std::clamp(s, 0.0, 1.0);
        best = std::min(best, (p - (a + s * ab)).norm());
    }
    return best;
}

}  // namespace kgbem
