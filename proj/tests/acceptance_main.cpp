// Acceptance suite: end-to-end checks of the solver against the published
// convergence studies and the analytic properties of its building blocks.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "kgbem/field.hpp"
#include "kgbem/kernels.hpp"
#include "kgbem/quadrature.hpp"
#include "kgbem/solver.hpp"
#include "kgbem/special_functions.hpp"

using namespace kgbem;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

ParametricCurve kidney_curve() {
    TrigSeries x1, x2;
    x1.cos_coeffs = Eigen::VectorXd::Constant(1, 0.5);
    x2.constant = -0.15;
    x2.sin_coeffs = Eigen::VectorXd::Constant(1, 0.4);
    x2.cos_coeffs = Eigen::VectorXd::Zero(2);
    x2.cos_coeffs[1] = 0.15;
    return ParametricCurve::trig(x1, x2);
}

ProblemSpec example1a() {
    return ProblemSpec(PhysicsParams(1.0, 1.0, 1.0), ParametricCurve::ellipse(1.3, 1.0),
                       kidney_curve(), RobinData::fundamental(Point2(4.0, 0.0)));
}

ProblemSpec example1b(Point2 source = Point2(4.0, 0.0)) {
    return ProblemSpec(PhysicsParams(1.0, 1.0, 1.0), ParametricCurve::circle(2.0),
                       ParametricCurve::circle(0.5), RobinData::fundamental(source));
}

ProblemSpec example2() {
    return ProblemSpec(PhysicsParams(1.0, 1.0, 1.0), ParametricCurve::ellipse(1.3, 1.0),
                       kidney_curve(), RobinData::polynomial_example2());
}

double max_probe_error(const ProblemSpec& p, int M, const std::vector<Point2>& probes) {
    const DensitySolution sol = solve_problem(p, M);
    double worst = 0.0;
    for (const Point2& x : probes) {
        const double exact = fundamental_solution(x, p.data.y_star, p.physics.kappa);
        worst = std::max(worst, std::abs(eval_interior(sol, x) - exact));
    }
    return worst;
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const int n = static_cast<int>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < n; ++k) {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void criterion1_ellipse_kidney_errors() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Point2> probes = {{0.0, 0.5}, {1.0, 0.0}, {-0.5, 0.4}, {-0.5, -0.2}};
    const std::vector<std::pair<int, double>> gates = {
        {4, 5e-4}, {8, 1e-5}, {16, 1e-8}, {32, 1e-12}};
    const auto p = example1a();
    bool ok = true;
    std::string detail;
    for (const auto& [M, tol] : gates) {
        const double err = max_probe_error(p, M, probes);
        ok = ok && err <= tol;
        detail += "M=" + std::to_string(M) + ": " + fmt(err) + "; ";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 5.0;
    detail += "runtime " + fmt(secs) + "s";
    report(1, "ellipse/kidney study: exact-solution errors", ok, detail);
}

void criterion2_circles_errors() {
    const std::vector<Point2> probes = {{1.0, 1.0}, {-1.0, 0.7}, {0.0, -1.5}, {1.8, -0.3}};
    const auto p = example1b();
    const double e16 = max_probe_error(p, 16, probes);
    const double e32 = max_probe_error(p, 32, probes);
    const bool ok = e16 <= 1e-6 && e32 <= 1e-10;
    report(2, "concentric-circles study: exact-solution errors", ok,
           "M=16: " + fmt(e16) + " <= 1e-6; M=32: " + fmt(e32) + " <= 1e-10");
}

void criterion3_exponential_convergence() {
    const std::vector<Point2> probes_a = {{0.0, 0.5}, {1.0, 0.0}, {-0.5, 0.4}, {-0.5, -0.2}};
    const std::vector<Point2> probes_b = {{1.0, 1.0}, {-1.0, 0.7}, {0.0, -1.5}, {1.8, -0.3}};
    bool ok = true;
    std::string detail;
    const ProblemSpec problems[] = {example1a(), example1b()};
    const std::vector<Point2>* probe_sets[] = {&probes_a, &probes_b};
    const char* names[] = {"ellipse/kidney", "circles"};
    for (int g = 0; g < 2; ++g) {
        std::vector<double> ms, lnerrs;
        for (const int M : {4, 8, 16, 32}) {
            ms.push_back(M);
            lnerrs.push_back(std::log(max_probe_error(problems[g], M, *probe_sets[g])));
        }
        const double slope = lsq_slope(ms, lnerrs);
        ok = ok && slope <= -0.5;
        detail += std::string(names[g]) + " slope " + fmt(slope) + "; ";
    }
    report(3, "exponential convergence slopes <= -0.5", ok, detail);
}

void criterion4_polynomial_study_values() {
    // Faithful comparison against the published study row.  The value match
    // fails: those published values do not solve the stated boundary-value
    // problem.  The solved field here verifiably satisfies its Robin data
    // (checked by normal-derivative extrapolation) and is internally
    // converged to ~1e-9, yet differs from the published row by up to 1.9e-2;
    // no boundary-normal orientation, jump sign, data sign, lambda/kappa
    // variation or curve-encoding variant reproduces that row, and an
    // independent fundamental-solutions fit agrees with the values computed
    // here, not the published ones.  See the convergence columns: both runs
    // converge cleanly, to different limits.
    const std::vector<Point2> probes = {{0.0, 0.4}, {1.0, 0.0}, {-0.5, 0.4}, {-0.6, -0.4}};
    const std::vector<double> reference = {1.088551277, 0.710212073, 1.087486912,
                                           0.609981936};
    const auto p = example2();
    const DensitySolution s64 = solve_problem(p, 64);
    const DensitySolution s32 = solve_problem(p, 32);
    double worst_ref = 0.0, worst_diff = 0.0;
    std::string vals;
    for (std::size_t k = 0; k < probes.size(); ++k) {
        const double u64 = eval_interior(s64, probes[k]);
        const double u32 = eval_interior(s32, probes[k]);
        worst_ref = std::max(worst_ref, std::abs(u64 - reference[k]));
        worst_diff = std::max(worst_diff, std::abs(u64 - u32));
        vals += fmt(u64) + (k + 1 < probes.size() ? " " : "");
    }
    const bool ok = worst_ref <= 2e-5 && worst_diff <= 1e-5;
    report(4, "polynomial-data study values at M=64", ok,
           "max |u - published| = " + fmt(worst_ref) + " (gate 2e-5), max |u64 - u32| = " +
               fmt(worst_diff) + " (gate 1e-5); computed u = [" + vals + "]");
}

void criterion5_quadrature() {
    double worst_sum = 0.0, worst_law = 0.0;
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> ts(0.0, 2 * pi);
    for (int M = 2; M <= 64; ++M) {
        const QuadratureRule rule(M);
        for (int k = 0; k < 4; ++k) {
            const double t = ts(rng);
            const Eigen::VectorXd w = log_weights(rule, t);
            worst_sum = std::max(worst_sum, std::abs(w.sum() + 1.0));
            for (int m = 1; m < M; ++m) {
                double got = 0.0;
                for (int j = 0; j < 2 * M; ++j) got += w[j] * std::cos(m * rule.nodes[j]);
                worst_law = std::max(worst_law, std::abs(got + std::cos(m * t) / m));
            }
        }
    }
    const bool ok = worst_sum <= 1e-12 && worst_law <= 1e-12;
    report(5, "log-quadrature weight sums and trigonometric exactness", ok,
           "sum defect " + fmt(worst_sum) + ", law defect " + fmt(worst_law));
}

void criterion6_special_functions() {
    double worst_w = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double z = 0.05 * std::pow(20.0 / 0.05, k / 400.0);
        worst_w = std::max(worst_w, std::abs(z * (i0(z) * k1(z) + i1(z) * k0(z)) - 1.0));
    }

    double worst_split = 0.0;
    for (int k = 0; k <= 300; ++k) {
        const double z = 1e-6 * std::pow(10.0 / 1e-6, k / 300.0);
        const long double lg = std::log(static_cast<long double>(z) / 2.0L);
        const double d0 = std::abs(static_cast<double>(
            static_cast<long double>(k0(z)) - (-lg * i0(z) + sigma0(z))));
        const double d1 = std::abs(static_cast<double>(
            static_cast<long double>(k1(z)) - (1.0L / z + lg * i1(z) + sigma1(z))));
        worst_split = std::max({worst_split, d0 / std::max(1.0, std::abs(k0(z))),
                                d1 / std::max(1.0, std::abs(k1(z)))});
    }

    const double rv = std::max(
        {std::abs(k0(1.0) / 0.42102443824070833 - 1.0),
         std::abs(k1(1.0) / 0.60190723019723457 - 1.0),
         std::abs(i0(1.0) / 1.2660658777520084 - 1.0),
         std::abs(i1(1.0) / 0.56515910399248503 - 1.0)});

    const bool ok = worst_w <= 1e-12 && worst_split <= 1e-12 && rv <= 1e-13;
    report(6, "Bessel Wronskian, splitting identities and reference values", ok,
           "wronskian " + fmt(worst_w) + ", split " + fmt(worst_split) + ", values " +
               fmt(rv));
}

void criterion7_method_properties() {
    bool ok = true;
    std::string detail;

    // Zero data -> zero densities and zero field.
    {
        const int M = 8;
        const ProblemSpec p(PhysicsParams(1, 1, 1), ParametricCurve::circle(2.0),
                            ParametricCurve::circle(0.5),
                            RobinData::nodal(Eigen::VectorXd::Zero(2 * M),
                                             Eigen::VectorXd::Zero(2 * M)));
        const DensitySolution sol = solve_problem(p, M);
        const double dmax =
            std::max(sol.psi1.cwiseAbs().maxCoeff(), sol.psi2.cwiseAbs().maxCoeff());
        const double fmax = std::abs(eval_interior(sol, Point2(1.2, 0.3)));
        ok = ok && dmax <= 1e-12 && fmax <= 1e-12;
        detail += "zero-data " + fmt(std::max(dmax, fmax)) + "; ";
    }

    // Source point inside the hole: second exact-solution family converges.
    {
        const auto p = example1b(Point2(0.0, 0.0));
        const std::vector<Point2> probes = {{1.0, 1.0}, {-1.0, 0.7}, {0.0, -1.5}, {1.8, -0.3}};
        std::vector<double> ms, lnerrs;
        for (const int M : {4, 8, 16, 32}) {
            ms.push_back(M);
            lnerrs.push_back(std::log(max_probe_error(p, M, probes)));
        }
        const double slope = lsq_slope(ms, lnerrs);
        ok = ok && slope <= -0.5;
        detail += "hole-source slope " + fmt(slope) + "; ";
    }

    // Kernel split-reconstruction identity at 10^4 random arguments.
    {
        const KernelSplit ks(PhysicsParams(1.0, 1.0, 1.0),
                             ParametricCurve::ellipse(1.3, 1.0), kidney_curve());
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> ts(0.0, 2 * pi);
        double worst = 0.0;
        for (int k = 0; k < 10000; ++k) {
            const int i = 1 + (k % 2);
            const double t = ts(rng);
            const double tau = ts(rng);
            if (std::sin(0.5 * (t - tau)) == 0.0) continue;
            const double full = h_full(ks, i, i, t, tau);
            const double recon = h_diag_log(ks, i, t, tau) * log_factor(t, tau) +
                                 h_diag_smooth(ks, i, t, tau);
            worst = std::max(worst,
                             std::abs(recon - full) / std::max(1.0, std::abs(full)));
        }
        ok = ok && worst <= 1e-11;
        detail += "split-recon " + fmt(worst);
    }

    report(7, "method-level properties", ok, detail);
}

}  // namespace

int main() {
    criterion1_ellipse_kidney_errors();
    criterion2_circles_errors();
    criterion3_exponential_convergence();
    criterion4_polynomial_study_values();
    criterion5_quadrature();
    criterion6_special_functions();
    criterion7_method_properties();
    if (failures == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
    } else {
        std::printf("acceptance: %d of 7 criteria failed\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
