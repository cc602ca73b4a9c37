#include "kgbem/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/LU>

#include "kgbem/errors.hpp"
#include "kgbem/field.hpp"
#include "kgbem/polygon.hpp"
#include "kgbem/quadrature.hpp"

namespace kgbem {

namespace {

constexpr int kValidationSamples = 512;

int thread_cap() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("BEM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Static row partition; each index is written by exactly one worker, so the
// result is identical for any thread count.
void parallel_rows(int n, const std::function<void(int)>& body) {
    const int threads = std::min(thread_cap(), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(n) * w / threads);
        const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / threads);
        pool.emplace_back([lo, hi, &body] {
            for (int i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

RobinData RobinData::fundamental(Point2 y_star) {
    RobinData d;
    d.kind = Kind::Fundamental;
    d.y_star = y_star;
    return d;
}

RobinData RobinData::polynomial_example2() {
    RobinData d;
    d.kind = Kind::PolynomialExample2;
    return d;
}

RobinData RobinData::nodal(Eigen::VectorXd f1, Eigen::VectorXd f2) {
    RobinData d;
    d.kind = Kind::Nodal;
    d.f1 = std::move(f1);
    d.f2 = std::move(f2);
    return d;
}

ProblemSpec::ProblemSpec(PhysicsParams physics_, ParametricCurve gamma1_,
                         ParametricCurve gamma2_, RobinData data_)
    : physics(physics_),
      gamma1(std::move(gamma1_)),
      gamma2(std::move(gamma2_)),
      data(std::move(data_)) {
    const Eigen::Matrix2Xd p1 = curve_polygon(gamma1, kValidationSamples);
    const Eigen::Matrix2Xd p2 = curve_polygon(gamma2, kValidationSamples);

    double min_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < kValidationSamples; ++j) {
        if (winding_number(p1, p2.col(j)) != 1) {
            throw std::domain_error("gamma2 must lie strictly inside gamma1");
        }
        if (winding_number(p2, p1.col(j)) != 0) {
            throw std::domain_error("gamma1 must not enter the inner curve");
        }
        min_dist = std::min(min_dist, distance_to_polygon(p1, p2.col(j)));
    }
    if (!(min_dist > 1e-12)) {
        throw std::domain_error("boundary curves must be disjoint");
    }

    if (data.kind == RobinData::Kind::Fundamental) {
        const Point2& y = data.y_star;
        if (!y.allFinite()) throw std::domain_error("source point must be finite");
        const bool in_closure =
            (winding_number(p1, y) == 1 && winding_number(p2, y) == 0) ||
            distance_to_polygon(p1, y) < 1e-9 || distance_to_polygon(p2, y) < 1e-9;
        if (in_closure) {
            throw std::domain_error("source point inside domain");
        }
    }
    if (data.kind == RobinData::Kind::Nodal) {
        if (data.f1.size() != data.f2.size() || data.f1.size() == 0 ||
            data.f1.size() % 2 != 0) {
            throw std::domain_error("nodal data must hold 2M values per curve");
        }
        if (!data.f1.allFinite() || !data.f2.allFinite()) {
            throw std::domain_error("nodal data must be finite");
        }
    }
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> robin_rhs(const ProblemSpec& problem,
                                                      int M) {
    if (M < 1) throw std::domain_error("robin_rhs: M must be >= 1");
    const Eigen::VectorXd t = nodes(M);
    Eigen::VectorXd g1(2 * M), g2(2 * M);
    switch (problem.data.kind) {
        case RobinData::Kind::Fundamental:
            for (int j = 0; j < 2 * M; ++j) {
                g1[j] = robin_data_probe(problem, 1, t[j]);
                g2[j] = robin_data_probe(problem, 2, t[j]);
            }
            break;
        case RobinData::Kind::PolynomialExample2:
            for (int j = 0; j < 2 * M; ++j) {
                const Point2 x1 = sample(problem.gamma1, t[j]).x;
                const Point2 x2 = sample(problem.gamma2, t[j]).x;
                g1[j] = x1.x() * x1.x() + x1.y();
                g2[j] = x2.x() + x2.y() * x2.y();
            }
            break;
        case RobinData::Kind::Nodal:
            if (problem.data.f1.size() != 2 * M) {
                throw std::domain_error(
                    "nodal data length does not match 2M quadrature nodes");
            }
            g1 = problem.data.f1;
            g2 = problem.data.f2;
            break;
    }
    return {std::move(g1), std::move(g2)};
}

DiscreteSystem assemble(const ProblemSpec& problem, int M) {
    if (M < 2) throw std::domain_error("assemble: M must be >= 2");
    const int n = 2 * M;
    const QuadratureRule rule(M);
    const KernelSplit ks(problem.physics, problem.gamma1, problem.gamma2);

    // R_j(t_i) depends only on (i - j) mod 2M and is even in it, so one weight
    // evaluation at t = 0 yields the whole circulant pattern.
    const Eigen::VectorXd w0 = log_weights(rule, rule.nodes[0]);

    Eigen::VectorXd jac1(n), jac2(n);
    for (int j = 0; j < n; ++j) {
        jac1[j] = sample(problem.gamma1, rule.nodes[j]).jac;
        jac2[j] = sample(problem.gamma2, rule.nodes[j]).jac;
    }

    DiscreteSystem sys;
    sys.M = M;
    sys.matrix.resize(2 * n, 2 * n);
    const double trap = 1.0 / n;  // 1/(2M)

    parallel_rows(2 * n, [&](int row) {
        const int i = row % n;
        const double ti = rule.nodes[i];
        if (row < n) {
            // Collocation on Gamma1.
            for (int j = 0; j < n; ++j) {
                const double tj = rule.nodes[j];
                double a = w0[(i - j + n) % n] * h_diag_log(ks, 1, ti, tj) +
                           trap * h_diag_smooth(ks, 1, ti, tj);
                if (i == j) a += 0.5 / jac1[i];
                sys.matrix(row, j) = a;
                sys.matrix(row, n + j) = trap * h_full(ks, 1, 2, ti, tj);
            }
        } else {
            // Collocation on Gamma2: the normal points into the domain there,
            // so the density jump enters with the opposite sign.
            for (int j = 0; j < n; ++j) {
                const double tj = rule.nodes[j];
                sys.matrix(row, j) = trap * h_full(ks, 2, 1, ti, tj);
                double a = w0[(i - j + n) % n] * h_diag_log(ks, 2, ti, tj) +
                           trap * h_diag_smooth(ks, 2, ti, tj);
                if (i == j) a -= 0.5 / jac2[i];
                sys.matrix(row, n + j) = a;
            }
        }
    });

    auto [g1, g2] = robin_rhs(problem, M);
    sys.rhs.resize(2 * n);
    sys.rhs.head(n) = g1;
    sys.rhs.tail(n) = g2;

    if (!sys.matrix.allFinite() || !sys.rhs.allFinite()) {
        throw NumericalError("assemble: non-finite system entries", 0.0);
    }
    return sys;
}

Eigen::VectorXd solve_dense(const DiscreteSystem& system) {
    if (system.matrix.rows() != system.matrix.cols() ||
        system.matrix.rows() != system.rhs.size()) {
        throw std::domain_error("solve_dense: inconsistent system dimensions");
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.matrix);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double min_pivot = pivots.minCoeff();
    const double max_pivot = pivots.maxCoeff();
    if (min_pivot == 0.0 || min_pivot < 1e-14 * max_pivot) {
        throw NumericalError(
            "solve_dense: matrix singular to working precision (pivot " +
                std::to_string(min_pivot) + ")",
            min_pivot);
    }
    Eigen::VectorXd x = lu.solve(system.rhs);
    const double res = (system.matrix * x - system.rhs).cwiseAbs().maxCoeff();
    const double norm_a = system.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    const double bound = 1e-11 * (norm_a * x.cwiseAbs().maxCoeff() +
                                  system.rhs.cwiseAbs().maxCoeff());
    if (res > bound) {
        throw NumericalError("solve_dense: residual " + std::to_string(res) +
                                 " exceeds the backward-stability bound",
                             min_pivot);
    }
    return x;
}

DensitySolution solve_problem(const ProblemSpec& problem, int M) {
    const DiscreteSystem sys = assemble(problem, M);
    const Eigen::VectorXd x = solve_dense(sys);
    return DensitySolution{M, x.head(2 * M), x.tail(2 * M), problem};
}

}  // namespace kgbem
