#pragma once

#include <utility>

#include <Eigen/Core>

#include "kgbem/geometry.hpp"
#include "kgbem/kernels.hpp"

namespace kgbem {

/// Robin boundary data on the two curves.
struct RobinData {
  enum class Kind {
    Fundamental,         // f_i = dPhi(.,y*)/dnu + lambda_i Phi(.,y*)
    PolynomialExample2,  // f_1 = x1^2 + x2 on Gamma1, f_2 = x1 + x2^2 on Gamma2
    Nodal,               // prescribed node values
  };

  static RobinData fundamental(Point2 y_star);
  static RobinData polynomial_example2();
  static RobinData nodal(Eigen::VectorXd f1, Eigen::VectorXd f2);

  Kind kind = Kind::Fundamental;
  Point2 y_star = Point2::Zero();
  Eigen::VectorXd f1;  // Nodal only, length 2M
  Eigen::VectorXd f2;
};

/// The full continuous problem: physics constants, the outer curve Gamma1, the
/// inner curve Gamma2 and the Robin data.  Construction verifies that Gamma2
/// lies strictly inside Gamma1, that the curves are disjoint, and for
/// fundamental data that the source point lies strictly outside the closure
/// of the solution domain.
struct ProblemSpec {
  ProblemSpec(PhysicsParams physics, ParametricCurve gamma1,
              ParametricCurve gamma2, RobinData data);

  PhysicsParams physics;
  ParametricCurve gamma1;
  ParametricCurve gamma2;
  RobinData data;
};

/// The assembled 4M x 4M Nystrom system.  Rows and columns are ordered
/// Gamma1 nodes 0..2M-1 first, then Gamma2 nodes 0..2M-1.
struct DiscreteSystem {
  int M;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

/// Node values of the Jacobian-weighted densities psi_i(t) = phi_i(x_i(t)) |x_i'(t)|.
struct DensitySolution {
  int M;
  Eigen::VectorXd psi1;  // 2M values
  Eigen::VectorXd psi2;
  ProblemSpec problem;
};

/// Right-hand sides g_i(t_j) = f_i(x_i(t_j)) on the 2M nodes of each curve.
std::pair<Eigen::VectorXd, Eigen::VectorXd> robin_rhs(const ProblemSpec& problem,
                                                      int M);

/// Assemble the 4M x 4M collocation system.  Requires M >= 2.
DiscreteSystem assemble(const ProblemSpec& problem, int M);

/// Solve the dense system by LU with partial pivoting.  Throws NumericalError
/// when the matrix is singular to working precision or when the residual
/// exceeds ||Ax-b||_inf <= 1e-11 (||A||_inf ||x||_inf + ||b||_inf).
Eigen::VectorXd solve_dense(const DiscreteSystem& system);

/// assemble + solve_dense, split into the two density vectors.
DensitySolution solve_problem(const ProblemSpec& problem, int M);

}  // namespace kgbem
