#pragma once

#include "kgbem/geometry.hpp"

namespace kgbem {

/// Equation and boundary-condition constants: kappa of Delta u - kappa^2 u = 0
/// and the Robin weights lambda_i of du/dnu + lambda_i u = f_i.
struct PhysicsParams {
  PhysicsParams(double kappa, double lambda1, double lambda2);

  double lambda(int i) const;  // i in {1, 2}

  double kappa;
  double lambda1;
  double lambda2;
};

/// Evaluators for the parametrized boundary kernels H_ij of the Robin system,
/// their splitting into a smooth coefficient of ln((4/e) sin^2((t-tau)/2))
/// plus a smooth remainder, and the kernels of field/boundary evaluation.
class KernelSplit {
 public:
  KernelSplit(PhysicsParams physics, ParametricCurve gamma1,
              ParametricCurve gamma2);

  const PhysicsParams& physics() const { return physics_; }
  const ParametricCurve& curve(int i) const;

 private:
  PhysicsParams physics_;
  ParametricCurve gamma1_;
  ParametricCurve gamma2_;
};

/// The periodic logarithmic factor ln((4/e) sin^2((t-tau)/2)).
double log_factor(double t, double tau);

/// Full kernel H_ij(t,tau) = -kappa K1(kappa r) ((x-y).nu(x))/r + lambda_i K0(kappa r)
/// with x = x_i(t), y = x_j(tau), r = |x-y|.  For i = j the caller must keep
/// t and tau distinct; coincident points throw std::domain_error.
double h_full(const KernelSplit& ks, int i, int j, double t, double tau);

/// Log-coefficient H_ii^(1)(t,tau) of ln((4/e) sin^2((t-tau)/2)) in H_ii:
///   -(kappa/2) I1(kappa r) ((x-y).nu(x))/r - (lambda_i/2) I0(kappa r).
/// The I1 part comes from the normal-derivative kernel and vanishes on the
/// diagonal, so the diagonal value is -lambda_i/2; without it the remainder
/// H^(2) is not smooth and the scheme loses its spectral rate.  Total.
double h_diag_log(const KernelSplit& ks, int i, double t, double tau);

/// Smooth remainder H_ii^(2)(t,tau), evaluated by its explicit sigma0/sigma1
/// form (never by subtracting the nearly singular pieces); total, with the
/// closed-form value on the diagonal.
double h_diag_smooth(const KernelSplit& ks, int i, double t, double tau);

/// Field-evaluation kernel K0(kappa |x - x_j(tau)|) for x off the curve.
double field_kernel(const KernelSplit& ks, int j, const Point2& x, double tau);

struct BoundaryKernelParts {
  double log_part;     // coefficient of ln((4/e) sin^2((t-tau)/2))
  double smooth_part;  // smooth remainder
};

/// Splitting of the boundary-evaluation kernel K0(kappa |x_i(t) - x_i(tau)|)
/// with log_part = -(1/2) I0(kappa r); total, with diagonal limits
/// (-1/2, (1/2) ln(4/(e kappa^2 |x_i'(t)|^2)) - euler_gamma).
BoundaryKernelParts boundary_kernel_split(const KernelSplit& ks, int i,
                                          double t, double tau);

}  // namespace kgbem
