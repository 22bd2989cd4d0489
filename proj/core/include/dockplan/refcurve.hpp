#pragma once

#include <Eigen/Core>
#include <array>

#include "dockplan/types.hpp"

namespace dockplan {

/// One spatial axis of the reference curve, parameterized over the
/// normalized virtual argument tau_bar in [0, 1]:
///
///   f(tau_bar) = sum_k a[k] tau_bar^k + b1 sin(pi tau_bar) + b2 sin(2 pi tau_bar)
///
/// Eight degrees of freedom match the eight boundary conditions (value and
/// first three derivatives at each end). Derivatives returned by eval() are
/// with respect to tau_bar; chain-rule factors for virtual-to-time mapping
/// are applied by the sampler.
struct SpatialAxisCurve {
  std::array<double, 6> a{};
  double b1 = 0.0;
  double b2 = 0.0;

  /// Analytic value (order 0) or derivative (order 1..3) at tau_bar in [0, 1].
  double eval(double tau_bar, int order) const;
};

/// Fifth-order heading polynomial over tau_bar in [0, 1]; six coefficients
/// match value/rate/acceleration conditions at both ends.
struct YawCurve {
  std::array<double, 6> a{};

  /// Analytic value (order 0) or derivative (order 1..2) at tau_bar in [0, 1].
  double eval(double tau_bar, int order) const;
};

/// Full reference curve: three spatial axes, heading, and the final virtual
/// argument tau_f that scales boundary derivatives. Immutable after
/// construction; evaluation is reentrant.
struct ReferenceCurve {
  SpatialAxisCurve x;  // north
  SpatialAxisCurve y;  // east
  SpatialAxisCurve z;  // down
  YawCurve yaw;
  double tau_f = 1.0;

  NedVector position(double tau_bar, int order = 0) const {
    return {x.eval(tau_bar, order), y.eval(tau_bar, order), z.eval(tau_bar, order)};
  }
  double heading(double tau_bar, int order = 0) const { return yaw.eval(tau_bar, order); }
};

/// Per-axis boundary values in time units: value, first, second and third
/// time derivative at each end. The solver scales derivative conditions by
/// powers of tau_f when building the right-hand side.
struct AxisBoundary {
  double value0 = 0.0, d1_0 = 0.0, d2_0 = 0.0, d3_0 = 0.0;
  double value_f = 0.0, d1_f = 0.0, d2_f = 0.0, d3_f = 0.0;
};

/// Heading boundary values in time units: value, rate and acceleration at
/// each end.
struct YawBoundary {
  double value0 = 0.0, rate0 = 0.0, accel0 = 0.0;
  double value_f = 0.0, rate_f = 0.0, accel_f = 0.0;
};

/// Solves the constant 8x8 boundary system for one spatial axis. The matrix
/// is factorized once with partial pivoting and reused.
SpatialAxisCurve solve_spatial_axis(const AxisBoundary& bc, double tau_f);

/// Solves the constant 6x6 boundary system for the heading polynomial.
YawCurve solve_yaw(const YawBoundary& bc, double tau_f);

/// The constant boundary matrices (basis functions and derivatives evaluated
/// at tau_bar = 0 and tau_bar = 1).
Eigen::Matrix<double, 8, 8> spatial_boundary_matrix();
Eigen::Matrix<double, 6, 6> yaw_boundary_matrix();

struct MatrixSanity {
  double spatial_determinant = 0.0;
  double yaw_determinant = 0.0;
};

/// Startup self-check: determinants of both constant boundary matrices.
/// Throws if either factorization is numerically singular.
MatrixSanity matrix_sanity();

}  // namespace dockplan
