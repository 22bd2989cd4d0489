#include "dockplan/refcurve.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "dockplan/angles.hpp"

namespace dockplan {

namespace {

void check_eval_domain(double tau_bar, int order, int max_order) {
  if (!(tau_bar >= 0.0 && tau_bar <= 1.0)) {
    throw std::domain_error("curve eval: tau_bar must lie in [0, 1]");
  }
  if (order < 0 || order > max_order) {
    throw std::domain_error("curve eval: derivative order out of range");
  }
}

Eigen::Matrix<double, 8, 8> build_spatial_matrix() {
  const double p = kPi;
  const double p3 = p * p * p;
  Eigen::Matrix<double, 8, 8> m;
  // Rows: value, d1, d2, d3 at tau_bar = 0, then the same at tau_bar = 1.
  m << 1, 0, 0, 0, 0,  0,  0,       0,
       0, 1, 0, 0, 0,  0,  p,       2 * p,
       0, 0, 2, 0, 0,  0,  0,       0,
       0, 0, 0, 6, 0,  0,  -p3,     -8 * p3,
       1, 1, 1, 1, 1,  1,  0,       0,
       0, 1, 2, 3, 4,  5,  -p,      2 * p,
       0, 0, 2, 6, 12, 20, 0,       0,
       0, 0, 0, 6, 24, 60, p3,      -8 * p3;
  return m;
}

Eigen::Matrix<double, 6, 6> build_yaw_matrix() {
  Eigen::Matrix<double, 6, 6> m;
  m << 1, 0, 0, 0, 0,  0,
       0, 1, 0, 0, 0,  0,
       0, 0, 2, 0, 0,  0,
       1, 1, 1, 1, 1,  1,
       0, 1, 2, 3, 4,  5,
       0, 0, 2, 6, 12, 20;
  return m;
}

template <int N>
struct FactoredSystem {
  Eigen::PartialPivLU<Eigen::Matrix<double, N, N>> lu;
  double determinant;

  explicit FactoredSystem(const Eigen::Matrix<double, N, N>& m) : lu(m) {
    determinant = lu.determinant();
    if (!(std::abs(determinant) > 1e-9)) {
      throw std::runtime_error("boundary matrix is numerically singular");
    }
  }
};

const FactoredSystem<8>& spatial_system() {
  static const FactoredSystem<8> sys(build_spatial_matrix());
  return sys;
}

const FactoredSystem<6>& yaw_system() {
  static const FactoredSystem<6> sys(build_yaw_matrix());
  return sys;
}

}  // namespace

double SpatialAxisCurve::eval(double tau_bar, int order) const {
  check_eval_domain(tau_bar, order, 3);
  const double t = tau_bar;
  const double p = kPi;
  switch (order) {
    case 0:
      return a[0] + t * (a[1] + t * (a[2] + t * (a[3] + t * (a[4] + t * a[5])))) +
             b1 * std::sin(p * t) + b2 * std::sin(2 * p * t);
    case 1:
      return a[1] + t * (2 * a[2] + t * (3 * a[3] + t * (4 * a[4] + t * 5 * a[5]))) +
             b1 * p * std::cos(p * t) + b2 * 2 * p * std::cos(2 * p * t);
    case 2:
      return 2 * a[2] + t * (6 * a[3] + t * (12 * a[4] + t * 20 * a[5])) -
             b1 * p * p * std::sin(p * t) - b2 * 4 * p * p * std::sin(2 * p * t);
    default:
      return 6 * a[3] + t * (24 * a[4] + t * 60 * a[5]) -
             b1 * p * p * p * std::cos(p * t) - b2 * 8 * p * p * p * std::cos(2 * p * t);
  }
}

double YawCurve::eval(double tau_bar, int order) const {
  check_eval_domain(tau_bar, order, 2);
  const double t = tau_bar;
  switch (order) {
    case 0:
      return a[0] + t * (a[1] + t * (a[2] + t * (a[3] + t * (a[4] + t * a[5]))));
    case 1:
      return a[1] + t * (2 * a[2] + t * (3 * a[3] + t * (4 * a[4] + t * 5 * a[5])));
    default:
      return 2 * a[2] + t * (6 * a[3] + t * (12 * a[4] + t * 20 * a[5]));
  }
}

SpatialAxisCurve solve_spatial_axis(const AxisBoundary& bc, double tau_f) {
  if (!(tau_f > 0.0) || !std::isfinite(tau_f)) {
    throw std::domain_error("solve_spatial_axis: tau_f must be positive and finite");
  }
  const double tf2 = tau_f * tau_f;
  const double tf3 = tf2 * tau_f;
  Eigen::Matrix<double, 8, 1> rhs;
  rhs << bc.value0, bc.d1_0 * tau_f, bc.d2_0 * tf2, bc.d3_0 * tf3,
         bc.value_f, bc.d1_f * tau_f, bc.d2_f * tf2, bc.d3_f * tf3;
  if (!rhs.allFinite()) {
    throw std::domain_error("solve_spatial_axis: boundary conditions must be finite");
  }

  const Eigen::Matrix<double, 8, 1> c = spatial_system().lu.solve(rhs);
  SpatialAxisCurve curve;
  for (int i = 0; i < 6; ++i) curve.a[static_cast<size_t>(i)] = c(i);
  curve.b1 = c(6);
  curve.b2 = c(7);
  return curve;
}

YawCurve solve_yaw(const YawBoundary& bc, double tau_f) {
  if (!(tau_f > 0.0) || !std::isfinite(tau_f)) {
    throw std::domain_error("solve_yaw: tau_f must be positive and finite");
  }
  Eigen::Matrix<double, 6, 1> rhs;
  rhs << bc.value0, bc.rate0 * tau_f, bc.accel0 * tau_f * tau_f,
         bc.value_f, bc.rate_f * tau_f, bc.accel_f * tau_f * tau_f;
  if (!rhs.allFinite()) {
    throw std::domain_error("solve_yaw: boundary conditions must be finite");
  }

  const Eigen::Matrix<double, 6, 1> c = yaw_system().lu.solve(rhs);
  YawCurve curve;
  for (int i = 0; i < 6; ++i) curve.a[static_cast<size_t>(i)] = c(i);
  return curve;
}

Eigen::Matrix<double, 8, 8> spatial_boundary_matrix() { return build_spatial_matrix(); }

Eigen::Matrix<double, 6, 6> yaw_boundary_matrix() { return build_yaw_matrix(); }

MatrixSanity matrix_sanity() {
  return {spatial_system().determinant, yaw_system().determinant};
}

}  // namespace dockplan
