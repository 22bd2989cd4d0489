#include "dockplan/frames.hpp"

#include <cmath>

namespace dockplan {

Eigen::Matrix3d rotation_body_to_ned(const Attitude& att) {
  const double cy = std::cos(att.yaw);
  const double sy = std::sin(att.yaw);
  const double cp = std::cos(att.pitch);
  const double sp = std::sin(att.pitch);

  Eigen::Matrix3d r;
  r << cy * cp, -sy, cy * sp,
       sy * cp,  cy, sy * sp,
       -sp,     0.0, cp;
  return r;
}

NedVector ground_velocity(const BodyVelocity& body, const Attitude& att,
                          const CurrentField& current) {
  const Eigen::Matrix3d r = rotation_body_to_ned(att);
  const Eigen::Vector3d v = r * Eigen::Vector3d(body.surge, body.sway, body.heave);
  return {v.x() + current.north(), v.y() + current.east(), v.z()};
}

}  // namespace dockplan
