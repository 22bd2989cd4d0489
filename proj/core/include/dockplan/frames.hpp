#pragma once

#include <Eigen/Core>

#include "dockplan/types.hpp"

namespace dockplan {

/// Roll-free rotation matrix taking body-frame vectors into the NED frame.
/// Orthonormal with determinant +1 for every attitude in the domain.
Eigen::Matrix3d rotation_body_to_ned(const Attitude& att);

/// Ground-referenced velocity: rotate the water-relative body velocity into
/// NED and add the (horizontal) current.
NedVector ground_velocity(const BodyVelocity& body, const Attitude& att,
                          const CurrentField& current);

}  // namespace dockplan
