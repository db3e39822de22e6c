#pragma once

// Elliptic window geometry. All lengths are in units of the layer width d.

namespace ellwin {

/// Below this eccentricity the solver uses the circular route.
inline constexpr double kNearCircularEccentricity = 0.05;

struct Ellipse {
  double a = 0.0;  // semi-major axis
  double b = 0.0;  // semi-minor axis
  double c = 0.0;  // focal half-distance, c^2 = a^2 - b^2
  double r0 = 0.0; // boundary coordinate, arctanh(b/a)
  double e = 0.0;  // eccentricity c/a

  bool near_circular() const noexcept { return e < kNearCircularEccentricity; }
};

struct EllipticPoint {
  double r = 0.0;
  double theta = 0.0;
  double z = 0.0;
};

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Throws OrientationError when b > a and DegenerateCircle when a == b.
Ellipse ellipse_from_axes(double a, double b);

CartesianPoint cartesian_from_elliptic(const EllipticPoint &p, double c);

} // namespace ellwin
