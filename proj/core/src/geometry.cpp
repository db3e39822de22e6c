#include "ellwin/geometry.hpp"

#include <cmath>
#include <sstream>

#include "ellwin/errors.hpp"

namespace ellwin {

Ellipse ellipse_from_axes(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw UsageError("ellipse_from_axes: semi-axes must be positive and finite");
  }
  if (b > a) {
    std::ostringstream msg;
    msg << "ellipse_from_axes: b = " << b << " exceeds a = " << a
        << "; swap the axes (the basis assumes the major axis along x)";
    throw OrientationError(msg.str());
  }
  if (b == a) {
    throw DegenerateCircle("ellipse_from_axes: a == b, use the circular solver");
  }
  Ellipse el;
  el.a = a;
  el.b = b;
  // (a - b)(a + b) keeps relative accuracy when b is close to a.
  el.c = std::sqrt((a - b) * (a + b));
  el.r0 = std::atanh(b / a);
  el.e = el.c / a;
  return el;
}

CartesianPoint cartesian_from_elliptic(const EllipticPoint &p, double c) {
  return {c * std::cosh(p.r) * std::cos(p.theta), c * std::sinh(p.r) * std::sin(p.theta), p.z};
}

} // namespace ellwin
