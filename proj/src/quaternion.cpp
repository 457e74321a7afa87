#include "qriesz/quaternion.hpp"

#include <cmath>
#include <sstream>

#include "qriesz/error.hpp"

namespace qriesz {

double qnorm(const Quaternion& q) { return std::sqrt(q.norm_sq()); }

Quaternion qinv(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) throw DomainError("qinv: zero quaternion has no inverse");
  return qconj(q) / n2;
}

PureUnitQuaternion::PureUnitQuaternion(double u1, double u2, double u3) : u_{u1, u2, u3} {
  const double n = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitTolerance) {
    std::ostringstream msg;
    msg << "pure unit quaternion has norm " << n << " (expected 1 within " << kUnitTolerance << ")";
    throw DomainError(msg.str());
  }
}

PureUnitQuaternion PureUnitQuaternion::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("axis must be a finite nonzero 3-vector");
  return {x / n, y / n, z / n};
}

Quaternion qexp_pure(const PureUnitQuaternion& u, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c, s * u.u1(), s * u.u2(), s * u.u3()};
}

Quaternion rotate3(const Quaternion& q, const Quaternion& x) {
  if (std::abs(qnorm(q) - 1.0) > PureUnitQuaternion::kUnitTolerance) {
    throw DomainError("rotate3: rotor is not a unit quaternion");
  }
  if (x.q0 != 0.0) throw DomainError("rotate3: argument must be a pure quaternion");
  Quaternion r = q * x * qconj(q);
  r.q0 = 0.0;  // round-off only
  return r;
}

}  // namespace qriesz
