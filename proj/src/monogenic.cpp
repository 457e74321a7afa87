#include "qriesz/monogenic.hpp"

#include <algorithm>
#include <cmath>

#include "qriesz/error.hpp"

namespace qriesz {

namespace {

const Complex kI(0.0, 1.0);

void require_real_scalar(const Field& f, const char* op) {
  if (!f.is_real_scalar()) throw DomainError(std::string(op) + ": input must be a real scalar field");
}

}  // namespace

MonogenicSignal monogenic(const Field& f) {
  require_real_scalar(f, "monogenic");
  return {add(f, hilbert(f)), TransformSpec{TransformKind::kMonogenic, 0.0, std::nullopt}};
}

MonogenicSignal frac_monogenic(const Field& f, double alpha) {
  require_real_scalar(f, "frac_monogenic");
  const auto [c, s] = quarter_turn(alpha);
  const Field rotated = scale(frac_hilbert(f, alpha, Variant::kScript), Biquaternion::scalar_value({c, s}), Side::kLeft);
  return {subtract(f, rotated), TransformSpec{TransformKind::kFracMonogenic, alpha, std::nullopt}};
}

MonogenicSignal qfrac_monogenic(const Field& f, double alpha, const PureUnitQuaternion& u) {
  require_real_scalar(f, "qfrac_monogenic");
  const auto [c, s] = quarter_turn(alpha);
  const Quaternion e{c, s * u.u1(), s * u.u2(), s * u.u3()};
  const Field rotated = right_mul(qfrac_hilbert(f, alpha, u, Variant::kScript), e);
  return {subtract(f, rotated), TransformSpec{TransformKind::kQFracMonogenic, alpha, u}};
}

Quaternion qfrac_monogenic_factor(double alpha, const PureUnitQuaternion& u) {
  const auto [c, s] = quarter_turn(alpha);
  return Quaternion{s * s, 0, 0, 0} - u.as_quaternion() * (s * c);
}

Field reconstruct_from_frac(const Field& f, const Field& g, double alpha, Family family,
                            const std::optional<PureUnitQuaternion>& u) {
  if (!(f.shape() == g.shape())) throw DomainError("reconstruct_from_frac: shape mismatch");
  if (!std::isfinite(alpha)) throw DomainError("reconstruct_from_frac: alpha must be finite");
  const auto [c, s] = quarter_turn(alpha);
  if (s == 0.0) {
    throw SingularParameterError("reconstruction is singular at even alpha (csc(pi*alpha/2) undefined)");
  }
  const double cot = c / s;
  const double csc = 1.0 / s;
  std::vector<Biquaternion> out(f.size());
  if (family == Family::kFrac) {
    const Complex a(1.0, cot);
    const Complex b = -kI * csc * Complex(c, s);
    for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] * a + g[n] * b;
  } else {
    if (!u) throw DomainError("reconstruct_from_frac: quaternionic family needs an axis");
    const Quaternion uq = u->as_quaternion();
    const Biquaternion fu_factor(uq * cot);
    const Biquaternion g_factor(Quaternion{c, s * u->u1(), s * u->u2(), s * u->u3()} * uq * (-csc));
    for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] + f[n] * fu_factor + g[n] * g_factor;
  }
  return {f.shape(), std::move(out)};
}

LocalFeatures local_features(const MonogenicSignal& m) {
  const auto samples = m.field.samples();
  const std::size_t n = samples.size();
  LocalFeatures out;
  out.amplitude.resize(n);
  out.phase.resize(n);
  out.orientation.assign(n, {0.0, 0.0, 0.0});
  out.orientation_defined.assign(n, 0);

  double max_amp = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    out.amplitude[x] = std::sqrt(samples[x].norm_sq());
    max_amp = std::max(max_amp, out.amplitude[x]);
  }
  const double eps = 1e-12 * max_amp;
  for (std::size_t x = 0; x < n; ++x) {
    const Quaternion q = samples[x].real();
    const double v = std::sqrt(q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
    out.phase[x] = std::atan2(v, q.q0);
    if (v > eps) {
      out.orientation[x] = {q.q1 / v, q.q2 / v, q.q3 / v};
      out.orientation_defined[x] = 1;
    }
  }
  return out;
}

Field apply(const TransformSpec& spec, const Field& f) {
  spec.validate();
  switch (spec.kind) {
    case TransformKind::kMonogenic: return monogenic(f).field;
    case TransformKind::kFracMonogenic: return frac_monogenic(f, spec.alpha).field;
    case TransformKind::kQFracMonogenic: return qfrac_monogenic(f, spec.alpha, *spec.axis).field;
    default: return apply_operator(spec, f);
  }
}

}  // namespace qriesz
