#include "qriesz/transforms.hpp"

#include <cmath>
#include <numbers>

#include "qriesz/error.hpp"
#include "qriesz/spectral.hpp"

namespace qriesz {

namespace {

const Complex kI(0.0, 1.0);

// a f + b g, sample-wise with complex scalars.
Field combine(Complex a, const Field& f, Complex b, const Field& g) {
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] * a + g[n] * b;
  return {f.shape(), std::move(out)};
}

Field scale_complex(const Field& f, Complex a) {
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] * a;
  return {f.shape(), std::move(out)};
}

}  // namespace

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kIdentity: return "identity";
    case TransformKind::kHilbert: return "hilbert";
    case TransformKind::kPplus: return "pplus";
    case TransformKind::kPminus: return "pminus";
    case TransformKind::kFracH: return "frac-plain";
    case TransformKind::kFracScriptH: return "frac-script";
    case TransformKind::kQFracH: return "qfrac-plain";
    case TransformKind::kQFracScriptH: return "qfrac-script";
    case TransformKind::kMonogenic: return "monogenic";
    case TransformKind::kFracMonogenic: return "frac-monogenic";
    case TransformKind::kQFracMonogenic: return "qfrac-monogenic";
  }
  return "unknown";
}

bool requires_axis(TransformKind kind) {
  return kind == TransformKind::kQFracH || kind == TransformKind::kQFracScriptH ||
         kind == TransformKind::kQFracMonogenic;
}

void TransformSpec::validate() const {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  if (requires_axis(kind) && !axis) {
    throw DomainError(std::string(to_string(kind)) + " requires an axis");
  }
}

QuarterTurn quarter_turn(double alpha) {
  double r = std::fmod(alpha, 4.0);
  if (r < 0.0) r += 4.0;
  if (r == 0.0 || r == 4.0) return {1.0, 0.0};
  if (r == 1.0) return {0.0, 1.0};
  if (r == 2.0) return {-1.0, 0.0};
  if (r == 3.0) return {0.0, -1.0};
  const double phi = std::numbers::pi / 2.0 * r;
  return {std::cos(phi), std::sin(phi)};
}

Field hilbert(const Field& f) {
  const FrequencyGrid grid(f.shape());
  auto out = idft(apply_symbol(dft(f), riesz_symbol(grid), Side::kLeft));
  // The multiplier is Hermitian: real-coefficient input has a real image.
  return f.is_real_quaternion() ? real_part(out) : out;
}

Field hardy_project(const Field& f, HardySign sign) {
  const Field hf = hilbert(f);
  const Field plus = combine(0.5, f, 0.5, hf);
  return sign == HardySign::kPlus ? plus : subtract(f, plus);
}

Field frac_hilbert(const Field& f, double alpha, Variant variant) {
  const auto [c, s] = quarter_turn(alpha);
  const Field script = combine(c, f, kI * s, hilbert(f));
  if (variant == Variant::kScript) return script;
  // e^{-i pi a/2}
  return scale_complex(script, Complex(c, -s));
}

Field qfrac_hilbert(const Field& f, double alpha, const PureUnitQuaternion& u, Variant variant) {
  const auto [c, s] = quarter_turn(alpha);
  const Field script = combine(c, f, s, right_mul(hilbert(f), u.as_quaternion()));
  if (variant == Variant::kScript) return script;
  // R(e^{-u pi a/2})
  const Quaternion phase{c, -s * u.u1(), -s * u.u2(), -s * u.u3()};
  return right_mul(script, phase);
}

Field apply_operator(const TransformSpec& spec, const Field& f) {
  spec.validate();
  switch (spec.kind) {
    case TransformKind::kIdentity: return f;
    case TransformKind::kHilbert: return hilbert(f);
    case TransformKind::kPplus: return hardy_project(f, HardySign::kPlus);
    case TransformKind::kPminus: return hardy_project(f, HardySign::kMinus);
    case TransformKind::kFracH: return frac_hilbert(f, spec.alpha, Variant::kPlain);
    case TransformKind::kFracScriptH: return frac_hilbert(f, spec.alpha, Variant::kScript);
    case TransformKind::kQFracH: return qfrac_hilbert(f, spec.alpha, *spec.axis, Variant::kPlain);
    case TransformKind::kQFracScriptH: return qfrac_hilbert(f, spec.alpha, *spec.axis, Variant::kScript);
    default: break;
  }
  throw DomainError(std::string(to_string(spec.kind)) + " is not an operator kind");
}

double semigroup_check(double alpha, double beta, const Field& f, Family family,
                       const std::optional<PureUnitQuaternion>& u, Variant variant) {
  if (family == Family::kQFrac && !u) throw DomainError("semigroup_check: quaternionic family needs an axis");
  auto op = [&](double a, const Field& g) {
    return family == Family::kFrac ? frac_hilbert(g, a, variant) : qfrac_hilbert(g, a, *u, variant);
  };
  const double nf = norm2(f);
  if (nf == 0.0) return 0.0;
  return norm2(subtract(op(alpha, op(beta, f)), op(alpha + beta, f))) / nf;
}

}  // namespace qriesz
