#pragma once

/**
 * Monogenic signals of real scalar fields.
 *
 *   M f        = f + Hf
 *   M^a f      = f - e^{i pi a/2} (script H^a f)
 *   M^{u a} f  = f - (script H^{u a} f) e^{u pi a/2}
 *
 * Closed forms (any f): M^a f = -i sin(pi a/2) e^{i pi a/2} M f and
 * M^{u a} f = (M f) (s^2 - s c u) with c, s = cos, sin(pi a/2).
 */

#include <array>
#include <cstdint>
#include <vector>

#include "qriesz/field.hpp"
#include "qriesz/transforms.hpp"

namespace qriesz {

struct MonogenicSignal {
  Field field;
  TransformSpec provenance;
};

// All constructors throw DomainError unless f.is_real_scalar().
MonogenicSignal monogenic(const Field& f);
MonogenicSignal frac_monogenic(const Field& f, double alpha);
MonogenicSignal qfrac_monogenic(const Field& f, double alpha, const PureUnitQuaternion& u);

// Right factor s^2 - s c u, i.e. M^{u a} f = (M f) * qfrac_monogenic_factor(a, u).
Quaternion qfrac_monogenic_factor(double alpha, const PureUnitQuaternion& u);

/**
 * Recovers M f from f and g = H^a f (family kFrac) or g = H^{u a} f (kQFrac):
 *
 *   M f = (1 + i cot(pi a/2)) f - i csc(pi a/2) e^{i pi a/2} g
 *   M f = f + cot(pi a/2) f u - csc(pi a/2) g e^{u pi a/2} u
 *
 * Throws SingularParameterError when sin(pi a/2) == 0 (a an even integer).
 */
Field reconstruct_from_frac(const Field& f, const Field& g, double alpha, Family family,
                            const std::optional<PureUnitQuaternion>& u = std::nullopt);

struct LocalFeatures {
  std::vector<double> amplitude;
  // atan2(|Vec m|, Sc m) in [0, pi].
  std::vector<double> phase;
  // Vec m / |Vec m|; {0,0,0} where orientation_defined is 0.
  std::vector<std::array<double, 3>> orientation;
  std::vector<std::uint8_t> orientation_defined;
};

/**
 * Pointwise amplitude |m|, phase and orientation. Phase and orientation use
 * the real coefficients of m. Orientation is undefined where |Vec m| <=
 * 1e-12 * max amplitude.
 */
LocalFeatures local_features(const MonogenicSignal& m);

/// Dispatch for every TransformKind, including the monogenic ones.
Field apply(const TransformSpec& spec, const Field& f);

}  // namespace qriesz
