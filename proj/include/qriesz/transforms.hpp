#pragma once

/**
 * Riesz-Hilbert transform H and the operator families built from it:
 *
 *   P+/- f            = (f +/- Hf) / 2
 *   script H^a f      = cos(pi a/2) f + i sin(pi a/2) Hf          (i central)
 *   H^a f             = e^{-i pi a/2} script H^a f
 *   script H^{u a} f  = cos(pi a/2) f + sin(pi a/2) (Hf) u
 *   H^{u a} f         = (script H^{u a} f) e^{-u pi a/2}
 *
 * H has multiplier i xi/|xi| (see riesz_symbol). Because that multiplier is 0
 * on self-conjugate bins, identities that rely on H^2 = I hold on fields with
 * no content there (strip_self_conjugate), in particular not on the mean.
 */

#include <optional>
#include <string>
#include <string_view>

#include "qriesz/field.hpp"

namespace qriesz {

enum class Variant { kPlain, kScript };
enum class HardySign { kPlus, kMinus };
enum class Family { kFrac, kQFrac };

enum class TransformKind {
  kIdentity,
  kHilbert,
  kPplus,
  kPminus,
  kFracH,
  kFracScriptH,
  kQFracH,
  kQFracScriptH,
  kMonogenic,
  kFracMonogenic,
  kQFracMonogenic,
};

std::string_view to_string(TransformKind kind);
bool requires_axis(TransformKind kind);

struct TransformSpec {
  TransformKind kind = TransformKind::kHilbert;
  double alpha = 0.0;
  std::optional<PureUnitQuaternion> axis;

  // Throws DomainError for non-finite alpha or a missing axis on quaternionic kinds.
  void validate() const;
};

// cos(pi a/2) and sin(pi a/2), exact (0, +/-1) at integer a.
struct QuarterTurn {
  double cos;
  double sin;
};
QuarterTurn quarter_turn(double alpha);

Field hilbert(const Field& f);
Field hardy_project(const Field& f, HardySign sign);
Field frac_hilbert(const Field& f, double alpha, Variant variant);
Field qfrac_hilbert(const Field& f, double alpha, const PureUnitQuaternion& u, Variant variant);

// Operator-form application for the non-monogenic kinds (monogenic kinds: see monogenic.hpp).
Field apply_operator(const TransformSpec& spec, const Field& f);

/**
 * ||T^a(T^b f) - T^{a+b} f|| / ||f|| for the chosen family and variant.
 * Expects f without self-conjugate content; returns 0 for f == 0.
 */
double semigroup_check(double alpha, double beta, const Field& f, Family family,
                       const std::optional<PureUnitQuaternion>& u = std::nullopt,
                       Variant variant = Variant::kScript);

}  // namespace qriesz
