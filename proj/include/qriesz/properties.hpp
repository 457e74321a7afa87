#pragma once

/**
 * Operator identity suite run by `qriesz props`: each property is evaluated on
 * an input field (or a seeded random one) and reported with its residual and
 * tolerance.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qriesz/field.hpp"

namespace qriesz {

enum class PropertyStatus { kPass, kFail, kSkip };

struct PropertyInfo {
  std::string name;
  std::string group;  // riesz | hardy | fractional | quaternionic | monogenic
  std::string statement;
  // Relies on H^2 = I, i.e. on the absence of DC / Nyquist content.
  bool needs_involution = false;
};

struct PropertyResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  PropertyStatus status = PropertyStatus::kSkip;
  std::string reason;
};

struct PropertyOptions {
  std::uint64_t seed = 20240607;
  // Keep DC / Nyquist content of the input; involution-based properties are
  // then skipped when such content is present.
  bool strict_dc = false;
  PureUnitQuaternion axis = PureUnitQuaternion::normalized(1, 1, 0);
};

const std::vector<PropertyInfo>& property_catalog();

std::vector<PropertyResult> run_properties(const Field& input, const PropertyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);  // skips count as passed
void write_report(std::ostream& out, const std::vector<PropertyResult>& results);
std::string_view to_string(PropertyStatus status);

/// Uniform [-1, 1) real scalar samples from a 64-bit Mersenne twister; bit-stable across platforms.
Field random_real_field(const GridShape& shape, std::uint64_t seed);
/// Random field with independent real and imaginary parts in every coefficient.
Field random_biquaternion_field(const GridShape& shape, std::uint64_t seed);

}  // namespace qriesz
