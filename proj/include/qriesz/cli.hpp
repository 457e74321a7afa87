#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qriesz/transforms.hpp"

namespace qriesz::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kData = 3,
  kSingular = 4,
  kPropertyFailure = 1,
};

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::filesystem::path output;
  std::string op = "hilbert";
  double alpha = 0.0;
  std::optional<PureUnitQuaternion> axis;  // normalized on load
  Variant variant = Variant::kScript;
  bool viz = false;
  bool strict_dc = false;
  bool list = false;
  bool dump_symbol = false;
  std::uint64_t seed = 20240607;
  std::vector<std::size_t> shape = {16, 16};
  std::optional<std::filesystem::path> frac_input;
};

// "0,0,1" -> normalized axis; throws DomainError for malformed or zero vectors.
PureUnitQuaternion parse_axis(const std::string& text);
// Maps --op (and --variant for the bare "frac"/"qfrac" names) to a kind.
TransformKind parse_op(const std::string& op, Variant variant);

int cmd_transform(const RunConfig& config, std::ostream& out);
int cmd_props(const RunConfig& config, std::ostream& out);
int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_reconstruct(const RunConfig& config, std::ostream& out);

/// Parses argv (without the program name) and runs the command; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qriesz::cli
