#include "qriesz/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qriesz/error.hpp"
#include "qriesz/io.hpp"
#include "qriesz/monogenic.hpp"
#include "qriesz/properties.hpp"
#include "qriesz/spectral.hpp"

namespace qriesz::cli {

namespace {

struct Loaded {
  Field field;
  std::uint32_t pgm_maxval = 0;  // 0 when the input was a PlaneFile
};

Loaded load_input(const std::filesystem::path& path) {
  const std::string bytes = io::read_file(path);
  if (bytes.rfind("P5", 0) == 0) {
    auto img = io::decode_pgm(bytes);
    return {io::pgm_to_field(img), img.maxval};
  }
  return {io::decode_plane_file(bytes).field, 0};
}

std::pair<std::size_t, std::size_t> image_extent(const GridShape& shape) {
  switch (shape.rank()) {
    case 1: return {1, shape.extent(0)};
    case 2: return {shape.extent(0), shape.extent(1)};
    default: return {shape.extent(0) * shape.extent(1), shape.extent(2)};
  }
}

void write_visualization(const std::filesystem::path& dir, const MonogenicSignal& m, std::uint32_t maxval) {
  const auto [h, w] = image_extent(m.field.shape());
  const auto feats = local_features(m);
  const std::size_t n = feats.amplitude.size();

  io::write_pgm(dir / "amplitude.pgm", io::normalize_minmax(feats.amplitude, h, w));

  std::vector<double> phase(n);
  for (std::size_t x = 0; x < n; ++x) phase[x] = feats.phase[x] / std::numbers::pi;
  io::write_pgm(dir / "phase.pgm", io::quantize(phase, h, w));

  std::vector<double> angle(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!feats.orientation_defined[x]) continue;
    const auto& o = feats.orientation[x];
    angle[x] = (std::atan2(o[1], o[0]) + std::numbers::pi) / (2.0 * std::numbers::pi);
  }
  io::write_pgm(dir / "orientation.pgm", io::quantize(angle, h, w));

  std::vector<double> scalar(n);
  for (std::size_t x = 0; x < n; ++x) scalar[x] = m.field[x].c[0].real();
  io::write_pgm(dir / "scalar.pgm", io::quantize(scalar, h, w, maxval == 0 ? 255 : maxval));
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw FormatError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::string format_axis(const PureUnitQuaternion& u) {
  std::ostringstream s;
  s << std::setprecision(17) << u.u1() << "," << u.u2() << "," << u.u3();
  return s.str();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PureUnitQuaternion parse_axis(const std::string& text) {
  std::array<double, 3> v{};
  std::stringstream ss(text);
  std::string part;
  std::size_t n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3) throw DomainError("--axis takes exactly three comma-separated numbers");
    std::size_t used = 0;
    try {
      v[n] = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw DomainError("--axis component '" + part + "' is not a number");
    ++n;
  }
  if (n != 3) throw DomainError("--axis takes exactly three comma-separated numbers");
  return PureUnitQuaternion::normalized(v[0], v[1], v[2]);
}

TransformKind parse_op(const std::string& op, Variant variant) {
  const bool plain = variant == Variant::kPlain;
  if (op == "identity") return TransformKind::kIdentity;
  if (op == "hilbert") return TransformKind::kHilbert;
  if (op == "pplus") return TransformKind::kPplus;
  if (op == "pminus") return TransformKind::kPminus;
  if (op == "frac") return plain ? TransformKind::kFracH : TransformKind::kFracScriptH;
  if (op == "frac-plain") return TransformKind::kFracH;
  if (op == "frac-script") return TransformKind::kFracScriptH;
  if (op == "qfrac") return plain ? TransformKind::kQFracH : TransformKind::kQFracScriptH;
  if (op == "qfrac-plain") return TransformKind::kQFracH;
  if (op == "qfrac-script") return TransformKind::kQFracScriptH;
  if (op == "monogenic") return TransformKind::kMonogenic;
  if (op == "frac-monogenic") return TransformKind::kFracMonogenic;
  if (op == "qfrac-monogenic") return TransformKind::kQFracMonogenic;
  throw DomainError("unknown --op '" + op + "'");
}

int cmd_transform(const RunConfig& config, std::ostream& out) {
  const TransformSpec spec{parse_op(config.op, config.variant), config.alpha, config.axis};
  spec.validate();
  const auto input = load_input(config.input);
  const Field result = apply(spec, input.field);

  ensure_dir(config.output);
  io::write_plane_file(config.output / "result.qfld", result);
  if (config.viz) write_visualization(config.output, MonogenicSignal{result, spec}, input.pgm_maxval);

  out << "op=" << to_string(spec.kind) << " alpha=" << fmt(spec.alpha);
  if (spec.axis) out << " axis=" << format_axis(*spec.axis);
  out << " planes=" << io::required_planes(result) << "\n";
  return kOk;
}

int cmd_reconstruct(const RunConfig& config, std::ostream& out) {
  if (config.op != "frac" && config.op != "qfrac") throw DomainError("reconstruct: --op must be frac or qfrac");
  const Family family = config.op == "qfrac" ? Family::kQFrac : Family::kFrac;
  if (family == Family::kQFrac && !config.axis) throw DomainError("reconstruct: --op qfrac requires --axis");
  if (quarter_turn(config.alpha).sin == 0.0) {
    throw SingularParameterError("reconstruct: alpha=" + fmt(config.alpha) +
                                 " is an even integer; csc(pi*alpha/2) is undefined");
  }
  const Field f = load_input(config.input).field;
  Field g = config.frac_input ? load_input(*config.frac_input).field
            : family == Family::kFrac ? frac_hilbert(f, config.alpha, Variant::kPlain)
                                      : qfrac_hilbert(f, config.alpha, *config.axis, Variant::kPlain);
  const Field m = reconstruct_from_frac(f, g, config.alpha, family, config.axis);
  ensure_dir(config.output);
  io::write_plane_file(config.output / "result.qfld", m);
  out << "reconstructed Mf from " << (family == Family::kFrac ? "H^alpha" : "H^{u alpha}")
      << " alpha=" << fmt(config.alpha);
  if (config.axis) out << " axis=" << format_axis(*config.axis);
  out << "\n";
  return kOk;
}

int cmd_props(const RunConfig& config, std::ostream& out) {
  if (config.list) {
    for (const auto& p : property_catalog()) {
      out << p.name << '\t' << p.group << '\t' << p.statement;
      if (p.needs_involution) out << "\t[no DC/Nyquist content]";
      out << '\n';
    }
    return kOk;
  }
  PropertyOptions options;
  options.seed = config.seed;
  options.strict_dc = config.strict_dc;
  if (config.axis) options.axis = *config.axis;

  const Field f = config.input.empty() ? random_real_field(GridShape(config.shape), config.seed)
                                       : load_input(config.input).field;
  out << "# source=" << (config.input.empty() ? "random" : config.input.string()) << " seed=" << config.seed
      << " axis=" << format_axis(options.axis) << " strict_dc=" << (config.strict_dc ? 1 : 0) << "\n";
  const auto results = run_properties(f, options);
  write_report(out, results);
  return all_passed(results) ? kOk : kPropertyFailure;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  const Field f = load_input(config.input).field;
  const auto spectrum = dft(f);
  std::vector<Biquaternion> mags(spectrum.size());
  for (std::size_t n = 0; n < mags.size(); ++n) {
    for (std::size_t c = 0; c < 4; ++c) mags[n].c[c] = std::abs(spectrum[n].c[c]);
  }
  ensure_dir(config.output);
  io::write_plane_file(config.output / "spectrum.qfld", Field(f.shape(), std::move(mags)), 4);

  if (config.dump_symbol) {
    const FrequencyGrid grid(f.shape());
    const auto& sym = riesz_symbol(grid);
    const std::size_t rank = f.shape().rank();
    std::ostringstream csv;
    for (std::size_t a = 0; a < rank; ++a) csv << "n" << a + 1 << ",";
    for (std::size_t a = 0; a < rank; ++a) csv << "xi" << a + 1 << ",";
    csv << "re0,im0,re1,im1,re2,im2,re3,im3\n";
    for (std::size_t bin = 0; bin < grid.size(); ++bin) {
      const auto idx = f.shape().unravel(bin);
      const auto xi = grid.frequency(bin);
      for (std::size_t a = 0; a < rank; ++a) csv << idx[a] << ",";
      for (std::size_t a = 0; a < rank; ++a) csv << fmt(xi[a]) << ",";
      for (std::size_t c = 0; c < 4; ++c) {
        csv << fmt(sym[bin].c[c].real()) << "," << fmt(sym[bin].c[c].imag()) << (c == 3 ? "\n" : ",");
      }
    }
    io::write_file(config.output / "symbol.csv", csv.str());
  }
  out << "bins=" << spectrum.size() << "\n";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riesz-Hilbert, fractional and monogenic transforms of quaternion fields", "qriesz"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string axis_text;
  std::string variant_text = "script";

  auto add_common = [&](CLI::App* sub, bool needs_output) {
    sub->add_option("--axis", axis_text, "rotation axis x,y,z (normalized)");
    sub->add_option("--alpha", cfg.alpha, "fractional order");
    sub->add_option("input", cfg.input, "input PGM (P5) or QFLD1 file")->required(needs_output);
    if (needs_output) sub->add_option("output", cfg.output, "output directory")->required();
  };

  auto* transform = app.add_subcommand("transform", "apply an operator and write result.qfld");
  add_common(transform, true);
  transform->add_option("--op", cfg.op, "identity|hilbert|pplus|pminus|frac[-plain|-script]|qfrac[-plain|-script]|"
                                         "monogenic|frac-monogenic|qfrac-monogenic");
  transform->add_option("--variant", variant_text, "plain|script")->check(CLI::IsMember({"plain", "script"}));
  transform->add_flag("--viz", cfg.viz, "also write amplitude/phase/orientation/scalar PGM maps");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover Mf from f and its fractional transform");
  add_common(reconstruct, true);
  reconstruct->add_option("--op", cfg.op, "frac|qfrac")->check(CLI::IsMember({"frac", "qfrac"}));
  std::string frac_path;
  reconstruct->add_option("--frac", frac_path, "precomputed H^alpha f (QFLD1); computed from input if absent");

  auto* props = app.add_subcommand("props", "run the operator identity suite");
  add_common(props, false);
  props->add_option("--seed", cfg.seed, "seed for random fields");
  props->add_option("--shape", cfg.shape, "shape of the random field when no input is given")->delimiter(',');
  props->add_flag("--strict-dc", cfg.strict_dc, "keep DC/Nyquist content; skip properties that need H^2 = I");
  props->add_flag("--list", cfg.list, "list properties and exit");

  auto* spectrum = app.add_subcommand("spectrum", "write per-component spectral magnitudes");
  add_common(spectrum, true);
  spectrum->add_flag("--dump-symbol", cfg.dump_symbol, "also write symbol.csv with the Riesz multiplier per bin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  cfg.variant = variant_text == "plain" ? Variant::kPlain : Variant::kScript;
  if (!frac_path.empty()) cfg.frac_input = frac_path;
  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();

  try {
    if (!axis_text.empty()) cfg.axis = parse_axis(axis_text);
    if (!std::isfinite(cfg.alpha)) throw DomainError("--alpha must be finite");
    if (cfg.command == "transform") {
      TransformSpec{parse_op(cfg.op, cfg.variant), cfg.alpha, cfg.axis}.validate();
    }
    if (cfg.command == "reconstruct") {
      if (reconstruct->count("--op") == 0) cfg.op = "frac";
      if (cfg.op == "qfrac" && !cfg.axis) throw DomainError("reconstruct --op qfrac requires --axis");
    }
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (cfg.command == "transform") return cmd_transform(cfg, out);
    if (cfg.command == "reconstruct") return cmd_reconstruct(cfg, out);
    if (cfg.command == "props") return cmd_props(cfg, out);
    return cmd_spectrum(cfg, out);
  } catch (const SingularParameterError& e) {
    err << "singular parameter: " << e.what() << "\n";
    return kSingular;
  } catch (const FormatError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const DomainError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  }
}

}  // namespace qriesz::cli
