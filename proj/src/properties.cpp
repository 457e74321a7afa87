#include "qriesz/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "qriesz/monogenic.hpp"
#include "qriesz/spectral.hpp"
#include "qriesz/transforms.hpp"

namespace qriesz {

namespace {

constexpr double kTol = 1e-11;
constexpr double kReconstructTol = 1e-10;
const Complex kI(0.0, 1.0);

double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

struct Context {
  Field q;   // general field under test
  Field g;   // random biquaternion partner
  Field r;   // real scalar field under test
  Field gr;  // real scalar partner, orthogonal to r
  PureUnitQuaternion axis;
  std::vector<std::pair<double, double>> pairs;  // (alpha, beta) for semigroup checks
};

struct Measure {
  double residual;
  double tolerance;
  bool at_least = false;  // pass iff residual > tolerance
};

double rel(const Field& a, const Field& b, double scale) { return norm2(subtract(a, b)) / scale; }

Field scaled(const Field& f, Complex a) { return scale(f, Biquaternion::scalar_value(a), Side::kLeft); }

// max_x |a(x) - b(x)| / max_x |ref(x)|
double pointwise_rel(const Field& a, const Field& b, const Field& ref) {
  double m = 0.0;
  for (const auto& s : ref.samples()) m = std::max(m, s.norm_sq());
  return max_pointwise_distance(a, b) / std::sqrt(m);
}

Measure shift_invariance(const Context& c) {
  std::vector<long> tau = {1, -2, 3};
  tau.resize(c.q.shape().rank());
  return {rel(hilbert(shift(c.q, tau)), shift(hilbert(c.q), tau), norm2(c.q)), kTol};
}

Measure involution(const Context& c) { return {rel(hilbert(hilbert(c.q)), c.q, norm2(c.q)), kTol}; }

Measure self_adjointness(const Context& c) {
  const auto d = inner(hilbert(c.q), c.g) - inner(c.q, hilbert(c.g));
  return {std::abs(d) / (norm2(c.q) * norm2(c.g)), kTol};
}

Measure energy(const Context& c) {
  const auto d = inner(hilbert(c.q), hilbert(c.g)) - inner(c.q, c.g);
  return {std::abs(d) / (norm2(c.q) * norm2(c.g)), kTol};
}

Measure orthogonality_1(const Context& c) {
  const double n = norm2(c.r);
  return {std::abs(inner(c.r, hilbert(c.r))) / (n * n), kTol};
}

Measure orthogonality_2(const Context& c) {
  return {std::abs(inner(hilbert(c.r), hilbert(c.gr))) / (norm2(c.r) * norm2(c.gr)), kTol};
}

Measure dft_round_trip(const Context& c) { return {rel(idft(dft(c.q)), c.q, norm2(c.q)), 1e-12}; }

Measure parseval(const Context& c) {
  const auto spatial = inner(c.q, c.g);
  const auto fq = dft(c.q);
  const auto fg = dft(c.g);
  Complex spectral{};
  for (std::size_t n = 0; n < fq.size(); ++n) spectral += scalar_inner(fq[n], fg[n]);
  spectral *= c.q.shape().cell_volume() / static_cast<double>(fq.size());
  return {std::abs(spatial - spectral) / (norm2(c.q) * norm2(c.g)), 1e-12};
}

Measure plemelj_sum(const Context& c) {
  const auto sum = add(hardy_project(c.q, HardySign::kPlus), hardy_project(c.q, HardySign::kMinus));
  return {rel(sum, c.q, norm2(c.q)), 1e-15};
}

Measure plemelj_difference(const Context& c) {
  const auto diff = subtract(hardy_project(c.q, HardySign::kPlus), hardy_project(c.q, HardySign::kMinus));
  return {rel(diff, hilbert(c.q), norm2(c.q)), kTol};
}

Measure hardy_idempotence(const Context& c) {
  double worst = 0.0;
  for (auto sign : {HardySign::kPlus, HardySign::kMinus}) {
    const auto p = hardy_project(c.q, sign);
    worst = std::max(worst, rel(hardy_project(p, sign), p, norm2(c.q)));
  }
  return {worst, kTol};
}

Measure frac_table(const Context& c) {
  const auto& f = c.q;
  const auto hf = hilbert(f);
  const double n = norm2(f);
  const std::vector<std::pair<Field, Field>> cases = {
      {frac_hilbert(f, 0, Variant::kScript), f},
      {frac_hilbert(f, 1, Variant::kScript), scaled(hf, kI)},
      {frac_hilbert(f, 2, Variant::kScript), scaled(f, -1.0)},
      {frac_hilbert(f, 3, Variant::kScript), scaled(hf, -kI)},
      {frac_hilbert(f, 4, Variant::kScript), f},
      {frac_hilbert(f, 0, Variant::kPlain), f},
      {frac_hilbert(f, 1, Variant::kPlain), hf},
      {frac_hilbert(f, 2, Variant::kPlain), f},
      {frac_hilbert(f, 3, Variant::kPlain), hf},
  };
  double worst = 0.0;
  for (const auto& [got, want] : cases) worst = std::max(worst, rel(got, want, n));
  return {worst, kTol};
}

Measure family_semigroup(const Context& c, Family family) {
  double worst = 0.0;
  for (auto variant : {Variant::kScript, Variant::kPlain}) {
    for (const auto& [a, b] : c.pairs) {
      worst = std::max(worst, semigroup_check(a, b, c.q, family, c.axis, variant));
    }
  }
  return {worst, kTol};
}

Field family_op(const Context& c, Family family, const Field& f, double alpha, Variant variant) {
  return family == Family::kFrac ? frac_hilbert(f, alpha, variant) : qfrac_hilbert(f, alpha, c.axis, variant);
}

Measure family_inverse(const Context& c, Family family) {
  double worst = 0.0;
  for (auto variant : {Variant::kScript, Variant::kPlain}) {
    for (double a : {0.37, 1.3}) {
      const auto back = family_op(c, family, family_op(c, family, c.q, -a, variant), a, variant);
      worst = std::max(worst, rel(back, c.q, norm2(c.q)));
    }
  }
  return {worst, kTol};
}

Measure family_periodicity(const Context& c, Family family) {
  double worst = 0.0;
  for (double a : {0.3, 0.5, 1.7}) {
    const auto plain = family_op(c, family, c.q, a, Variant::kPlain);
    const auto script = family_op(c, family, c.q, a, Variant::kScript);
    worst = std::max(worst, rel(family_op(c, family, c.q, a + 2, Variant::kPlain), plain, norm2(c.q)));
    worst = std::max(worst, rel(family_op(c, family, c.q, a + 4, Variant::kScript), script, norm2(c.q)));
  }
  return {worst, kTol};
}

Measure family_orthogonality(const Context& c, Family family) {
  double worst = 0.0;
  const double scale_ = norm2(c.r) * norm2(c.gr);
  for (auto variant : {Variant::kScript, Variant::kPlain}) {
    for (double a : {0.3, 0.5, 1.7}) {
      const auto v = inner(family_op(c, family, c.r, a, variant), family_op(c, family, c.gr, a, variant));
      worst = std::max(worst, std::abs(v) / scale_);
    }
  }
  return {worst, kTol};
}

Measure family_continuity(const Context& c, Family family) {
  constexpr double a = 1e-6;
  const auto [co, si] = quarter_turn(a);
  const double bound = (std::abs(co - 1.0) + std::abs(si)) * 1.01;
  return {rel(family_op(c, family, c.q, a, Variant::kScript), c.q, norm2(c.q)), bound};
}

Measure monogenic_membership(const Context& c) {
  const auto m = monogenic(c.r).field;
  return {rel(hilbert(m), m, norm2(m)), kReconstructTol};
}

Measure frac_monogenic_proportionality(const Context& c) {
  const auto m = monogenic(c.r).field;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0, 1.5}) {
    const auto [co, si] = quarter_turn(a);
    const auto expected = scaled(m, -kI * si * Complex(co, si));
    worst = std::max(worst, pointwise_rel(frac_monogenic(c.r, a).field, expected, m));
  }
  return {worst, kTol};
}

Measure qfrac_monogenic_proportionality(const Context& c) {
  const auto m = monogenic(c.r).field;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0, 1.5}) {
    const auto expected = right_mul(m, qfrac_monogenic_factor(a, c.axis));
    worst = std::max(worst, pointwise_rel(qfrac_monogenic(c.r, a, c.axis).field, expected, m));
  }
  return {worst, kTol};
}

Measure monogenic_norm_law(const Context& c) {
  const double nm = norm2(monogenic(c.r).field);
  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0, 1.5}) {
    const double s = std::abs(quarter_turn(a).sin);
    worst = std::max(worst, std::abs(norm2(frac_monogenic(c.r, a).field) - s * nm) / nm);
    worst = std::max(worst, std::abs(norm2(qfrac_monogenic(c.r, a, c.axis).field) - s * nm) / nm);
  }
  return {worst, kTol};
}

Measure monogenic_periodicity(const Context& c) {
  const double nm = norm2(monogenic(c.r).field);
  double worst = 0.0;
  for (double a : {0.3, 0.5, 1.7}) {
    worst = std::max(worst, rel(frac_monogenic(c.r, a + 2).field, frac_monogenic(c.r, a).field, nm));
    worst = std::max(worst,
                     rel(qfrac_monogenic(c.r, a + 2, c.axis).field, qfrac_monogenic(c.r, a, c.axis).field, nm));
  }
  return {worst, kTol};
}

Measure reconstruction(const Context& c) {
  const auto m = monogenic(c.r).field;
  double worst = 0.0;
  for (double a : {0.3, 0.7, 1.0}) {
    const auto g = frac_hilbert(c.r, a, Variant::kPlain);
    worst = std::max(worst, rel(reconstruct_from_frac(c.r, g, a, Family::kFrac), m, norm2(m)));
    const auto gq = qfrac_hilbert(c.r, a, c.axis, Variant::kPlain);
    worst = std::max(worst, rel(reconstruct_from_frac(c.r, gq, a, Family::kQFrac, c.axis), m, norm2(m)));
  }
  return {worst, kReconstructTol};
}

Measure non_orthogonality(const Context& c) {
  const double n = norm2(c.r);
  double weakest = INFINITY;
  for (double a : {0.5, 1.5}) {
    weakest = std::min(weakest, std::abs(inner(c.r, frac_monogenic(c.r, a).field)) / (n * n));
  }
  return {weakest, 1e-6, true};
}

struct Entry {
  PropertyInfo info;
  bool needs_real;
  Measure (*measure)(const Context&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"dft_round_trip", "spectral", "idft(dft f) = f", false}, false, dft_round_trip},
      {{"parseval", "spectral", "<f,g> = <dft f, dft g>/N", false}, false, parseval},
      {{"shift_invariance", "riesz", "H(shift f) = shift(Hf)", false}, false, shift_invariance},
      {{"involution", "riesz", "H(Hf) = f", true}, false, involution},
      {{"self_adjointness", "riesz", "<Hf,g> = <f,Hg>", false}, false, self_adjointness},
      {{"energy", "riesz", "<Hf,Hg> = <f,g>", true}, false, energy},
      {{"orthogonality_1", "riesz", "<f,Hf> = 0 for real f", false}, true, orthogonality_1},
      {{"orthogonality_2", "riesz", "f ⊥ g real => Hf ⊥ Hg", true}, true, orthogonality_2},
      {{"plemelj_sum", "hardy", "P+ f + P- f = f", false}, false, plemelj_sum},
      {{"plemelj_difference", "hardy", "P+ f - P- f = Hf", false}, false, plemelj_difference},
      {{"hardy_idempotence", "hardy", "P±(P± f) = P± f", true}, false, hardy_idempotence},
      {{"frac_table", "fractional", "script H^0..4 = I, iH, -I, -iH, I; H^1..3 = H, I, H", false}, false,
       frac_table},
      {{"frac_semigroup", "fractional", "T^a T^b = T^(a+b)", true}, false,
       [](const Context& c) { return family_semigroup(c, Family::kFrac); }},
      {{"frac_inverse", "fractional", "T^a T^-a = I", true}, false,
       [](const Context& c) { return family_inverse(c, Family::kFrac); }},
      {{"frac_periodicity", "fractional", "H^(a+2) = H^a, script H^(a+4) = script H^a", false}, false,
       [](const Context& c) { return family_periodicity(c, Family::kFrac); }},
      {{"frac_orthogonality", "fractional", "f ⊥ g real => T^a f ⊥ T^a g", true}, true,
       [](const Context& c) { return family_orthogonality(c, Family::kFrac); }},
      {{"frac_continuity", "fractional", "||T^a f - f|| <= (|cos-1|+|sin|)||f|| at a=1e-6", false}, false,
       [](const Context& c) { return family_continuity(c, Family::kFrac); }},
      {{"qfrac_semigroup", "quaternionic", "T^a T^b = T^(a+b)", true}, false,
       [](const Context& c) { return family_semigroup(c, Family::kQFrac); }},
      {{"qfrac_inverse", "quaternionic", "T^a T^-a = I", true}, false,
       [](const Context& c) { return family_inverse(c, Family::kQFrac); }},
      {{"qfrac_periodicity", "quaternionic", "H^u(a+2) = H^ua, script H^u(a+4) = script H^ua", false}, false,
       [](const Context& c) { return family_periodicity(c, Family::kQFrac); }},
      {{"qfrac_orthogonality", "quaternionic", "f ⊥ g real => T^a f ⊥ T^a g", true}, true,
       [](const Context& c) { return family_orthogonality(c, Family::kQFrac); }},
      {{"qfrac_continuity", "quaternionic", "||T^a f - f|| <= (|cos-1|+|sin|)||f|| at a=1e-6", false}, false,
       [](const Context& c) { return family_continuity(c, Family::kQFrac); }},
      {{"monogenic_membership", "monogenic", "H(Mf) = Mf", true}, true, monogenic_membership},
      {{"frac_monogenic_proportionality", "monogenic", "M^a f = -i sin e^{i pi a/2} Mf", false}, true,
       frac_monogenic_proportionality},
      {{"qfrac_monogenic_proportionality", "monogenic", "M^ua f = (Mf)(s^2 - s c u)", false}, true,
       qfrac_monogenic_proportionality},
      {{"monogenic_norm_law", "monogenic", "||M^a f|| = |sin(pi a/2)| ||Mf||", false}, true, monogenic_norm_law},
      {{"monogenic_periodicity", "monogenic", "M^(a+2) = M^a", false}, true, monogenic_periodicity},
      {{"reconstruction", "monogenic", "Mf recovered from f and H^a f", false}, true, reconstruction},
      {{"non_orthogonality", "monogenic", "|<f, M^a f>| > 1e-6 ||f||^2", false}, true, non_orthogonality},
  };
  return table;
}

Field real_scalar_part(const Field& f) {
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n].c[0] = f[n].c[0].real();
  return {f.shape(), std::move(out)};
}

}  // namespace

Field random_real_field(const GridShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(shape.size());
  for (auto& x : v) x = to_unit(rng());
  return Field::from_real(shape, v);
}

Field random_biquaternion_field(const GridShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Biquaternion> s(shape.size());
  for (auto& q : s) {
    for (auto& c : q.c) {
      const double re = to_unit(rng());
      c = Complex(re, to_unit(rng()));
    }
  }
  return {shape, std::move(s)};
}

const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> catalog = [] {
    std::vector<PropertyInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

std::vector<PropertyResult> run_properties(const Field& input, const PropertyOptions& options) {
  const auto& shape = input.shape();
  Field q = options.strict_dc ? input : strip_self_conjugate(input);
  Field r = real_scalar_part(input);
  if (!options.strict_dc) r = strip_self_conjugate(r);

  auto has_self_conjugate_content = [](const Field& f) {
    const double n = norm2(f);
    return n > 0.0 && norm2(subtract(f, strip_self_conjugate(f))) > 1e-12 * n;
  };
  const bool dc_blocked = options.strict_dc && (has_self_conjugate_content(q) || has_self_conjugate_content(r));

  Field g = strip_self_conjugate(random_biquaternion_field(shape, options.seed + 1));
  Field gr = strip_self_conjugate(random_real_field(shape, options.seed + 2));
  const double rr = norm2(r);
  if (rr > 0.0) {
    const double proj = inner(r, gr).real() / (rr * rr);
    gr = real_part(subtract(gr, scale(r, Biquaternion::scalar_value(proj), Side::kLeft)));
  }

  std::mt19937_64 rng(options.seed + 3);
  std::vector<std::pair<double, double>> pairs;
  for (int n = 0; n < 5; ++n) {
    const double a = 2.0 * to_unit(rng());
    pairs.emplace_back(a, 2.0 * to_unit(rng()));
  }
  const Context ctx{q, g, r, gr, options.axis, pairs};

  std::vector<PropertyResult> results;
  for (const auto& e : entries()) {
    PropertyResult res{e.info.name, 0.0, 0.0, PropertyStatus::kSkip, ""};
    if (e.info.needs_involution && dc_blocked) {
      res.reason = "input has DC/Nyquist content (strict-dc); H^2 = I holds only without it";
    } else if (norm2(q) == 0.0) {
      res.reason = "field is zero after removing DC/Nyquist content";
    } else if (e.needs_real && rr == 0.0) {
      res.reason = "real scalar part is zero";
    } else {
      const Measure m = e.measure(ctx);
      res.residual = m.residual;
      res.tolerance = m.tolerance;
      const bool ok = m.at_least ? m.residual > m.tolerance : m.residual <= m.tolerance;
      res.status = ok ? PropertyStatus::kPass : PropertyStatus::kFail;
    }
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const PropertyResult& r) { return r.status == PropertyStatus::kFail; });
}

std::string_view to_string(PropertyStatus status) {
  switch (status) {
    case PropertyStatus::kPass: return "PASS";
    case PropertyStatus::kFail: return "FAIL";
    case PropertyStatus::kSkip: return "SKIP";
  }
  return "?";
}

void write_report(std::ostream& out, const std::vector<PropertyResult>& results) {
  out << "# property\tresidual\ttolerance\tstatus\treason\n";
  char buf[64];
  for (const auto& r : results) {
    out << r.name << '\t';
    std::snprintf(buf, sizeof(buf), "%.3e\t%.3e", r.residual, r.tolerance);
    out << buf << '\t' << to_string(r.status);
    if (!r.reason.empty()) out << '\t' << r.reason;
    out << '\n';
  }
}

}  // namespace qriesz
