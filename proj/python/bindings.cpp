#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "qriesz/error.hpp"
#include "qriesz/monogenic.hpp"
#include "qriesz/spectral.hpp"
#include "qriesz/transforms.hpp"

namespace py = pybind11;
using namespace qriesz;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

// Arrays of shape dims are real scalar fields; a trailing axis of length 4
// holds the coefficients of 1, i, j, k.
Field to_field(const py::array& input, bool quaternion_axis) {
  CArray a = CArray::ensure(input);
  if (!a) throw py::type_error("expected a numeric array");
  std::vector<std::size_t> dims(a.shape(), a.shape() + a.ndim());
  if (quaternion_axis) {
    if (dims.empty() || dims.back() != 4) throw DomainError("last axis must have length 4");
    dims.pop_back();
  }
  const GridShape shape(dims);
  std::vector<Biquaternion> samples(shape.size());
  const auto* data = a.data();
  for (std::size_t n = 0; n < samples.size(); ++n) {
    if (quaternion_axis) {
      for (int c = 0; c < 4; ++c) samples[n].c[c] = data[4 * n + c];
    } else {
      samples[n].c[0] = data[n];
    }
  }
  return Field(shape, std::move(samples));
}

// A trailing axis of length 4 on an array of rank 2..4 is read as the
// quaternion axis; anything else is a real or complex scalar field.
Field as_field(const py::array& input) {
  const bool quaternion_axis = input.ndim() >= 2 && input.ndim() <= 4 && input.shape(input.ndim() - 1) == 4;
  return to_field(input, quaternion_axis);
}

CArray from_samples(const GridShape& shape, std::span<const Biquaternion> samples) {
  std::vector<py::ssize_t> dims(shape.dims().begin(), shape.dims().end());
  dims.push_back(4);
  CArray out(dims);
  auto* data = out.mutable_data();
  for (std::size_t n = 0; n < samples.size(); ++n) {
    for (int c = 0; c < 4; ++c) data[4 * n + c] = samples[n].c[c];
  }
  return out;
}

CArray from_field(const Field& f) { return from_samples(f.shape(), f.samples()); }

std::optional<PureUnitQuaternion> to_axis(const std::optional<std::array<double, 3>>& axis) {
  if (!axis) return std::nullopt;
  return PureUnitQuaternion::normalized((*axis)[0], (*axis)[1], (*axis)[2]);
}

PureUnitQuaternion require_axis(const std::array<double, 3>& axis) {
  return PureUnitQuaternion::normalized(axis[0], axis[1], axis[2]);
}

Variant to_variant(const std::string& v) {
  if (v == "plain") return Variant::kPlain;
  if (v == "script") return Variant::kScript;
  throw DomainError("variant must be 'plain' or 'script'");
}

}  // namespace

PYBIND11_MODULE(_qriesz, m) {
  m.doc() = "Riesz-Hilbert, fractional and monogenic transforms on periodic grids";

  // Translators registered later take precedence, so the base class goes first.
  const auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SingularParameterError>(m, "SingularParameterError", domain.ptr());
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  m.def("dft", [](const py::array& f) {
    const auto s = dft(as_field(f));
    return from_samples(s.shape(), s.samples());
  }, py::arg("field"));
  m.def("idft", [](const py::array& f) {
    const Field spec = as_field(f);
    return from_field(idft(SpectralField(spec.shape(), {spec.samples().begin(), spec.samples().end()})));
  }, py::arg("spectrum"));
  m.def("riesz_symbol", [](std::vector<std::size_t> dims) {
    const auto& s = riesz_symbol(FrequencyGrid(GridShape(dims)));
    return from_samples(s.shape(), s.values());
  }, py::arg("shape"));
  m.def("strip_self_conjugate", [](const py::array& f) { return from_field(strip_self_conjugate(as_field(f))); });

  m.def("hilbert", [](const py::array& f) { return from_field(hilbert(as_field(f))); }, py::arg("field"));
  m.def("hardy_project", [](const py::array& f, const std::string& sign) {
    if (sign != "+" && sign != "-") throw DomainError("sign must be '+' or '-'");
    return from_field(hardy_project(as_field(f), sign == "+" ? HardySign::kPlus : HardySign::kMinus));
  }, py::arg("field"), py::arg("sign") = "+");
  m.def("frac_hilbert", [](const py::array& f, double alpha, const std::string& variant) {
    return from_field(frac_hilbert(as_field(f), alpha, to_variant(variant)));
  }, py::arg("field"), py::arg("alpha"), py::arg("variant") = "script");
  m.def("qfrac_hilbert", [](const py::array& f, double alpha, const std::array<double, 3>& axis,
                            const std::string& variant) {
    return from_field(qfrac_hilbert(as_field(f), alpha, require_axis(axis), to_variant(variant)));
  }, py::arg("field"), py::arg("alpha"), py::arg("axis"), py::arg("variant") = "script");

  m.def("monogenic", [](const py::array& f) { return from_field(monogenic(as_field(f)).field); });
  m.def("frac_monogenic", [](const py::array& f, double alpha) {
    return from_field(frac_monogenic(as_field(f), alpha).field);
  }, py::arg("field"), py::arg("alpha"));
  m.def("qfrac_monogenic", [](const py::array& f, double alpha, const std::array<double, 3>& axis) {
    return from_field(qfrac_monogenic(as_field(f), alpha, require_axis(axis)).field);
  }, py::arg("field"), py::arg("alpha"), py::arg("axis"));
  m.def("reconstruct", [](const py::array& f, const py::array& g, double alpha,
                          const std::optional<std::array<double, 3>>& axis) {
    const auto u = to_axis(axis);
    return from_field(reconstruct_from_frac(as_field(f), as_field(g), alpha, u ? Family::kQFrac : Family::kFrac, u));
  }, py::arg("field"), py::arg("transformed"), py::arg("alpha"), py::arg("axis") = py::none(),
     "Recover the monogenic signal from f and its plain fractional transform (quaternionic when axis is given).");

  m.def("local_features", [](const py::array& f) {
    const Field field = as_field(f);
    const auto feat = local_features(MonogenicSignal{field, {TransformKind::kMonogenic, 0.0, std::nullopt}});
    std::vector<py::ssize_t> dims(field.shape().dims().begin(), field.shape().dims().end());
    py::array_t<double> amp(dims), phase(dims);
    auto orient_dims = dims;
    orient_dims.push_back(3);
    py::array_t<double> orient(orient_dims);
    py::array_t<bool> defined(dims);
    for (std::size_t n = 0; n < field.size(); ++n) {
      amp.mutable_data()[n] = feat.amplitude[n];
      phase.mutable_data()[n] = feat.phase[n];
      for (int c = 0; c < 3; ++c) orient.mutable_data()[3 * n + c] = feat.orientation[n][c];
      defined.mutable_data()[n] = feat.orientation_defined[n] != 0;
    }
    py::dict out;
    out["amplitude"] = amp;
    out["phase"] = phase;
    out["orientation"] = orient;
    out["orientation_defined"] = defined;
    return out;
  }, py::arg("monogenic_signal"));

  m.def("inner", [](const py::array& f, const py::array& g) { return inner(as_field(f), as_field(g)); });
}
