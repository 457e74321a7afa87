#include "qriesz/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qriesz/error.hpp"

namespace qriesz {

namespace {

void require_same_shape(const Field& f, const Field& g, const char* op) {
  if (!(f.shape() == g.shape())) throw DomainError(std::string(op) + ": shape mismatch");
}

}  // namespace

GridShape::GridShape(std::vector<std::size_t> dims)
    : GridShape(dims, std::vector<double>(dims.size(), 1.0)) {}

GridShape::GridShape(std::vector<std::size_t> dims, std::vector<double> spacing)
    : dims_(std::move(dims)), spacing_(std::move(spacing)) {
  if (dims_.empty() || dims_.size() > 3) {
    throw DomainError("grid rank must be 1, 2 or 3");
  }
  if (spacing_.size() != dims_.size()) throw DomainError("one spacing per axis is required");
  size_ = 1;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a] < 2) {
      std::ostringstream msg;
      msg << "grid extent along axis " << a << " is " << dims_[a] << " (minimum 2)";
      throw DomainError(msg.str());
    }
    if (!(spacing_[a] > 0.0) || !std::isfinite(spacing_[a])) {
      throw DomainError("grid spacing must be positive and finite");
    }
    size_ *= dims_[a];
  }
}

double GridShape::cell_volume() const {
  double v = 1.0;
  for (double h : spacing_) v *= h;
  return v;
}

std::size_t GridShape::linear_index(std::span<const std::size_t> index) const {
  std::size_t n = 0;
  for (std::size_t a = 0; a < dims_.size(); ++a) n = n * dims_[a] + index[a];
  return n;
}

std::array<std::size_t, 3> GridShape::unravel(std::size_t linear) const {
  std::array<std::size_t, 3> idx{0, 0, 0};
  for (std::size_t a = dims_.size(); a-- > 0;) {
    idx[a] = linear % dims_[a];
    linear /= dims_[a];
  }
  return idx;
}

Field::Field(GridShape shape, std::vector<Biquaternion> samples)
    : shape_(std::move(shape)), samples_(std::move(samples)) {
  if (samples_.size() != shape_.size()) {
    std::ostringstream msg;
    msg << "field has " << samples_.size() << " samples but the grid needs " << shape_.size();
    throw DomainError(msg.str());
  }
}

Field Field::zeros(const GridShape& shape) { return {shape, std::vector<Biquaternion>(shape.size())}; }

Field Field::from_real(const GridShape& shape, std::span<const double> values) {
  if (values.size() != shape.size()) throw DomainError("from_real: sample count mismatch");
  std::vector<Biquaternion> s(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) s[n].c[0] = values[n];
  return {shape, std::move(s)};
}

bool Field::is_real_scalar() const {
  return std::all_of(samples_.begin(), samples_.end(), [](const Biquaternion& q) {
    return q.c[0].imag() == 0.0 && q.c[1] == Complex{} && q.c[2] == Complex{} && q.c[3] == Complex{};
  });
}

bool Field::is_real_quaternion() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](const Biquaternion& q) { return q.imag() == Quaternion{}; });
}

std::complex<double> inner(const Field& f, const Field& g) {
  require_same_shape(f, g, "inner");
  std::complex<double> acc{};
  for (std::size_t n = 0; n < f.size(); ++n) acc += scalar_inner(f[n], g[n]);
  return acc * f.shape().cell_volume();
}

double norm2(const Field& f) {
  double acc = 0.0;
  for (const auto& q : f.samples()) acc += q.norm_sq();
  return std::sqrt(acc * f.shape().cell_volume());
}

Field scale(const Field& f, const Biquaternion& c, Side side) {
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = side == Side::kLeft ? c * f[n] : f[n] * c;
  return {f.shape(), std::move(out)};
}

Field add(const Field& f, const Field& g) {
  require_same_shape(f, g, "add");
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] + g[n];
  return {f.shape(), std::move(out)};
}

Field subtract(const Field& f, const Field& g) {
  require_same_shape(f, g, "subtract");
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] - g[n];
  return {f.shape(), std::move(out)};
}

Field right_mul(const Field& f, const Quaternion& q) { return scale(f, Biquaternion(q), Side::kRight); }

Field shift(const Field& f, std::span<const long> offsets) {
  const auto& shape = f.shape();
  if (offsets.size() != shape.rank()) throw DomainError("shift: one offset per axis is required");
  std::array<std::size_t, 3> off{0, 0, 0};
  for (std::size_t a = 0; a < shape.rank(); ++a) {
    const auto n = static_cast<long>(shape.extent(a));
    off[a] = static_cast<std::size_t>(((offsets[a] % n) + n) % n);
  }
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    auto idx = shape.unravel(n);
    for (std::size_t a = 0; a < shape.rank(); ++a) idx[a] = (idx[a] + off[a]) % shape.extent(a);
    out[shape.linear_index(std::span(idx.data(), shape.rank()))] = f[n];
  }
  return {shape, std::move(out)};
}

Field zero_mean(const Field& f) {
  Biquaternion mean;
  for (const auto& q : f.samples()) mean += q;
  mean = mean * Complex(1.0 / static_cast<double>(f.size()));
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = f[n] - mean;
  return {f.shape(), std::move(out)};
}

double max_abs_imag(const Field& f) {
  double m = 0.0;
  for (const auto& q : f.samples()) {
    for (const auto& c : q.c) m = std::max(m, std::abs(c.imag()));
  }
  return m;
}

Field real_part(const Field& f) {
  std::vector<Biquaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) out[n] = Biquaternion(f[n].real());
  return {f.shape(), std::move(out)};
}

double max_pointwise_distance(const Field& f, const Field& g) {
  require_same_shape(f, g, "max_pointwise_distance");
  double m = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) m = std::max(m, (f[n] - g[n]).norm_sq());
  return std::sqrt(m);
}

}  // namespace qriesz
