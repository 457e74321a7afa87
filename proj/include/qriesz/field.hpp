#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qriesz/quaternion.hpp"

namespace qriesz {

/**
 * Extents and sample spacing of a periodic grid of rank 1, 2 or 3.
 *
 * The rank selects the quaternionic frequency units: rank 1 uses i, rank 2
 * uses i and j, rank 3 uses i, j and k. Every extent must be at least 2.
 */
class GridShape {
 public:
  explicit GridShape(std::vector<std::size_t> dims);
  GridShape(std::vector<std::size_t> dims, std::vector<double> spacing);

  std::size_t rank() const { return dims_.size(); }
  std::size_t extent(std::size_t axis) const { return dims_[axis]; }
  double spacing(std::size_t axis) const { return spacing_[axis]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<double>& spacings() const { return spacing_; }
  std::size_t size() const { return size_; }
  // Riemann-sum weight per sample.
  double cell_volume() const;

  // Row-major: the last axis varies fastest.
  std::size_t linear_index(std::span<const std::size_t> index) const;
  std::array<std::size_t, 3> unravel(std::size_t linear) const;

  bool operator==(const GridShape&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> spacing_;
  std::size_t size_ = 0;
};

enum class Side { kLeft, kRight };

/// Biquaternion samples on a GridShape, row-major. Immutable after construction.
class Field {
 public:
  Field(GridShape shape, std::vector<Biquaternion> samples);
  static Field zeros(const GridShape& shape);
  // Real scalar field from real samples.
  static Field from_real(const GridShape& shape, std::span<const double> values);

  const GridShape& shape() const { return shape_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const Biquaternion> samples() const { return samples_; }
  const Biquaternion& operator[](std::size_t n) const { return samples_[n]; }

  // Every sample has zero i, j, k parts and zero imaginary parts.
  bool is_real_scalar() const;
  // Every coefficient is real (quaternion-valued field).
  bool is_real_quaternion() const;

 private:
  GridShape shape_;
  std::vector<Biquaternion> samples_;
};

/// Discrete L2 inner product  sum_x Sc(conj_ch(f(x)) g(x)) * cell volume.
std::complex<double> inner(const Field& f, const Field& g);
double norm2(const Field& f);

Field scale(const Field& f, const Biquaternion& c, Side side);
Field add(const Field& f, const Field& g);
Field subtract(const Field& f, const Field& g);
/// Right multiplication of every sample by q.
Field right_mul(const Field& f, const Quaternion& q);

/// Cyclic translation: out(x) = f(x - offset), offsets taken modulo the extents.
Field shift(const Field& f, std::span<const long> offsets);

/// Subtracts the per-component arithmetic mean.
Field zero_mean(const Field& f);

// Largest |imag| over all coefficients.
double max_abs_imag(const Field& f);
// Drops imaginary parts.
Field real_part(const Field& f);
// max over samples of |f(x) - g(x)| (C^4 length), relative comparisons are left to callers.
double max_pointwise_distance(const Field& f, const Field& g);

}  // namespace qriesz
