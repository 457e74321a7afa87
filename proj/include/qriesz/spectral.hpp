#pragma once

/**
 * Discrete Fourier transform of biquaternion fields and left/right acting
 * Fourier multipliers.
 *
 * Convention: the forward transform is unnormalized with kernel
 * exp(-2 pi i k.x / N) and the inverse carries 1/prod(N). Both act
 * component-wise on the four complex coefficients, using the central complex
 * unit.
 *
 * Frequencies: bin index n along an axis of extent N maps to the signed index
 * k in {-floor(N/2), ..., ceil(N/2)-1}, scaled by 1/(N * spacing).
 */

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qriesz/field.hpp"

namespace qriesz {

class FrequencyGrid {
 public:
  explicit FrequencyGrid(GridShape shape) : shape_(std::move(shape)) {}

  const GridShape& shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }

  long signed_index(std::size_t axis, std::size_t n) const;
  // Signed frequency vector of a bin, zero-padded to three components.
  std::array<double, 3> frequency(std::size_t bin) const;
  // Bin holding -xi (mod the grid).
  std::size_t negated_bin(std::size_t bin) const;
  // Every signed index is 0 or -N/2, i.e. negated_bin(bin) == bin.
  bool is_self_conjugate(std::size_t bin) const;
  // Along an even axis, index N/2 is the unpaired Nyquist line.
  bool is_nyquist(std::size_t axis, std::size_t n) const;

 private:
  GridShape shape_;
};

class SpectralField {
 public:
  SpectralField(GridShape shape, std::vector<Biquaternion> samples);

  const GridShape& shape() const { return shape_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const Biquaternion> samples() const { return samples_; }
  const Biquaternion& operator[](std::size_t n) const { return samples_[n]; }

 private:
  GridShape shape_;
  std::vector<Biquaternion> samples_;
};

enum class SymbolParity {
  // S(-xi) = conj_c(S(xi)) on every bin; maps real-coefficient fields to
  // real-coefficient fields.
  kHermitian,
  kNone,
};

/// A Fourier multiplier tabulated on every bin of a grid.
class Symbol {
 public:
  Symbol(std::string name, GridShape shape, std::vector<Biquaternion> values, SymbolParity parity);

  const std::string& name() const { return name_; }
  const GridShape& shape() const { return shape_; }
  SymbolParity parity() const { return parity_; }
  std::span<const Biquaternion> values() const { return values_; }
  const Biquaternion& operator[](std::size_t bin) const { return values_[bin]; }

 private:
  std::string name_;
  GridShape shape_;
  std::vector<Biquaternion> values_;
  SymbolParity parity_;
};

SpectralField dft(const Field& f);
Field idft(const SpectralField& spectrum);

/**
 * i * xi / |xi| at a continuous frequency, xi = xi_1 i + xi_2 j + xi_3 k;
 * 0 when xi == 0. Depends on xi only through xi / |xi|.
 */
Biquaternion riesz_symbol_value(const std::array<double, 3>& xi);

/**
 * Riesz-Hilbert multiplier tabulated on a grid (cached per grid shape).
 *
 * Frequency components lying on an unpaired Nyquist line are treated as 0, so
 * the table is Hermitian on every bin and the multiplier vanishes exactly on
 * the self-conjugate bins (DC and the pure Nyquist corners). Everywhere else
 * the value squares to 1.
 */
const Symbol& riesz_symbol(const FrequencyGrid& grid);

/// chi_{+/-} = (1 +/- S)/2 with S the Riesz symbol; both equal 1/2 on self-conjugate bins.
std::pair<Symbol, Symbol> chi_symbols(const FrequencyGrid& grid);

/// Pointwise s(xi) F(xi) (left) or F(xi) s(xi) (right).
SpectralField apply_symbol(const SpectralField& spectrum, const Symbol& s, Side side);

/**
 * Removes the content of f on self-conjugate bins (DC and, for even extents,
 * the pure Nyquist bins). This is the subspace on which the Riesz-Hilbert
 * transform is an exact involution. For odd extents it equals zero_mean.
 */
Field strip_self_conjugate(const Field& f);

}  // namespace qriesz
