#include "qriesz/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "qriesz/error.hpp"

namespace qriesz {

static_assert(sizeof(Biquaternion) == 4 * sizeof(fftw_complex),
              "Biquaternion must be four packed complex doubles");

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place transform of all four coefficient planes (stride 4, interleaved).
void transform_in_place(const GridShape& shape, std::vector<Biquaternion>& data, int sign) {
  std::vector<int> n(shape.dims().begin(), shape.dims().end());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_many_dft(static_cast<int>(n.size()), n.data(), 4, buf, nullptr, 4, 1, buf, nullptr, 4, 1,
                              sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

long FrequencyGrid::signed_index(std::size_t axis, std::size_t n) const {
  const std::size_t extent = shape_.extent(axis);
  const std::size_t half_up = (extent + 1) / 2;
  return n < half_up ? static_cast<long>(n) : static_cast<long>(n) - static_cast<long>(extent);
}

std::array<double, 3> FrequencyGrid::frequency(std::size_t bin) const {
  std::array<double, 3> xi{0, 0, 0};
  const auto idx = shape_.unravel(bin);
  for (std::size_t a = 0; a < shape_.rank(); ++a) {
    xi[a] = static_cast<double>(signed_index(a, idx[a])) /
            (static_cast<double>(shape_.extent(a)) * shape_.spacing(a));
  }
  return xi;
}

std::size_t FrequencyGrid::negated_bin(std::size_t bin) const {
  auto idx = shape_.unravel(bin);
  for (std::size_t a = 0; a < shape_.rank(); ++a) idx[a] = (shape_.extent(a) - idx[a]) % shape_.extent(a);
  return shape_.linear_index(std::span(idx.data(), shape_.rank()));
}

bool FrequencyGrid::is_self_conjugate(std::size_t bin) const { return negated_bin(bin) == bin; }

bool FrequencyGrid::is_nyquist(std::size_t axis, std::size_t n) const {
  const std::size_t extent = shape_.extent(axis);
  return extent % 2 == 0 && n == extent / 2;
}

SpectralField::SpectralField(GridShape shape, std::vector<Biquaternion> samples)
    : shape_(std::move(shape)), samples_(std::move(samples)) {
  if (samples_.size() != shape_.size()) throw DomainError("spectral field sample count mismatch");
}

Symbol::Symbol(std::string name, GridShape shape, std::vector<Biquaternion> values, SymbolParity parity)
    : name_(std::move(name)), shape_(std::move(shape)), values_(std::move(values)), parity_(parity) {
  if (values_.size() != shape_.size()) throw DomainError("symbol table size mismatch");
}

SpectralField dft(const Field& f) {
  std::vector<Biquaternion> data(f.samples().begin(), f.samples().end());
  transform_in_place(f.shape(), data, FFTW_FORWARD);
  return {f.shape(), std::move(data)};
}

Field idft(const SpectralField& spectrum) {
  std::vector<Biquaternion> data(spectrum.samples().begin(), spectrum.samples().end());
  transform_in_place(spectrum.shape(), data, FFTW_BACKWARD);
  const Complex inv_n(1.0 / static_cast<double>(spectrum.size()));
  for (auto& q : data) q = q * inv_n;
  return {spectrum.shape(), std::move(data)};
}

Biquaternion riesz_symbol_value(const std::array<double, 3>& xi) {
  const double r = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  if (r == 0.0) return {};
  const Complex i_unit(0.0, 1.0);
  return {0.0, i_unit * (xi[0] / r), i_unit * (xi[1] / r), i_unit * (xi[2] / r)};
}

const Symbol& riesz_symbol(const FrequencyGrid& grid) {
  static std::mutex cache_mutex;
  static std::map<std::pair<std::vector<std::size_t>, std::vector<double>>, std::unique_ptr<const Symbol>> cache;

  const auto& shape = grid.shape();
  auto key = std::make_pair(shape.dims(), shape.spacings());
  std::lock_guard lock(cache_mutex);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  std::vector<Biquaternion> values(grid.size());
  for (std::size_t bin = 0; bin < grid.size(); ++bin) {
    auto xi = grid.frequency(bin);
    const auto idx = shape.unravel(bin);
    for (std::size_t a = 0; a < shape.rank(); ++a) {
      if (grid.is_nyquist(a, idx[a])) xi[a] = 0.0;
    }
    values[bin] = riesz_symbol_value(xi);
  }
  auto sym = std::make_unique<const Symbol>("riesz", shape, std::move(values), SymbolParity::kHermitian);
  const Symbol& ref = *sym;
  cache.emplace(std::move(key), std::move(sym));
  return ref;
}

std::pair<Symbol, Symbol> chi_symbols(const FrequencyGrid& grid) {
  const Symbol& s = riesz_symbol(grid);
  std::vector<Biquaternion> plus(grid.size());
  std::vector<Biquaternion> minus(grid.size());
  const Biquaternion half = Biquaternion::scalar_value(0.5);
  for (std::size_t bin = 0; bin < grid.size(); ++bin) {
    const Biquaternion h = s[bin] * Complex(0.5);
    plus[bin] = half + h;
    minus[bin] = half - h;
  }
  return {Symbol("chi_plus", grid.shape(), std::move(plus), SymbolParity::kHermitian),
          Symbol("chi_minus", grid.shape(), std::move(minus), SymbolParity::kHermitian)};
}

SpectralField apply_symbol(const SpectralField& spectrum, const Symbol& s, Side side) {
  if (!(spectrum.shape() == s.shape())) throw DomainError("apply_symbol: symbol grid does not match spectrum");
  std::vector<Biquaternion> out(spectrum.size());
  for (std::size_t bin = 0; bin < out.size(); ++bin) {
    out[bin] = side == Side::kLeft ? s[bin] * spectrum[bin] : spectrum[bin] * s[bin];
  }
  return {spectrum.shape(), std::move(out)};
}

Field strip_self_conjugate(const Field& f) {
  const FrequencyGrid grid(f.shape());
  auto spectrum = dft(f);
  std::vector<Biquaternion> data(spectrum.samples().begin(), spectrum.samples().end());
  for (std::size_t bin = 0; bin < data.size(); ++bin) {
    if (grid.is_self_conjugate(bin)) data[bin] = Biquaternion{};
  }
  auto out = idft(SpectralField(f.shape(), std::move(data)));
  // Real-coefficient input stays real; drop the round-off imaginary parts.
  return f.is_real_quaternion() ? real_part(out) : out;
}

}  // namespace qriesz
