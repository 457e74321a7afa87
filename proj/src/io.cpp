#include "qriesz/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

#include "qriesz/error.hpp"

namespace qriesz::io {

namespace {

constexpr std::string_view kMagic = "QFLD1";

std::uint64_t to_little_endian(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int b = 0; b < 8; ++b) r |= ((v >> (8 * b)) & 0xffu) << (8 * (7 - b));
    return r;
  }
  return v;
}

void put_f64(std::string& out, double value) {
  const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(value));
  char buf[8];
  std::memcpy(buf, &bits, 8);
  out.append(buf, 8);
}

double get_f64(const char* p) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, p, 8);
  return std::bit_cast<double>(to_little_endian(bits));
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ') ++pos;
    if (pos > start) tokens.emplace_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::size_t parse_size(const std::string& token, const std::string& field_name) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("PlaneFile header: invalid " + field_name + " '" + token + "'");
  }
  return value;
}

std::string expect_key(const std::string& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw FormatError("PlaneFile header: expected '" + prefix + "...' but found '" + token + "'");
  }
  return token.substr(prefix.size());
}

// PGM header token reader that skips whitespace and '#' comments.
class PgmTokenizer {
 public:
  explicit PgmTokenizer(const std::string& bytes) : bytes_(bytes) {}

  std::string next(const char* what) {
    for (;;) {
      while (pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
      if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (pos_ == start) throw FormatError(std::string("PGM header: missing ") + what);
    return bytes_.substr(start, pos_ - start);
  }

  std::uint32_t next_number(const char* what) {
    const std::string token = next(what);
    std::uint32_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw FormatError(std::string("PGM header: invalid ") + what + " '" + token + "'");
    return value;
  }

  // Exactly one whitespace byte separates the header from the raster.
  std::size_t raster_offset() const {
    if (pos_ >= bytes_.size()) throw FormatError("PGM: missing raster");
    return pos_ + 1;
  }

 private:
  const std::string& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

int required_planes(const Field& f) { return max_abs_imag(f) != 0.0 ? 8 : 4; }

std::string encode_plane_file(const Field& f, int planes) {
  if (planes == 0) planes = required_planes(f);
  if (planes != 4 && planes != 8) throw DomainError("PlaneFile: planes must be 4 or 8");
  if (planes == 4 && max_abs_imag(f) != 0.0) {
    throw DomainError("PlaneFile: field has imaginary parts, 8 planes are required");
  }
  const auto& shape = f.shape();
  std::string out;
  out.reserve(64 + static_cast<std::size_t>(planes) * f.size() * 8);
  out += kMagic;
  out += '\n';
  out += std::to_string(shape.rank());
  for (auto n : shape.dims()) out += " " + std::to_string(n);
  out += " planes=" + std::to_string(planes) + " dtype=f64 layout=row-major\n";
  for (int p = 0; p < planes; ++p) {
    const int comp = p % 4;
    const bool imag = p >= 4;
    for (const auto& q : f.samples()) put_f64(out, imag ? q.c[comp].imag() : q.c[comp].real());
  }
  return out;
}

PlaneFile decode_plane_file(const std::string& bytes) {
  const std::size_t magic_end = bytes.find('\n');
  if (magic_end == std::string::npos || std::string_view(bytes).substr(0, magic_end) != kMagic) {
    throw FormatError("PlaneFile: bad magic (expected 'QFLD1')");
  }
  const std::size_t header_end = bytes.find('\n', magic_end + 1);
  if (header_end == std::string::npos) throw FormatError("PlaneFile: header line is not newline-terminated");
  const auto tokens = split_ws(std::string_view(bytes).substr(magic_end + 1, header_end - magic_end - 1));
  if (tokens.empty()) throw FormatError("PlaneFile header: missing rank d");

  const std::size_t rank = parse_size(tokens[0], "rank d");
  if (rank < 1 || rank > 3) throw FormatError("PlaneFile header: rank d must be 1, 2 or 3, got " + tokens[0]);
  if (tokens.size() != rank + 4) {
    throw FormatError("PlaneFile header: expected " + std::to_string(rank) +
                      " extents followed by planes=, dtype=, layout=");
  }
  std::vector<std::size_t> dims;
  for (std::size_t a = 0; a < rank; ++a) {
    const std::string name = "extent n" + std::to_string(a + 1);
    dims.push_back(parse_size(tokens[1 + a], name));
    if (dims.back() < 2) throw FormatError("PlaneFile header: " + name + " must be at least 2");
  }
  const std::string planes_str = expect_key(tokens[rank + 1], "planes");
  if (planes_str != "4" && planes_str != "8") {
    throw FormatError("PlaneFile header: planes must be 4 or 8, got '" + planes_str + "'");
  }
  const int planes = planes_str == "4" ? 4 : 8;
  if (expect_key(tokens[rank + 2], "dtype") != "f64") throw FormatError("PlaneFile header: dtype must be f64");
  if (expect_key(tokens[rank + 3], "layout") != "row-major") {
    throw FormatError("PlaneFile header: layout must be row-major");
  }

  GridShape shape(dims);
  const std::size_t count = shape.size();
  const std::size_t payload = bytes.size() - header_end - 1;
  const std::size_t expected = static_cast<std::size_t>(planes) * count * 8;
  if (payload != expected) {
    throw FormatError("PlaneFile: payload is " + std::to_string(payload) + " bytes, expected " +
                      std::to_string(expected));
  }
  std::vector<Biquaternion> samples(count);
  const char* p = bytes.data() + header_end + 1;
  for (int plane = 0; plane < planes; ++plane) {
    const int comp = plane % 4;
    for (std::size_t n = 0; n < count; ++n, p += 8) {
      const double v = get_f64(p);
      if (plane < 4) {
        samples[n].c[comp].real(v);
      } else {
        samples[n].c[comp].imag(v);
      }
    }
  }
  return {Field(std::move(shape), std::move(samples)), planes};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

PlaneFile read_plane_file(const std::filesystem::path& path) { return decode_plane_file(read_file(path)); }

void write_plane_file(const std::filesystem::path& path, const Field& f, int planes) {
  write_file(path, encode_plane_file(f, planes));
}

PgmImage decode_pgm(const std::string& bytes) {
  PgmTokenizer tok(bytes);
  if (tok.next("magic") != "P5") throw FormatError("PGM: magic must be P5 (binary graymap)");
  PgmImage img;
  img.width = tok.next_number("width");
  img.height = tok.next_number("height");
  img.maxval = tok.next_number("maxval");
  if (img.width == 0 || img.height == 0) throw FormatError("PGM header: width and height must be positive");
  if (img.maxval == 0 || img.maxval > 65535) throw FormatError("PGM header: maxval must be in [1, 65535]");
  const std::size_t offset = tok.raster_offset();
  const std::size_t bpp = img.maxval > 255 ? 2 : 1;
  const std::size_t count = img.width * img.height;
  if (bytes.size() - offset < count * bpp) throw FormatError("PGM: raster is truncated");
  img.pixels.resize(count);
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + offset);
  for (std::size_t n = 0; n < count; ++n) {
    const std::uint16_t v = bpp == 1 ? p[n] : static_cast<std::uint16_t>((p[2 * n] << 8) | p[2 * n + 1]);
    if (v > img.maxval) throw FormatError("PGM: pixel value exceeds maxval");
    img.pixels[n] = v;
  }
  return img;
}

std::string encode_pgm(const PgmImage& image) {
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n" +
                    std::to_string(image.maxval) + "\n";
  const bool wide = image.maxval > 255;
  for (auto v : image.pixels) {
    if (wide) out += static_cast<char>(v >> 8);
    out += static_cast<char>(v & 0xff);
  }
  return out;
}

PgmImage read_pgm(const std::filesystem::path& path) { return decode_pgm(read_file(path)); }
void write_pgm(const std::filesystem::path& path, const PgmImage& image) { write_file(path, encode_pgm(image)); }

Field pgm_to_field(const PgmImage& image) {
  std::vector<double> values(image.pixels.size());
  const double scale = 1.0 / static_cast<double>(image.maxval);
  for (std::size_t n = 0; n < values.size(); ++n) values[n] = image.pixels[n] * scale;
  return Field::from_real(GridShape({image.height, image.width}), values);
}

PgmImage quantize(const std::vector<double>& values, std::size_t height, std::size_t width, std::uint32_t maxval) {
  PgmImage img{width, height, maxval, std::vector<std::uint16_t>(values.size())};
  for (std::size_t n = 0; n < values.size(); ++n) {
    const double v = std::clamp(std::isfinite(values[n]) ? values[n] : 0.0, 0.0, 1.0);
    img.pixels[n] = static_cast<std::uint16_t>(std::lround(v * maxval));
  }
  return img;
}

PgmImage normalize_minmax(const std::vector<double>& values, std::size_t height, std::size_t width) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = values.empty() ? 0.0 : *hi - *lo;
  std::vector<double> scaled(values.size(), 0.0);
  if (range > 0.0) {
    for (std::size_t n = 0; n < values.size(); ++n) scaled[n] = (values[n] - *lo) / range;
  }
  return quantize(scaled, height, width, 255);
}

Field load_field(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.rfind("P5", 0) == 0) return pgm_to_field(decode_pgm(bytes));
  if (bytes.rfind(std::string(kMagic), 0) == 0) return decode_plane_file(bytes).field;
  throw FormatError("'" + path.string() + "' is neither a P5 PGM nor a QFLD1 PlaneFile (bad magic)");
}

}  // namespace qriesz::io
