#pragma once

/**
 * File formats.
 *
 * PlaneFile ("QFLD1"):
 *
 *   QFLD1\n
 *   <d> <n1> [<n2> [<n3>]] planes=<P> dtype=f64 layout=row-major\n
 *   <payload>
 *
 * The payload is P contiguous planes of prod(n) little-endian IEEE-754
 * doubles, each plane row-major. Planes 0..3 hold the real parts of the
 * coefficients of 1, i, j, k; when P == 8, planes 4..7 hold the imaginary
 * parts. The payload must be exactly P * prod(n) * 8 bytes.
 *
 * PGM: binary P5 with maxval <= 255 (8-bit) or <= 65535 (16-bit, big-endian).
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qriesz/field.hpp"

namespace qriesz::io {

struct PlaneFile {
  Field field;
  int planes = 4;  // 4 or 8
};

// 8 when any imaginary part is nonzero, else 4.
int required_planes(const Field& f);

std::string encode_plane_file(const Field& f, int planes = 0);  // 0: required_planes(f)
PlaneFile decode_plane_file(const std::string& bytes);

PlaneFile read_plane_file(const std::filesystem::path& path);
void write_plane_file(const std::filesystem::path& path, const Field& f, int planes = 0);

struct PgmImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint32_t maxval = 255;
  std::vector<std::uint16_t> pixels;  // row-major, height * width
};

PgmImage decode_pgm(const std::string& bytes);
std::string encode_pgm(const PgmImage& image);
PgmImage read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const PgmImage& image);

// Real scalar field of shape {height, width}, values pixel / maxval.
Field pgm_to_field(const PgmImage& image);
// Row-major real values quantized as round(clamp(v, 0, 1) * maxval).
PgmImage quantize(const std::vector<double>& values, std::size_t height, std::size_t width,
                  std::uint32_t maxval = 255);
// Min-max normalized to [0, 255]; constant input maps to 0.
PgmImage normalize_minmax(const std::vector<double>& values, std::size_t height, std::size_t width);

// Any input path: ".pgm" files (or files starting with "P5") as PGM, else PlaneFile.
Field load_field(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace qriesz::io
