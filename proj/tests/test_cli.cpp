#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qriesz/cli.hpp"
#include "qriesz/error.hpp"
#include "qriesz/io.hpp"
#include "qriesz/properties.hpp"
#include "qriesz/spectral.hpp"

namespace qriesz {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qriesz_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string Pgm() { return (fs::path(QRIESZ_TEST_DATA) / "ramp.pgm").string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, TransformWritesResultAndMaps) {
  ASSERT_EQ(Run({"transform", "--op", "monogenic", "--viz", Pgm(), Path("out")}), 0) << err_.str();
  for (const char* f : {"result.qfld", "amplitude.pgm", "phase.pgm", "orientation.pgm", "scalar.pgm"}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  }
  const auto amp = io::read_pgm(dir_ / "out" / "amplitude.pgm");
  EXPECT_EQ(amp.width, 24u);
  EXPECT_EQ(amp.height, 20u);
  EXPECT_EQ(*std::max_element(amp.pixels.begin(), amp.pixels.end()), 255);
  EXPECT_EQ(*std::min_element(amp.pixels.begin(), amp.pixels.end()), 0);
  EXPECT_NE(out_.str().find("op=monogenic"), std::string::npos);
}

TEST_F(Cli, IdentityReproducesPgmWithinOneLevel) {
  ASSERT_EQ(Run({"transform", "--op", "identity", "--viz", Pgm(), Path("out")}), 0) << err_.str();
  const auto in = io::read_pgm(Pgm());
  const auto back = io::read_pgm(dir_ / "out" / "scalar.pgm");
  ASSERT_EQ(back.pixels.size(), in.pixels.size());
  for (std::size_t n = 0; n < in.pixels.size(); ++n) EXPECT_LE(std::abs(int(back.pixels[n]) - int(in.pixels[n])), 1);
}

TEST_F(Cli, FracScriptAlphaTwoNegates) {
  const auto f = zero_mean(random_real_field(GridShape({8, 6}), 3));
  io::write_plane_file(Path("f.qfld"), f);
  ASSERT_EQ(Run({"transform", "--op", "frac-script", "--alpha", "2", Path("f.qfld"), Path("out")}), 0) << err_.str();
  const auto g = io::read_plane_file(dir_ / "out" / "result.qfld").field;
  for (std::size_t n = 0; n < f.size(); ++n) {
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(std::abs(g[n].c[c] + f[n].c[c]), 0.0, 1e-15);
  }
}

TEST_F(Cli, QFracScriptAlphaOneIsHilbertTimesK) {
  ASSERT_EQ(Run({"transform", "--op", "qfrac-script", "--alpha", "1", "--axis", "0,0,1", Pgm(), Path("q")}), 0);
  ASSERT_EQ(Run({"transform", "--op", "hilbert", Pgm(), Path("h")}), 0);
  const auto q = io::read_plane_file(dir_ / "q" / "result.qfld").field;
  const auto h = io::read_plane_file(dir_ / "h" / "result.qfld").field;
  EXPECT_LE(max_pointwise_distance(q, right_mul(h, Quaternion::k())), 1e-15);
}

TEST_F(Cli, AxisIsNormalizedAndReported) {
  ASSERT_EQ(Run({"transform", "--op", "qfrac", "--alpha", "0.5", "--axis", "0,3,4", Pgm(), Path("out")}), 0);
  EXPECT_NE(out_.str().find("axis=0,0.59999999999999998,0.80000000000000004"), std::string::npos) << out_.str();
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(Run({}), cli::kUsage);
  EXPECT_EQ(Run({"bogus"}), cli::kUsage);
  EXPECT_EQ(Run({"transform", Pgm()}), cli::kUsage);
  EXPECT_EQ(Run({"transform", "--op", "nope", Pgm(), Path("o")}), cli::kUsage);
  EXPECT_EQ(Run({"transform", "--op", "qfrac", "--alpha", "1", Pgm(), Path("o")}), cli::kUsage);
  EXPECT_EQ(Run({"transform", "--op", "qfrac", "--axis", "0,0,0", Pgm(), Path("o")}), cli::kUsage);
  EXPECT_EQ(Run({"transform", "--op", "qfrac", "--axis", "1,2", Pgm(), Path("o")}), cli::kUsage);
  EXPECT_EQ(Run({"transform", "--alpha", "nan", Pgm(), Path("o")}), cli::kUsage);
  EXPECT_EQ(Run({"transform", "--variant", "odd", Pgm(), Path("o")}), cli::kUsage);
  EXPECT_EQ(Run({"reconstruct", "--op", "qfrac", "--alpha", "0.5", Pgm(), Path("o")}), cli::kUsage);
}

TEST_F(Cli, DataErrorsNameTheHeaderField) {
  io::write_file(Path("bad.qfld"), "QFLD1\n2 4 4 planes=4 dtype=f32 layout=row-major\n");
  EXPECT_EQ(Run({"transform", Path("bad.qfld"), Path("o")}), cli::kData);
  EXPECT_NE(err_.str().find("dtype"), std::string::npos) << err_.str();
  EXPECT_EQ(Run({"transform", Path("missing.qfld"), Path("o")}), cli::kData);
  // Monogenic kinds need a real scalar field.
  io::write_plane_file(Path("q.qfld"), random_biquaternion_field(GridShape({4, 4}), 1));
  EXPECT_EQ(Run({"transform", "--op", "monogenic", Path("q.qfld"), Path("o")}), cli::kData);
}

TEST_F(Cli, ReconstructSingularAndRoundTrip) {
  EXPECT_EQ(Run({"reconstruct", "--alpha", "2", Pgm(), Path("o")}), cli::kSingular);
  EXPECT_EQ(Run({"reconstruct", "--op", "qfrac", "--axis", "1,0,0", "--alpha", "-4", Pgm(), Path("o")}),
            cli::kSingular);

  ASSERT_EQ(Run({"transform", "--op", "monogenic", Pgm(), Path("m")}), 0);
  ASSERT_EQ(Run({"transform", "--op", "qfrac-plain", "--alpha", "0.7", "--axis", "1,1,1", Pgm(), Path("g")}), 0);
  ASSERT_EQ(Run({"reconstruct", "--op", "qfrac", "--alpha", "0.7", "--axis", "1,1,1", "--frac",
                 Path("g/result.qfld"), Pgm(), Path("r")}),
            0)
      << err_.str();
  const auto m = io::read_plane_file(dir_ / "m" / "result.qfld").field;
  const auto r = io::read_plane_file(dir_ / "r" / "result.qfld").field;
  EXPECT_LE(norm2(subtract(m, r)), 1e-12 * norm2(m));

  ASSERT_EQ(Run({"reconstruct", "--alpha", "0.3", Pgm(), Path("r2")}), 0) << err_.str();
  EXPECT_LE(norm2(subtract(m, io::read_plane_file(dir_ / "r2" / "result.qfld").field)), 1e-12 * norm2(m));
}

TEST_F(Cli, PropsDefaultPassesAndListsGroups) {
  EXPECT_EQ(Run({"props"}), 0) << out_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
  EXPECT_EQ(Run({"props", "--list"}), 0);
  std::size_t lines = 0;
  std::istringstream in(out_.str());
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, property_catalog().size());
  EXPECT_NE(out_.str().find("involution\triesz"), std::string::npos);
}

TEST_F(Cli, PropsOnInputFileAndStrictDc) {
  EXPECT_EQ(Run({"props", Pgm()}), 0) << out_.str();
  EXPECT_EQ(Run({"props", "--strict-dc", Pgm()}), 0) << out_.str();
  const auto report = out_.str();
  const auto pos = report.find("\ninvolution\t");
  ASSERT_NE(pos, std::string::npos);
  const auto line = report.substr(pos + 1, report.find('\n', pos + 1) - pos - 1);
  EXPECT_NE(line.find("SKIP"), std::string::npos) << line;
  EXPECT_NE(line.find("DC"), std::string::npos) << line;
}

TEST_F(Cli, SpectrumOfDeltaIsFlat) {
  std::vector<double> delta(15, 0.0);
  delta[0] = 1.0;
  io::write_plane_file(Path("d.qfld"), Field::from_real(GridShape({3, 5}), delta));
  ASSERT_EQ(Run({"spectrum", Path("d.qfld"), Path("s")}), 0) << err_.str();
  const auto s = io::read_plane_file(dir_ / "s" / "spectrum.qfld").field;
  for (const auto& q : s.samples()) EXPECT_EQ(q, Biquaternion::scalar_value(1.0));
}

TEST_F(Cli, SymbolDumpDcRowAndStepPattern) {
  std::vector<double> v(8, 0.0);
  io::write_plane_file(Path("x.qfld"), Field::from_real(GridShape({8}), v));
  ASSERT_EQ(Run({"spectrum", "--dump-symbol", Path("x.qfld"), Path("s")}), 0) << err_.str();
  std::ifstream csv(dir_ / "s" / "symbol.csv");
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "n1,xi1,re0,im0,re1,im1,re2,im2,re3,im3");
  std::getline(csv, line);
  EXPECT_EQ(line, "0,0,0,0,0,0,0,0,0,0");
  // chi_+ = (1 + S)/2 gives (1 + sgn nu)/2 via Re(c0) + Im(c1); here Im(c1) = sgn nu.
  for (int bin = 1; bin < 8; ++bin) {
    ASSERT_TRUE(std::getline(csv, line));
    std::vector<double> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(std::stod(c));
    const double nu = cols[1];
    const double chi_plus = 0.5 * (1.0 + cols[5]);
    const double expected = bin == 4 ? 0.5 : 0.5 * (1.0 + (nu > 0 ? 1.0 : -1.0));
    EXPECT_DOUBLE_EQ(chi_plus, expected) << line;
  }
}

TEST_F(Cli, TransformIsByteDeterministic) {
  for (const char* run : {"a", "b"}) {
    ASSERT_EQ(Run({"transform", "--op", "frac-monogenic", "--alpha", "0.4", "--viz", Pgm(), Path(run)}), 0);
  }
  for (const char* f : {"result.qfld", "amplitude.pgm", "phase.pgm", "orientation.pgm", "scalar.pgm"}) {
    EXPECT_EQ(io::read_file(dir_ / "a" / f), io::read_file(dir_ / "b" / f)) << f;
  }
}

TEST(ParseAxis, NormalizesAndRejects) {
  const auto u = cli::parse_axis("0,0,2");
  EXPECT_EQ(u.u3(), 1.0);
  EXPECT_THROW(cli::parse_axis("a,b,c"), DomainError);
  EXPECT_THROW(cli::parse_axis("1,2,3,4"), DomainError);
  EXPECT_THROW(cli::parse_axis("0,0,0"), DomainError);
}

}  // namespace
}  // namespace qriesz
