#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mebf/matrix_io.hpp"
#include "random_matrix.hpp"

using namespace mebf;
namespace fs = std::filesystem;

namespace {

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::path(MEBF_TEST_TMPDIR) / "io";
  fs::create_directories(dir);
  return dir / name;
}

template <typename Parse>
auto parse(Parse p, const std::string& text) {
  std::istringstream in(text);
  return p(in);
}

}  // namespace

TEST_CASE("dense01 parsing") {
  CHECK(parse(parse_dense01, "10\n01\n") == BinaryMatrix::identity(2));
  CHECK(parse(parse_dense01, "1 0 1\n0 1 1") == BinaryMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(parse(parse_dense01, "") == BinaryMatrix());

  try {
    parse(parse_dense01, "10\n2 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse(parse_dense01, "10\n011\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_dense01, "1  0\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_dense01, "10\r\n01\r\n"), ParseError);
}

TEST_CASE("coo parsing") {
  CHECK(parse(parse_coo, "2 2 1\n1 2\n") == BinaryMatrix{{0, 1}, {0, 0}});
  CHECK(parse(parse_coo, "0 0 0\n") == BinaryMatrix());

  try {
    parse(parse_coo, "2 2 2\n1 1\n3 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse(parse_coo, "2 2 2\n1 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_coo, "2 2 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_coo, "2 2\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_coo, "2 2 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_coo, "2 2 1\n1 x\n"), ParseError);
}

TEST_CASE("csv parsing") {
  CHECK(parse(parse_csv, "1.5,0\n0,2.0\n") == RealMatrix{{1.5, 0}, {0, 2.0}});
  CHECK(parse(parse_csv, "-3e-2,7\n") == RealMatrix{{-0.03, 7}});
  CHECK(parse(parse_csv, "") == RealMatrix());
  CHECK_THROWS_AS(parse(parse_csv, "1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_csv, "1,,2\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_csv, "1,abc\n"), ParseError);
  CHECK_THROWS_AS(parse(parse_csv, "1,inf\n"), ParseError);
}

TEST_CASE("binary round-trip in every format") {
  std::mt19937_64 rng(31);
  std::vector<BinaryMatrix> cases = {BinaryMatrix(), BinaryMatrix::identity(3),
                                     test::random_matrix(rng, 1000, 1000, 0.1)};
  for (int trial = 0; trial < 20; ++trial)
    cases.push_back(test::random_matrix(rng, 1 + rng() % 80, 1 + rng() % 80, 0.3));

  for (MatrixFormat f : {MatrixFormat::Dense01, MatrixFormat::Coo, MatrixFormat::Csv}) {
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const fs::path p = tmp("rt_" + std::string(format_name(f)) + std::to_string(c));
      write_matrix(cases[c], p, f);
      REQUIRE(read_binary(p, f) == cases[c]);
    }
  }
}

TEST_CASE("real csv round-trip") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g(0.0, 100.0);
  RealMatrix r(17, 23);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = g(rng);
  const fs::path p = tmp("real.csv");
  write_matrix(r, p);
  CHECK(std::get<RealMatrix>(read_matrix(p, MatrixFormat::Csv)) == r);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_matrix(tmp("does_not_exist"), MatrixFormat::Dense01), IoError);
  const fs::path bad = tmp("bad.coo");
  {
    std::ofstream(bad) << "2 2 1\n5 5\n";
  }
  try {
    read_matrix(bad, MatrixFormat::Coo);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  CHECK_THROWS_AS(parse_format("mtx"), std::invalid_argument);
}

TEST_CASE("binarize") {
  CHECK(binarize(RealMatrix(3, 2)) == BinaryMatrix(3, 2));
  CHECK(binarize(RealMatrix{{-1.0, -0.5}, {0.0, -2.0}}) == BinaryMatrix(2, 2));
  CHECK(binarize(RealMatrix{{1.5, 0}, {0, 2.0}}) == BinaryMatrix::identity(2));
  CHECK(binarize(RealMatrix{{1.5, 0.2}}, 1.0) == BinaryMatrix{{1, 0}});
}

TEST_CASE("mask_denoise") {
  const RealMatrix r{{1.5, 0}, {0, 2.0}};
  CHECK(mask_denoise(r, BinaryMatrix{{1}, {1}}, BinaryMatrix{{1, 1}}) == r);
  CHECK(mask_denoise(r, BinaryMatrix(2, 1), BinaryMatrix(1, 2)) == RealMatrix(2, 2));
  CHECK(mask_denoise(r, BinaryMatrix{{1}, {0}}, BinaryMatrix{{1, 1}}) ==
        RealMatrix{{1.5, 0}, {0, 0}});
  CHECK_THROWS_AS(mask_denoise(r, BinaryMatrix(3, 1), BinaryMatrix(1, 2)), ShapeError);

  // binarize(mask(R)) == binarize(R) AND (A (x) B)
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 30, m = 1 + rng() % 30, k = rng() % 4;
    RealMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) x(i, j) = g(rng);
    const auto a = test::random_matrix(rng, n, k, 0.4);
    const auto b = test::random_matrix(rng, k, m, 0.4);
    REQUIRE(binarize(mask_denoise(x, a, b)) ==
            elementwise(BoolOp::And, binarize(x), bool_product(a, b)));
  }
}
