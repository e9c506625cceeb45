#include <doctest.h>

#include <random>

#include "mebf/metrics.hpp"
#include "random_matrix.hpp"

using namespace mebf;

TEST_CASE("reconstruction_error") {
  std::mt19937_64 rng(1);
  const auto u = test::random_matrix(rng, 8, 3, 0.5);
  const auto v = test::random_matrix(rng, 3, 9, 0.5);
  if (bool_product(u, v).count() > 0) {
    CHECK(reconstruction_error(u, v, u, v) == 0.0);
    CHECK(reconstruction_error(u, v, BinaryMatrix(8, 0), BinaryMatrix(0, 9)) == 1.0);
  }
  // U(x)V = [[1,1],[1,0]], A(x)B = [[1,0],[1,0]]: one disagreement over three ones.
  const BinaryMatrix U{{1, 1}, {1, 0}};
  const BinaryMatrix V = BinaryMatrix::identity(2);
  const BinaryMatrix A{{1}, {1}};
  const BinaryMatrix B{{1, 0}};
  CHECK(reconstruction_error(U, V, A, B) == 1.0 / 3.0);
  CHECK_THROWS_AS(reconstruction_error(BinaryMatrix(2, 1), BinaryMatrix(1, 2), A, B),
                  UndefinedMetric);
}

TEST_CASE("density") {
  CHECK(density(BinaryMatrix::ones(4, 2), BinaryMatrix::ones(2, 5)) == 1.0);
  CHECK(density(BinaryMatrix(4, 2), BinaryMatrix(2, 5)) == 0.0);
  CHECK(density(BinaryMatrix{{1}, {0}}, BinaryMatrix{{1, 1}}) == 0.75);
  CHECK_THROWS_AS(density(BinaryMatrix(3, 0), BinaryMatrix(0, 3)), UndefinedMetric);
}

TEST_CASE("coverage_rate") {
  const BinaryMatrix x{{1, 1}, {0, 1}};
  CHECK(coverage_rate(x, BinaryMatrix::identity(2), BinaryMatrix::ones(2, 2)) == 1.0);
  CHECK(coverage_rate(x, BinaryMatrix(2, 0), BinaryMatrix(0, 2)) == 0.0);
  CHECK(coverage_rate(x, BinaryMatrix::identity(2), BinaryMatrix::identity(2)) == 2.0 / 3.0);
  CHECK_THROWS_AS(coverage_rate(BinaryMatrix(2, 2), BinaryMatrix::identity(2),
                                BinaryMatrix::identity(2)),
                  UndefinedMetric);
}

TEST_CASE("coverage is 1 exactly when no one of X is left uncovered") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6, k = rng() % 3;
    const auto x = test::random_matrix(rng, n, m, 0.5);
    if (x.count() == 0) continue;
    const auto a = test::random_matrix(rng, n, k, 0.6);
    const auto b = test::random_matrix(rng, k, m, 0.6);
    const BinaryMatrix recon = bool_product(a, b);
    const std::size_t uncovered = elementwise(BoolOp::And, x, recon.complement()).count();
    const std::size_t covered_zeros = elementwise(BoolOp::And, x.complement(), recon).count();
    REQUIRE(cost_gamma(a, b, x) == uncovered + covered_zeros);
    REQUIRE((coverage_rate(x, a, b) == 1.0) == (uncovered == 0));
    const double c = coverage_rate(x, a, b);
    REQUIRE(c >= 0.0);
    REQUIRE(c <= 1.0);
    if (k > 0) {
      const double d = density(a, b);
      REQUIRE(d >= 0.0);
      REQUIRE(d <= 1.0);
    }
  }
}

TEST_CASE("prefix_costs") {
  const BinaryMatrix x{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}};
  const BinaryMatrix a{{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  const BinaryMatrix b{{1, 1, 0, 0}, {0, 0, 1, 1}};
  CHECK(prefix_costs(a, b, x) == std::vector<std::size_t>{4, 0});
  CHECK(prefix_costs(BinaryMatrix(4, 0), BinaryMatrix(0, 4), x).empty());
}

TEST_CASE("build_report") {
  const BinaryMatrix x{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}};
  const BinaryMatrix a{{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  const BinaryMatrix b{{1, 1, 0, 0}, {0, 0, 1, 1}};
  const auto r = build_report(x, a, b, {4, 0}, GroundTruth{a, b}, 0.25);
  CHECK(r.coverage_rate == 1.0);
  CHECK(r.density == 0.5);
  CHECK(r.reconstruction_error == 0.0);
  CHECK(r.final_cost == 0);
  CHECK(r.pattern_count == 2);
  CHECK(r.wall_time == 0.25);
  CHECK(r.per_column_coverage == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(r.warnings.empty());

  const auto z = build_report(BinaryMatrix(3, 3), BinaryMatrix(3, 0), BinaryMatrix(0, 3), {},
                              GroundTruth{BinaryMatrix(3, 1), BinaryMatrix(1, 3)}, std::nullopt);
  CHECK(z.final_cost == 0);
  CHECK_FALSE(z.density);
  CHECK_FALSE(z.coverage_rate);
  CHECK_FALSE(z.reconstruction_error);
  CHECK(z.warnings.size() == 3);
}
