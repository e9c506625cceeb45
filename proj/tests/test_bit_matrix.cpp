#include <doctest.h>

#include <random>

#include "mebf/bit_matrix.hpp"
#include "mebf/oracle.hpp"
#include "random_matrix.hpp"

using namespace mebf;

TEST_CASE("bool_product examples") {
  const BinaryMatrix a{{1, 0}, {1, 1}};
  const BinaryMatrix b{{1, 1}, {0, 1}};
  CHECK(bool_product(a, b) == BinaryMatrix{{1, 1}, {1, 1}});

  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 3, 65, 130}) {
    const BinaryMatrix x = test::random_matrix(rng, n, n, 0.5);
    CHECK(bool_product(x, BinaryMatrix::identity(n)) == x);
  }

  const BinaryMatrix zeros(3, 4);
  CHECK(bool_product(zeros, test::random_matrix(rng, 4, 5, 0.5)) == BinaryMatrix(3, 5));
  CHECK_THROWS_AS(bool_product(BinaryMatrix(2, 3), BinaryMatrix(2, 3)), ShapeError);
}

TEST_CASE("bool_product agrees with the triple loop") {
  // Exhaustive over rank-1 shapes up to 4x4.
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (unsigned av = 0; av < (1u << n); ++av)
        for (unsigned bv = 0; bv < (1u << m); ++bv) {
          BinaryMatrix a(n, 1), b(1, m);
          for (std::size_t i = 0; i < n; ++i) a.set(i, 0, (av >> i) & 1u);
          for (std::size_t j = 0; j < m; ++j) b.set(0, j, (bv >> j) & 1u);
          REQUIRE(bool_product(a, b) == naive_bool_product(a, b));
        }

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dim(rng), k = dim(rng), m = dim(rng);
    const BinaryMatrix a = test::random_matrix(rng, n, k, 0.4);
    const BinaryMatrix b = test::random_matrix(rng, k, m, 0.4);
    REQUIRE(bool_product(a, b) == naive_bool_product(a, b));
  }
}

TEST_CASE("bool_product is associative") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 70);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng), k = dim(rng), l = dim(rng), m = dim(rng);
    const auto a = test::random_matrix(rng, n, k, 0.05);
    const auto b = test::random_matrix(rng, k, l, 0.05);
    const auto c = test::random_matrix(rng, l, m, 0.05);
    REQUIRE(bool_product(bool_product(a, b), c) == bool_product(a, bool_product(b, c)));
  }
}

TEST_CASE("elementwise operations") {
  std::mt19937_64 rng(5);
  const auto a = test::random_matrix(rng, 9, 70, 0.5);
  CHECK(elementwise(BoolOp::Xor, a, a) == BinaryMatrix(9, 70));
  CHECK(elementwise(BoolOp::And, a, BinaryMatrix::ones(9, 70)) == a);
  CHECK(elementwise(BoolOp::Or, a, BinaryMatrix(9, 70)) == a);
  CHECK(elementwise(BoolOp::Xor, BinaryMatrix{{1, 0}, {0, 1}}, BinaryMatrix{{1, 1}, {0, 0}}) ==
        BinaryMatrix{{0, 1}, {0, 1}});
  CHECK_THROWS_AS(elementwise(BoolOp::And, BinaryMatrix(2, 2), BinaryMatrix(2, 3)), ShapeError);
}

TEST_CASE("rank1_product") {
  CHECK(rank1_product(BinaryVector::ones(3), BinaryVector::ones(67)) == BinaryMatrix::ones(3, 67));
  CHECK(rank1_product(BinaryVector(4), BinaryVector::ones(2)) == BinaryMatrix(4, 2));
  CHECK(rank1_product(BinaryVector{1, 1, 0}, BinaryVector{0, 1}) ==
        BinaryMatrix{{0, 1}, {0, 1}, {0, 0}});
}

TEST_CASE("axis_sums") {
  const auto z = axis_sums(BinaryMatrix(3, 3));
  CHECK(z.row_sums == std::vector<std::size_t>{0, 0, 0});
  CHECK(z.col_sums == std::vector<std::size_t>{0, 0, 0});
  const auto id = axis_sums(BinaryMatrix::identity(3));
  CHECK(id.row_sums == std::vector<std::size_t>{1, 1, 1});
  CHECK(id.col_sums == std::vector<std::size_t>{1, 1, 1});
  const auto s = axis_sums(BinaryMatrix{{0, 1, 1}, {1, 1, 1}});
  CHECK(s.row_sums == std::vector<std::size_t>{2, 3});
  CHECK(s.col_sums == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("utl_rearrange examples") {
  const BinaryMatrix x{{0, 1}, {1, 1}};
  const UtlView v = utl_rearrange(x);
  CHECK(v.row_order == std::vector<std::size_t>{1, 0});
  CHECK(v.col_order == std::vector<std::size_t>{0, 1});
  CHECK(v.n_active == 2);
  CHECK(v.m_active == 2);
  CHECK(permute(x, v) == BinaryMatrix{{1, 1}, {0, 1}});

  const BinaryMatrix utl{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  const UtlView w = utl_rearrange(utl);
  CHECK(w.row_order == std::vector<std::size_t>{0, 1, 2});
  CHECK(w.col_order == std::vector<std::size_t>{0, 1, 2});

  const UtlView zc = utl_rearrange(BinaryMatrix{{1, 0, 1}, {1, 0, 0}});
  CHECK(zc.m_active == 2);
  CHECK(zc.col_order.back() == 1);

  const UtlView none = utl_rearrange(BinaryMatrix(4, 5));
  CHECK(none.n_active == 0);
  CHECK(none.m_active == 0);

  const UtlView empty = utl_rearrange(BinaryMatrix());
  CHECK(empty.row_order.empty());
}

TEST_CASE("utl_rearrange properties") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 90);
  std::uniform_real_distribution<double> dens(0.0, 0.3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = test::random_matrix(rng, dim(rng), dim(rng), dens(rng));
    const UtlView v = utl_rearrange(x);
    const AxisSums s = axis_sums(x);

    // orders are permutations
    std::vector<int> seen_r(x.rows()), seen_c(x.cols());
    for (auto i : v.row_order) seen_r[i]++;
    for (auto j : v.col_order) seen_c[j]++;
    for (int c : seen_r) REQUIRE(c == 1);
    for (int c : seen_c) REQUIRE(c == 1);

    for (std::size_t p = 0; p < x.rows(); ++p)
      REQUIRE((s.row_sums[v.row_order[p]] > 0) == (p < v.n_active));
    for (std::size_t p = 0; p < x.cols(); ++p)
      REQUIRE((s.col_sums[v.col_order[p]] > 0) == (p < v.m_active));

    const BinaryMatrix y = permute(x, v);
    const AxisSums ys = axis_sums(y);
    for (std::size_t p = 1; p < v.n_active; ++p) REQUIRE(ys.row_sums[p - 1] >= ys.row_sums[p]);
    for (std::size_t p = 1; p < v.m_active; ++p) REQUIRE(ys.col_sums[p - 1] <= ys.col_sums[p]);

    // inverse permutation recovers x
    BinaryMatrix back(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (y.get(i, j)) back.set(v.row_order[i], v.col_order[j]);
    REQUIRE(back == x);

    const UtlView again = utl_rearrange(x);
    REQUIRE(again.row_order == v.row_order);
    REQUIRE(again.col_order == v.col_order);
  }
}

TEST_CASE("cost_gamma") {
  std::mt19937_64 rng(23);
  const auto x = test::random_matrix(rng, 6, 7, 0.5);
  CHECK(cost_gamma(BinaryMatrix(6, 0), BinaryMatrix(0, 7), x) == x.count());
  CHECK(cost_gamma(BinaryMatrix::identity(6), x, x) == 0);

  // X=[[1,1],[1,0]], A(x)B=[[1,0],[1,0]]
  const BinaryMatrix X{{1, 1}, {1, 0}};
  const BinaryMatrix a{{1}, {1}};
  const BinaryMatrix b{{1, 0}};
  CHECK(cost_gamma(a, b, X) == 1);
  CHECK_THROWS_AS(cost_gamma(BinaryMatrix(3, 1), b, X), ShapeError);

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 80, k = rng() % 5, m = 1 + rng() % 80;
    const auto A = test::random_matrix(rng, n, k, 0.3);
    const auto B = test::random_matrix(rng, k, m, 0.3);
    const auto Y = test::random_matrix(rng, n, m, 0.4);
    REQUIRE(cost_gamma(A, B, Y) == elementwise(BoolOp::Xor, Y, bool_product(A, B)).count());
    if (k >= 1) {
      const BinaryVector u = A.column(0), w = B.row(0);
      REQUIRE(pattern_cost(u, w, Y) == elementwise(BoolOp::Xor, Y, rank1_product(u, w)).count());
    }
  }
}

TEST_CASE("padding bits stay zero") {
  const BinaryMatrix x = BinaryMatrix(3, 70).complement();
  CHECK(x.count() == 210);
  CHECK(x == BinaryMatrix::ones(3, 70));
  CHECK(BinaryVector::ones(65).count() == 65);
}
