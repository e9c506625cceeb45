#include "mebf/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mebf {

BinaryMatrix naive_bool_product(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("naive_bool_product: incompatible shapes");
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t l = 0; l < a.cols(); ++l) v = v || (a.get(i, l) && b.get(l, j));
      out.set(i, j, v);
    }
  return out;
}

ExactFactorization exhaustive_bmf(const BinaryMatrix& x, std::size_t k) {
  const std::size_t n = x.rows(), m = x.cols();
  if ((n + m) * k > kExhaustiveBitLimit)
    throw std::invalid_argument("exhaustive_bmf: (n + m) * k = " + std::to_string((n + m) * k) +
                                " exceeds the limit of " + std::to_string(kExhaustiveBitLimit));

  // With n + m <= 20 every row fits a 32-bit mask.
  std::vector<std::uint32_t> target(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (x.get(i, j)) target[i] |= std::uint32_t{1} << j;

  const std::uint64_t a_space = std::uint64_t{1} << (n * k);
  const std::uint64_t b_space = std::uint64_t{1} << (k * m);
  const std::uint32_t b_row_mask = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_a = 0, best_b = 0;
  std::vector<std::uint32_t> b_rows(k, 0);

  for (std::uint64_t ac = 0; ac < a_space && best > 0; ++ac) {
    for (std::uint64_t bc = 0; bc < b_space; ++bc) {
      for (std::size_t l = 0; l < k; ++l)
        b_rows[l] = static_cast<std::uint32_t>(bc >> (l * m)) & b_row_mask;
      std::size_t cost = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t row = 0;
        for (std::size_t l = 0; l < k; ++l)
          if ((ac >> (i * k + l)) & 1U) row |= b_rows[l];
        cost += static_cast<std::size_t>(std::popcount(row ^ target[i]));
      }
      if (cost < best) {
        best = cost;
        best_a = ac;
        best_b = bc;
        if (best == 0) break;
      }
    }
  }

  ExactFactorization out{BinaryMatrix(n, k), BinaryMatrix(k, m), best};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if ((best_a >> (i * k + l)) & 1U) out.A.set(i, l);
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < m; ++j)
      if ((best_b >> (l * m + j)) & 1U) out.B.set(l, j);
  return out;
}

}  // namespace mebf
