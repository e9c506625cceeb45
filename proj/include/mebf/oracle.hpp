#pragma once

#include <cstddef>

#include "mebf/bit_matrix.hpp"

namespace mebf {

/// Largest (n + m) * k the exhaustive search accepts.
inline constexpr std::size_t kExhaustiveBitLimit = 20;

struct ExactFactorization {
  BinaryMatrix A;
  BinaryMatrix B;
  std::size_t min_cost = 0;
};

/// Globally optimal rank-k Boolean factorization by enumerating every A and
/// every B. A is the outer counter and B the inner one; entry e of a factor
/// (row-major) is bit e of its counter. The first minimum found wins.
/// Throws std::invalid_argument when (n + m) * k > kExhaustiveBitLimit.
ExactFactorization exhaustive_bmf(const BinaryMatrix& x, std::size_t k);

/// Literal triple-loop Boolean product, independent of the packed kernel.
BinaryMatrix naive_bool_product(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace mebf
