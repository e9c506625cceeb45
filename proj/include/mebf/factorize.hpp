#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mebf/bit_matrix.hpp"

namespace mebf {

struct MebfConfig {
  /// Similarity threshold, strictly inside (0,1).
  double t = 0.8;
  /// Upper bound on accepted patterns.
  std::size_t k_max = 5;
  /// Stop as soon as neither growth nor weak-signal detection keeps the cost
  /// from increasing. This is the only supported policy.
  bool stop_on_no_improvement = true;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// One rank-1 pattern: the submatrix rows x cols.
struct Pattern {
  BinaryVector rows;
  BinaryVector cols;
};

struct FactorResult {
  BinaryMatrix A;  // n x k
  BinaryMatrix B;  // k x m
  /// gamma(A,B;X) after each accepted pattern.
  std::vector<std::size_t> cost_history;
  std::size_t k = 0;
  std::size_t iterations = 0;
  std::size_t weak_signal_uses = 0;

  friend bool operator==(const FactorResult&, const FactorResult&) = default;
};

/// Thresholded similarity of every column of x against `anchor` (length
/// x.rows()): bit j is set iff <x[:,j], anchor> / <anchor,anchor> > t.
/// `anchor` must be non-empty.
BinaryVector similar_columns(const BinaryMatrix& x, const BinaryVector& anchor, double t);

/// Row counterpart of similar_columns; `anchor` has length x.cols().
BinaryVector similar_rows(const BinaryMatrix& x, const BinaryVector& anchor, double t);

/// Seeds a pattern from the median active column and the median active row
/// of the UTL view of `residual`, grows each by thresholded similarity and
/// returns the cheaper of the two (ties go to the column-seeded pattern).
/// Returns nullopt when `residual` has no ones.
std::optional<Pattern> bidirectional_growth(const BinaryMatrix& residual, double t);

/// Fallback seeding from the intersection of the two densest columns and of
/// the two densest rows. Candidates with an empty intersection (or fewer
/// than two active lines) are skipped; nullopt when both are skipped.
std::optional<Pattern> weak_signal_detection(const BinaryMatrix& residual, double t);

/// Median expansion Boolean matrix factorization of x.
FactorResult mebf_factorize(const BinaryMatrix& x, const MebfConfig& cfg);

/// Assembles A (n x k) and B (k x m) from a pattern list.
void assemble_factors(const std::vector<Pattern>& patterns, std::size_t n, std::size_t m,
                      BinaryMatrix& a, BinaryMatrix& b);

}  // namespace mebf
