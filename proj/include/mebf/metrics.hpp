#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mebf/bit_matrix.hpp"
#include "mebf/factorize.hpp"

namespace mebf {

/// A ratio metric whose denominator is zero.
class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |(U (x) V) xor (A (x) B)| / |U (x) V|. Can exceed 1.
double reconstruction_error(const BinaryMatrix& u, const BinaryMatrix& v, const BinaryMatrix& a,
                            const BinaryMatrix& b);

/// (|A| + |B|) / ((n + m) k).
double density(const BinaryMatrix& a, const BinaryMatrix& b);

/// Fraction of the ones of X reproduced by A (x) B.
double coverage_rate(const BinaryMatrix& x, const BinaryMatrix& a, const BinaryMatrix& b);

/// gamma(A[:, :l], B[:l, :]; X) for l = 1..k.
std::vector<std::size_t> prefix_costs(const BinaryMatrix& a, const BinaryMatrix& b,
                                      const BinaryMatrix& x);

struct GroundTruth {
  BinaryMatrix U;
  BinaryMatrix V;
};

struct MetricsReport {
  std::optional<double> reconstruction_error;
  std::optional<double> density;
  std::optional<double> coverage_rate;
  std::size_t final_cost = 0;
  std::size_t pattern_count = 0;
  std::optional<double> wall_time;
  std::vector<std::size_t> cost_history;
  /// Column sums of A (x) B.
  std::vector<std::size_t> per_column_coverage;
  /// One entry per metric left absent because it was undefined.
  std::vector<std::string> warnings;
};

MetricsReport build_report(const BinaryMatrix& x, const BinaryMatrix& a, const BinaryMatrix& b,
                           std::vector<std::size_t> cost_history,
                           const std::optional<GroundTruth>& truth,
                           std::optional<double> wall_time);

MetricsReport build_report(const BinaryMatrix& x, const FactorResult& result,
                           const std::optional<GroundTruth>& truth,
                           std::optional<double> wall_time);

}  // namespace mebf
