#include "mebf/metrics.hpp"

namespace mebf {

namespace {

std::size_t and_count(const BinaryMatrix& x, const BinaryMatrix& y) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) s += popcount_and(x.row_words(i), y.row_words(i));
  return s;
}

}  // namespace

double reconstruction_error(const BinaryMatrix& u, const BinaryMatrix& v, const BinaryMatrix& a,
                            const BinaryMatrix& b) {
  const BinaryMatrix truth = bool_product(u, v);
  const std::size_t norm = truth.count();
  if (norm == 0) throw UndefinedMetric("reconstruction_error: |U (x) V| is zero");
  const std::size_t diff = elementwise(BoolOp::Xor, truth, bool_product(a, b)).count();
  return static_cast<double>(diff) / static_cast<double>(norm);
}

double density(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("density: A and B disagree on k");
  const std::size_t k = a.cols();
  if (k == 0) throw UndefinedMetric("density: no patterns (k = 0)");
  const std::size_t n = a.rows(), m = b.cols();
  return static_cast<double>(a.count() + b.count()) / static_cast<double>((n + m) * k);
}

double coverage_rate(const BinaryMatrix& x, const BinaryMatrix& a, const BinaryMatrix& b) {
  const BinaryMatrix recon = bool_product(a, b);
  if (recon.rows() != x.rows() || recon.cols() != x.cols())
    throw ShapeError("coverage_rate: A (x) B does not match X");
  const std::size_t norm = x.count();
  if (norm == 0) throw UndefinedMetric("coverage_rate: |X| is zero");
  return static_cast<double>(and_count(x, recon)) / static_cast<double>(norm);
}

std::vector<std::size_t> prefix_costs(const BinaryMatrix& a, const BinaryMatrix& b,
                                      const BinaryMatrix& x) {
  if (a.rows() != x.rows() || b.cols() != x.cols() || a.cols() != b.rows())
    throw ShapeError("prefix_costs: factor shapes incompatible with X");
  std::vector<std::size_t> out;
  BinaryMatrix recon(x.rows(), x.cols());
  for (std::size_t l = 0; l < a.cols(); ++l) {
    fill_pattern(recon, a.column(l), b.row(l));
    out.push_back(elementwise(BoolOp::Xor, x, recon).count());
  }
  return out;
}

MetricsReport build_report(const BinaryMatrix& x, const BinaryMatrix& a, const BinaryMatrix& b,
                           std::vector<std::size_t> cost_history,
                           const std::optional<GroundTruth>& truth,
                           std::optional<double> wall_time) {
  MetricsReport r;
  r.pattern_count = a.cols();
  r.final_cost = cost_gamma(a, b, x);
  r.cost_history = std::move(cost_history);
  r.wall_time = wall_time;
  r.per_column_coverage = axis_sums(bool_product(a, b)).col_sums;

  try {
    r.density = density(a, b);
  } catch (const UndefinedMetric& e) {
    r.warnings.emplace_back(e.what());
  }
  try {
    r.coverage_rate = coverage_rate(x, a, b);
  } catch (const UndefinedMetric& e) {
    r.warnings.emplace_back(e.what());
  }
  if (truth) {
    try {
      r.reconstruction_error = reconstruction_error(truth->U, truth->V, a, b);
    } catch (const UndefinedMetric& e) {
      r.warnings.emplace_back(e.what());
    }
  }
  return r;
}

MetricsReport build_report(const BinaryMatrix& x, const FactorResult& result,
                           const std::optional<GroundTruth>& truth,
                           std::optional<double> wall_time) {
  return build_report(x, result.A, result.B, result.cost_history, truth, wall_time);
}

}  // namespace mebf
