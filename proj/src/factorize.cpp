#include "mebf/factorize.hpp"

#include <stdexcept>
#include <string>

namespace mebf {

void MebfConfig::validate() const {
  if (!(t > 0.0 && t < 1.0))
    throw std::invalid_argument("threshold t must lie in (0,1), got " + std::to_string(t));
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (!stop_on_no_improvement)
    throw std::invalid_argument("only the stop-on-no-improvement policy is supported");
}

BinaryVector similar_columns(const BinaryMatrix& x, const BinaryVector& anchor, double t) {
  if (anchor.size() != x.rows()) throw ShapeError("similar_columns: anchor length mismatch");
  const std::size_t norm = anchor.count();
  if (norm == 0) throw std::invalid_argument("similar_columns: empty anchor");

  std::vector<std::size_t> overlap(x.cols(), 0);
  anchor.for_each_set([&](std::size_t i) {
    for_each_set_bit(x.row_words(i), [&](std::size_t j) { ++overlap[j]; });
  });

  BinaryVector out(x.cols());
  const double denom = static_cast<double>(norm);
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (static_cast<double>(overlap[j]) / denom > t) out.set(j);
  return out;
}

BinaryVector similar_rows(const BinaryMatrix& x, const BinaryVector& anchor, double t) {
  if (anchor.size() != x.cols()) throw ShapeError("similar_rows: anchor length mismatch");
  const std::size_t norm = anchor.count();
  if (norm == 0) throw std::invalid_argument("similar_rows: empty anchor");

  BinaryVector out(x.rows());
  const double denom = static_cast<double>(norm);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const std::size_t overlap = popcount_and(x.row_words(i), anchor.words());
    if (static_cast<double>(overlap) / denom > t) out.set(i);
  }
  return out;
}

namespace {

// 1-based position ceil(count/2) among the active lines, as a 0-based index.
std::size_t median_position(std::size_t active) { return (active + 1) / 2 - 1; }

}  // namespace

std::optional<Pattern> bidirectional_growth(const BinaryMatrix& residual, double t) {
  const UtlView view = utl_rearrange(residual);
  if (view.n_active == 0) return std::nullopt;

  // Column seed: d is the median column, e the columns similar to it.
  BinaryVector d = residual.column(view.col_order[median_position(view.m_active)]);
  BinaryVector e = similar_columns(residual, d, t);

  // Row seed: f is the median row, g the rows similar to it.
  BinaryVector f = residual.row(view.row_order[median_position(view.n_active)]);
  BinaryVector g = similar_rows(residual, f, t);

  if (pattern_cost(d, e, residual) > pattern_cost(g, f, residual))
    return Pattern{std::move(g), std::move(f)};
  return Pattern{std::move(d), std::move(e)};
}

std::optional<Pattern> weak_signal_detection(const BinaryMatrix& residual, double t) {
  const UtlView view = utl_rearrange(residual);

  std::optional<Pattern> by_cols;
  if (view.m_active >= 2) {
    BinaryVector d1 = residual.column(view.col_order[view.m_active - 1]) &
                      residual.column(view.col_order[view.m_active - 2]);
    if (d1.any()) {
      BinaryVector e1 = similar_columns(residual, d1, t);
      by_cols = Pattern{std::move(d1), std::move(e1)};
    }
  }

  std::optional<Pattern> by_rows;
  if (view.n_active >= 2) {
    BinaryVector e2 = residual.row(view.row_order[0]) & residual.row(view.row_order[1]);
    if (e2.any()) {
      BinaryVector d2 = similar_rows(residual, e2, t);
      by_rows = Pattern{std::move(d2), std::move(e2)};
    }
  }

  if (!by_cols) return by_rows;
  if (!by_rows) return by_cols;
  if (pattern_cost(by_rows->rows, by_rows->cols, residual) <
      pattern_cost(by_cols->rows, by_cols->cols, residual))
    return by_rows;
  return by_cols;
}

void assemble_factors(const std::vector<Pattern>& patterns, std::size_t n, std::size_t m,
                      BinaryMatrix& a, BinaryMatrix& b) {
  const std::size_t k = patterns.size();
  a = BinaryMatrix(n, k);
  b = BinaryMatrix(k, m);
  for (std::size_t l = 0; l < k; ++l) {
    patterns[l].rows.for_each_set([&](std::size_t i) { a.set(i, l); });
    b.set_row(l, patterns[l].cols);
  }
}

namespace {

// Tracks gamma(A,B;X) for the accepted patterns through the running
// reconstruction A (x) B, so a candidate is scored in O(nm/64).
class CostTracker {
 public:
  explicit CostTracker(const BinaryMatrix& x)
      : x_(x), recon_(x.rows(), x.cols()), cost_(x.count()) {}

  std::size_t cost() const { return cost_; }

  std::size_t cost_with(const Pattern& p) const {
    // Only entries newly switched on by the pattern change the cost: a new
    // one over a zero of X adds an error, over a one of X removes one.
    std::ptrdiff_t delta = 0;
    auto bw = p.cols.words();
    p.rows.for_each_set([&](std::size_t i) {
      auto xr = x_.row_words(i);
      auto rr = recon_.row_words(i);
      for (std::size_t w = 0; w < bw.size(); ++w) {
        const word_t fresh = bw[w] & ~rr[w];
        delta += std::popcount(fresh & ~xr[w]);
        delta -= std::popcount(fresh & xr[w]);
      }
    });
    return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(cost_) + delta);
  }

  void accept(const Pattern& p, std::size_t new_cost) {
    fill_pattern(recon_, p.rows, p.cols);
    cost_ = new_cost;
  }

 private:
  const BinaryMatrix& x_;
  BinaryMatrix recon_;
  std::size_t cost_;
};

}  // namespace

FactorResult mebf_factorize(const BinaryMatrix& x, const MebfConfig& cfg) {
  cfg.validate();

  FactorResult result;
  std::vector<Pattern> patterns;
  BinaryMatrix residual = x;
  std::size_t residual_ones = residual.count();
  CostTracker tracker(x);
  // gamma_0 starts unbounded, so the first candidate is always acceptable.
  std::optional<std::size_t> best_cost;

  auto acceptable = [&](std::size_t c) { return !best_cost || c <= *best_cost; };

  while (patterns.size() < cfg.k_max && residual_ones > 0) {
    ++result.iterations;

    std::optional<Pattern> cand = bidirectional_growth(residual, cfg.t);
    std::size_t cost = cand ? tracker.cost_with(*cand) : 0;
    if (!cand || !acceptable(cost)) {
      cand = weak_signal_detection(residual, cfg.t);
      if (!cand) break;
      cost = tracker.cost_with(*cand);
      if (!acceptable(cost)) break;
      ++result.weak_signal_uses;
    }

    const std::size_t hit = covered_ones(cand->rows, cand->cols, residual);
    if (hit == 0)
      throw std::logic_error("mebf_factorize: accepted pattern covers no residual ones");

    clear_pattern(residual, cand->rows, cand->cols);
    residual_ones -= hit;
    tracker.accept(*cand, cost);
    best_cost = cost;
    result.cost_history.push_back(cost);
    patterns.push_back(std::move(*cand));
  }

  result.k = patterns.size();
  assemble_factors(patterns, x.rows(), x.cols(), result.A, result.B);
  return result;
}

}  // namespace mebf
