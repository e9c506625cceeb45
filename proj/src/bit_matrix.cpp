#include "mebf/bit_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace mebf {

namespace {

std::string shape_str(const BinaryMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_cols(const BinaryMatrix& x, const BinaryVector& b, const char* what) {
  if (b.size() != x.cols())
    throw ShapeError(std::string(what) + ": column vector length " + std::to_string(b.size()) +
                     " does not match matrix " + shape_str(x));
}

void require_pattern(const BinaryMatrix& x, const BinaryVector& a, const BinaryVector& b,
                     const char* what) {
  if (a.size() != x.rows())
    throw ShapeError(std::string(what) + ": row vector length " + std::to_string(a.size()) +
                     " does not match matrix " + shape_str(x));
  require_cols(x, b, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// BinaryVector

BinaryVector::BinaryVector(std::initializer_list<int> bits) : BinaryVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BinaryVector: entries must be 0 or 1");
    set(i++, b == 1);
  }
}

BinaryVector BinaryVector::ones(std::size_t len) {
  BinaryVector v(len);
  std::fill(v.words_.begin(), v.words_.end(), ~word_t{0});
  if (!v.words_.empty()) v.words_.back() &= tail_mask(len);
  return v;
}

bool BinaryVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
}

void BinaryVector::check_same_size(const BinaryVector& o) const {
  if (len_ != o.len_)
    throw ShapeError("BinaryVector: length mismatch " + std::to_string(len_) + " vs " +
                     std::to_string(o.len_));
}

BinaryVector& BinaryVector::operator&=(const BinaryVector& o) {
  check_same_size(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

BinaryVector& BinaryVector::operator|=(const BinaryVector& o) {
  check_same_size(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& o) {
  check_same_size(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

std::string BinaryVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t dot(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  return popcount_and(a.words(), b.words());
}

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BinaryMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("BinaryMatrix: ragged initializer");
    std::size_t j = 0;
    for (int b : r) {
      if (b != 0 && b != 1) throw std::invalid_argument("BinaryMatrix: entries must be 0 or 1");
      set(i, j++, b == 1);
    }
    ++i;
  }
}

BinaryMatrix BinaryMatrix::ones(std::size_t rows, std::size_t cols) {
  BinaryMatrix m(rows, cols);
  const BinaryVector one = BinaryVector::ones(cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, one);
  return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryVector BinaryMatrix::row(std::size_t i) const {
  BinaryVector v(cols_);
  std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(i * wpr_), wpr_, v.words().begin());
  return v;
}

BinaryVector BinaryMatrix::column(std::size_t j) const {
  BinaryVector v(rows_);
  const std::size_t w = j / kWordBits;
  const std::size_t shift = j % kWordBits;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((bits_[i * wpr_ + w] >> shift) & 1U) v.set(i);
  return v;
}

void BinaryMatrix::set_row(std::size_t i, const BinaryVector& v) {
  if (v.size() != cols_) throw ShapeError("set_row: length mismatch");
  std::copy(v.words().begin(), v.words().end(),
            bits_.begin() + static_cast<std::ptrdiff_t>(i * wpr_));
}

BinaryMatrix BinaryMatrix::complement() const {
  BinaryMatrix out(rows_, cols_);
  const word_t last = tail_mask(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto src = row_words(i);
    auto dst = out.row_words(i);
    for (std::size_t w = 0; w < wpr_; ++w) dst[w] = ~src[w];
    if (wpr_ > 0) dst[wpr_ - 1] &= last;
  }
  return out;
}

std::string BinaryMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s.push_back(get(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kernels

BinaryMatrix bool_product(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("bool_product: incompatible shapes " + shape_str(a) + " and " +
                     shape_str(b));
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row_words(i);
    for_each_set_bit(a.row_words(i), [&](std::size_t l) {
      auto src = b.row_words(l);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
    });
  }
  return out;
}

BinaryMatrix elementwise(BoolOp op, const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("elementwise: shape mismatch " + shape_str(a) + " vs " + shape_str(b));
  BinaryMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto x = a.row_words(i);
    auto y = b.row_words(i);
    auto z = out.row_words(i);
    switch (op) {
      case BoolOp::And:
        for (std::size_t w = 0; w < z.size(); ++w) z[w] = x[w] & y[w];
        break;
      case BoolOp::Or:
        for (std::size_t w = 0; w < z.size(); ++w) z[w] = x[w] | y[w];
        break;
      case BoolOp::Xor:
        for (std::size_t w = 0; w < z.size(); ++w) z[w] = x[w] ^ y[w];
        break;
    }
  }
  return out;
}

BinaryMatrix rank1_product(const BinaryVector& a, const BinaryVector& b) {
  BinaryMatrix out(a.size(), b.size());
  a.for_each_set([&](std::size_t i) { out.set_row(i, b); });
  return out;
}

AxisSums axis_sums(const BinaryMatrix& x) {
  AxisSums s;
  s.row_sums.resize(x.rows());
  s.col_sums.assign(x.cols(), 0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto r = x.row_words(i);
    s.row_sums[i] = popcount_words(r);
    for_each_set_bit(r, [&](std::size_t j) { ++s.col_sums[j]; });
  }
  return s;
}

UtlView utl_rearrange(const AxisSums& sums) {
  UtlView v;
  const auto& rs = sums.row_sums;
  const auto& cs = sums.col_sums;

  v.row_order.resize(rs.size());
  std::iota(v.row_order.begin(), v.row_order.end(), std::size_t{0});
  // Descending sums put zero rows last on their own.
  std::stable_sort(v.row_order.begin(), v.row_order.end(),
                   [&](std::size_t a, std::size_t b) { return rs[a] > rs[b]; });
  v.n_active = static_cast<std::size_t>(
      std::count_if(rs.begin(), rs.end(), [](std::size_t s) { return s > 0; }));

  v.col_order.resize(cs.size());
  std::iota(v.col_order.begin(), v.col_order.end(), std::size_t{0});
  // Ascending among active columns; zero columns are moved behind the block.
  std::stable_sort(v.col_order.begin(), v.col_order.end(), [&](std::size_t a, std::size_t b) {
    const bool za = cs[a] == 0, zb = cs[b] == 0;
    if (za != zb) return zb;
    return cs[a] < cs[b];
  });
  v.m_active = static_cast<std::size_t>(
      std::count_if(cs.begin(), cs.end(), [](std::size_t s) { return s > 0; }));
  return v;
}

UtlView utl_rearrange(const BinaryMatrix& x) { return utl_rearrange(axis_sums(x)); }

BinaryMatrix permute(const BinaryMatrix& x, const UtlView& view) {
  if (view.row_order.size() != x.rows() || view.col_order.size() != x.cols())
    throw ShapeError("permute: view does not match matrix " + shape_str(x));
  BinaryMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x.get(view.row_order[i], view.col_order[j])) out.set(i, j);
  return out;
}

std::size_t cost_gamma(const BinaryMatrix& a, const BinaryMatrix& b, const BinaryMatrix& x) {
  if (a.rows() != x.rows() || b.cols() != x.cols() || a.cols() != b.rows())
    throw ShapeError("cost_gamma: shapes " + shape_str(a) + ", " + shape_str(b) +
                     " incompatible with X " + shape_str(x));
  const BinaryMatrix prod = bool_product(a, b);
  std::size_t cost = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto p = prod.row_words(i);
    auto r = x.row_words(i);
    for (std::size_t w = 0; w < r.size(); ++w)
      cost += static_cast<std::size_t>(std::popcount(p[w] ^ r[w]));
  }
  return cost;
}

std::size_t covered_ones(const BinaryVector& a, const BinaryVector& b, const BinaryMatrix& x) {
  require_pattern(x, a, b, "covered_ones");
  std::size_t hit = 0;
  a.for_each_set([&](std::size_t i) { hit += popcount_and(x.row_words(i), b.words()); });
  return hit;
}

std::size_t pattern_cost(const BinaryVector& a, const BinaryVector& b, const BinaryMatrix& x) {
  // |X xor ab^T| = |X| + |a||b| - 2 |X and ab^T|
  const std::size_t hit = covered_ones(a, b, x);
  return x.count() + a.count() * b.count() - 2 * hit;
}

void clear_pattern(BinaryMatrix& x, const BinaryVector& a, const BinaryVector& b) {
  require_pattern(x, a, b, "clear_pattern");
  auto bw = b.words();
  a.for_each_set([&](std::size_t i) {
    auto r = x.row_words(i);
    for (std::size_t w = 0; w < r.size(); ++w) r[w] &= ~bw[w];
  });
}

void fill_pattern(BinaryMatrix& x, const BinaryVector& a, const BinaryVector& b) {
  require_pattern(x, a, b, "fill_pattern");
  auto bw = b.words();
  a.for_each_set([&](std::size_t i) {
    auto r = x.row_words(i);
    for (std::size_t w = 0; w < r.size(); ++w) r[w] |= bw[w];
  });
}

}  // namespace mebf
