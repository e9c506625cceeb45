#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mebf {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Mask of the valid bits in the last word of a packed run of `bits` bits.
inline constexpr word_t tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~word_t{0} : (word_t{1} << r) - 1;
}

// Raised when operand shapes are incompatible.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Calls f(index) for every set bit of a packed word run, in increasing order.
template <typename F>
void for_each_set_bit(std::span<const word_t> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    word_t x = words[w];
    while (x != 0) {
      f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

inline std::size_t popcount_words(std::span<const word_t> words) {
  std::size_t s = 0;
  for (word_t x : words) s += static_cast<std::size_t>(std::popcount(x));
  return s;
}

inline std::size_t popcount_and(std::span<const word_t> a, std::span<const word_t> b) {
  std::size_t s = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    s += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return s;
}

/// Bit-packed vector over {0,1}. Padding bits past size() are kept zero.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}
  BinaryVector(std::initializer_list<int> bits);

  static BinaryVector ones(std::size_t len);

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const word_t bit = word_t{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }

  std::size_t count() const { return popcount_words(words_); }
  bool any() const;
  bool none() const { return !any(); }

  std::span<const word_t> words() const { return words_; }
  std::span<word_t> words() { return words_; }

  template <typename F>
  void for_each_set(F&& f) const {
    for_each_set_bit(words_, std::forward<F>(f));
  }

  BinaryVector& operator&=(const BinaryVector& o);
  BinaryVector& operator|=(const BinaryVector& o);
  BinaryVector& operator^=(const BinaryVector& o);

  friend BinaryVector operator&(BinaryVector a, const BinaryVector& b) { return a &= b; }
  friend BinaryVector operator|(BinaryVector a, const BinaryVector& b) { return a |= b; }
  friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

  std::string to_string() const;

 private:
  void check_same_size(const BinaryVector& o) const;

  std::size_t len_ = 0;
  std::vector<word_t> words_;
};

/// Inner product of two binary vectors, i.e. |a AND b|.
std::size_t dot(const BinaryVector& a, const BinaryVector& b);

/// Row-major bit-packed n x m matrix over {0,1}.
///
/// Every row occupies words_per_row() words; bits past cols() in the last
/// word of a row are always zero, so word-level popcounts never need masking.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  /// Small literal constructor, mostly for tests: {{1,0},{0,1}}.
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BinaryMatrix ones(std::size_t rows, std::size_t cols);
  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool v = true) {
    word_t& w = bits_[i * wpr_ + j / kWordBits];
    const word_t bit = word_t{1} << (j % kWordBits);
    if (v)
      w |= bit;
    else
      w &= ~bit;
  }

  std::span<const word_t> row_words(std::size_t i) const {
    return {bits_.data() + i * wpr_, wpr_};
  }
  std::span<word_t> row_words(std::size_t i) { return {bits_.data() + i * wpr_, wpr_}; }

  BinaryVector row(std::size_t i) const;
  BinaryVector column(std::size_t j) const;
  void set_row(std::size_t i, const BinaryVector& v);

  /// Number of ones, |X|.
  std::size_t count() const { return popcount_words(bits_); }

  /// Same matrix with every entry negated (padding stays zero).
  BinaryMatrix complement() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<word_t> bits_;
};

enum class BoolOp { And, Or, Xor };

/// X_ij = OR_l (A_il AND B_lj).
BinaryMatrix bool_product(const BinaryMatrix& a, const BinaryMatrix& b);

/// Entrywise AND / OR / XOR of two same-shape matrices. XOR is the Boolean
/// difference: 1 exactly where the operands disagree.
BinaryMatrix elementwise(BoolOp op, const BinaryMatrix& a, const BinaryMatrix& b);

/// Outer product a b^T: entry (i,j) = a_i AND b_j.
BinaryMatrix rank1_product(const BinaryVector& a, const BinaryVector& b);

struct AxisSums {
  std::vector<std::size_t> row_sums;
  std::vector<std::size_t> col_sums;
};

AxisSums axis_sums(const BinaryMatrix& x);

/// Row/column orderings that put a matrix into upper-triangular-like form:
/// row sums non-increasing and column sums non-decreasing over the active
/// block. Active (non-zero) lines come first in each order; all-zero lines
/// follow and are excluded from n_active / m_active.
struct UtlView {
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
  std::size_t n_active = 0;
  std::size_t m_active = 0;
};

UtlView utl_rearrange(const BinaryMatrix& x);
UtlView utl_rearrange(const AxisSums& sums);

/// Materializes x read through the view's orderings (all rows and columns).
BinaryMatrix permute(const BinaryMatrix& x, const UtlView& view);

/// gamma(A,B;X) = |X XOR (A (x) B)|. k = 0 is allowed and gives |X|.
std::size_t cost_gamma(const BinaryMatrix& a, const BinaryMatrix& b, const BinaryMatrix& x);

/// gamma(a,b;X) for a single rank-1 pattern, without materializing a b^T.
std::size_t pattern_cost(const BinaryVector& a, const BinaryVector& b, const BinaryMatrix& x);

/// Number of ones of x inside the submatrix a x b.
std::size_t covered_ones(const BinaryVector& a, const BinaryVector& b, const BinaryMatrix& x);

/// Zeroes every entry of x inside the submatrix a x b.
void clear_pattern(BinaryMatrix& x, const BinaryVector& a, const BinaryVector& b);

/// Sets every entry of x inside the submatrix a x b.
void fill_pattern(BinaryMatrix& x, const BinaryVector& a, const BinaryVector& b);

}  // namespace mebf
