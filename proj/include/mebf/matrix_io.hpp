#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mebf/bit_matrix.hpp"

namespace mebf {

/// Dense row-major matrix of finite reals.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }

  const std::vector<double>& values() const { return v_; }

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

/// dense01: one row per line of '0'/'1', optionally separated by single
///          spaces, LF line endings.
/// coo:     header "n m nnz" then nnz lines "i j" (1-based, value 1),
///          duplicates rejected.
/// csv:     unquoted comma-separated numbers, '.' as decimal separator.
enum class MatrixFormat { Dense01, Coo, Csv };

MatrixFormat parse_format(std::string_view name);
std::string_view format_name(MatrixFormat f);

/// Malformed input; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line), detail_(msg) {}
  ParseError(const std::string& source, std::size_t line, const std::string& msg)
      : std::runtime_error(source + ": line " + std::to_string(line) + ": " + msg),
        line_(line),
        detail_(msg) {}

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BinaryMatrix parse_dense01(std::istream& in);
BinaryMatrix parse_coo(std::istream& in);
RealMatrix parse_csv(std::istream& in);

void format_dense01(std::ostream& out, const BinaryMatrix& x);
void format_coo(std::ostream& out, const BinaryMatrix& x);
void format_csv(std::ostream& out, const RealMatrix& x);
void format_csv(std::ostream& out, const BinaryMatrix& x);

/// dense01 and coo give a BinaryMatrix, csv a RealMatrix.
std::variant<BinaryMatrix, RealMatrix> read_matrix(const std::filesystem::path& path,
                                                   MatrixFormat format);

/// Reads a binary matrix in any format; csv input is binarized at `threshold`.
BinaryMatrix read_binary(const std::filesystem::path& path, MatrixFormat format,
                         double threshold = 0.0);

void write_matrix(const BinaryMatrix& x, const std::filesystem::path& path,
                  MatrixFormat format);
void write_matrix(const RealMatrix& x, const std::filesystem::path& path);

/// Entry is 1 iff value > threshold (strict; the default threshold is 0).
BinaryMatrix binarize(const RealMatrix& r, double threshold = 0.0);

/// Keeps r_ij where (A (x) B)_ij = 1, zero elsewhere.
RealMatrix mask_denoise(const RealMatrix& r, const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace mebf
