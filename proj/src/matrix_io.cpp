#include "mebf/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace mebf {

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : RealMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("RealMatrix: ragged initializer");
    std::size_t j = 0;
    for (double v : r) (*this)(i, j++) = v;
    ++i;
  }
}

MatrixFormat parse_format(std::string_view name) {
  if (name == "dense01") return MatrixFormat::Dense01;
  if (name == "coo") return MatrixFormat::Coo;
  if (name == "csv") return MatrixFormat::Csv;
  throw std::invalid_argument("unknown matrix format '" + std::string(name) +
                              "' (expected dense01, coo or csv)");
}

std::string_view format_name(MatrixFormat f) {
  switch (f) {
    case MatrixFormat::Dense01: return "dense01";
    case MatrixFormat::Coo: return "coo";
    case MatrixFormat::Csv: return "csv";
  }
  return "?";
}

namespace {

// Strict unsigned parse of a whole token.
bool parse_count(std::string_view tok, std::size_t& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) toks.push_back(line.substr(start, i - start));
  }
  return toks;
}

void reject_cr(std::string_view line, std::size_t lineno) {
  if (line.find('\r') != std::string_view::npos)
    throw ParseError(lineno, "carriage return found; expected LF line endings");
}

void append_double(std::string& s, double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("failed to format number");
  s.append(buf, p);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

template <typename F>
auto with_path(const std::filesystem::path& path, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.line(), e.detail());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// dense01

BinaryMatrix parse_dense01(std::istream& in) {
  std::vector<BinaryVector> rows;
  std::size_t cols = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    reject_cr(line, lineno);
    std::vector<bool> bits;
    bool want_digit = true;
    for (char c : line) {
      if (c == '0' || c == '1') {
        bits.push_back(c == '1');
        want_digit = false;
      } else if (c == ' ' && !want_digit) {
        want_digit = true;
      } else {
        throw ParseError(lineno, std::string("unexpected character '") + c + "' in dense01 row");
      }
    }
    if (want_digit && !bits.empty()) throw ParseError(lineno, "trailing space in dense01 row");
    if (lineno == 1)
      cols = bits.size();
    else if (bits.size() != cols)
      throw ParseError(lineno, "row has " + std::to_string(bits.size()) + " entries, expected " +
                                   std::to_string(cols));
    BinaryVector v(cols);
    for (std::size_t j = 0; j < bits.size(); ++j) v.set(j, bits[j]);
    rows.push_back(std::move(v));
  }
  BinaryMatrix x(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) x.set_row(i, rows[i]);
  return x;
}

void format_dense01(std::ostream& out, const BinaryMatrix& x) { out << x.to_string(); }

// ---------------------------------------------------------------------------
// coo

BinaryMatrix parse_coo(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing coo header 'n m nnz'");
  reject_cr(line, 1);
  const auto head = split_ws(line);
  std::size_t n = 0, m = 0, nnz = 0;
  if (head.size() != 3 || !parse_count(head[0], n) || !parse_count(head[1], m) ||
      !parse_count(head[2], nnz))
    throw ParseError(1, "malformed coo header, expected 'n m nnz'");

  BinaryMatrix x(n, m);
  std::size_t lineno = 1;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    reject_cr(line, lineno);
    const auto toks = split_ws(line);
    std::size_t i = 0, j = 0;
    if (toks.size() != 2 || !parse_count(toks[0], i) || !parse_count(toks[1], j))
      throw ParseError(lineno, "malformed coordinate line, expected 'i j'");
    if (i < 1 || i > n || j < 1 || j > m)
      throw ParseError(lineno, "coordinate (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") outside " + std::to_string(n) + "x" + std::to_string(m));
    if (x.get(i - 1, j - 1))
      throw ParseError(lineno, "duplicate coordinate (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
    x.set(i - 1, j - 1);
    ++seen;
  }
  if (seen != nnz)
    throw ParseError(lineno, "header declares " + std::to_string(nnz) + " entries, found " +
                                 std::to_string(seen));
  return x;
}

void format_coo(std::ostream& out, const BinaryMatrix& x) {
  std::string s = std::to_string(x.rows()) + " " + std::to_string(x.cols()) + " " +
                  std::to_string(x.count()) + "\n";
  for (std::size_t i = 0; i < x.rows(); ++i)
    for_each_set_bit(x.row_words(i), [&](std::size_t j) {
      s += std::to_string(i + 1);
      s += ' ';
      s += std::to_string(j + 1);
      s += '\n';
    });
  out << s;
}

// ---------------------------------------------------------------------------
// csv

RealMatrix parse_csv(std::istream& in) {
  std::vector<double> values;
  std::size_t rows = 0, cols = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    reject_cr(line, lineno);
    std::size_t fields = 0;
    if (!line.empty()) {
      std::string_view rest(line);
      while (true) {
        const std::size_t comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        double v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
          throw ParseError(lineno, "field " + std::to_string(fields + 1) + " is not a number: '" +
                                       std::string(tok) + "'");
        if (!std::isfinite(v))
          throw ParseError(lineno, "field " + std::to_string(fields + 1) + " is not finite");
        values.push_back(v);
        ++fields;
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
    if (lineno == 1)
      cols = fields;
    else if (fields != cols)
      throw ParseError(lineno, "row has " + std::to_string(fields) + " fields, expected " +
                                   std::to_string(cols));
    ++rows;
  }
  RealMatrix r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = values[i * cols + j];
  return r;
}

void format_csv(std::ostream& out, const RealMatrix& x) {
  std::string s;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (j > 0) s += ',';
      append_double(s, x(i, j));
    }
    s += '\n';
  }
  out << s;
}

void format_csv(std::ostream& out, const BinaryMatrix& x) {
  std::string s;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (j > 0) s += ',';
      s += x.get(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  out << s;
}

// ---------------------------------------------------------------------------
// files

std::variant<BinaryMatrix, RealMatrix> read_matrix(const std::filesystem::path& path,
                                                   MatrixFormat format) {
  std::ifstream in = open_in(path);
  return with_path(path, [&]() -> std::variant<BinaryMatrix, RealMatrix> {
    switch (format) {
      case MatrixFormat::Dense01: return parse_dense01(in);
      case MatrixFormat::Coo: return parse_coo(in);
      case MatrixFormat::Csv: return parse_csv(in);
    }
    throw std::invalid_argument("bad format");
  });
}

BinaryMatrix read_binary(const std::filesystem::path& path, MatrixFormat format,
                         double threshold) {
  auto m = read_matrix(path, format);
  if (auto* r = std::get_if<RealMatrix>(&m)) return binarize(*r, threshold);
  return std::get<BinaryMatrix>(std::move(m));
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void write_matrix(const BinaryMatrix& x, const std::filesystem::path& path,
                  MatrixFormat format) {
  std::ostringstream os;
  switch (format) {
    case MatrixFormat::Dense01: format_dense01(os, x); break;
    case MatrixFormat::Coo: format_coo(os, x); break;
    case MatrixFormat::Csv: format_csv(os, x); break;
  }
  write_text(path, os.str());
}

void write_matrix(const RealMatrix& x, const std::filesystem::path& path) {
  std::ostringstream os;
  format_csv(os, x);
  write_text(path, os.str());
}

// ---------------------------------------------------------------------------
// binarization and masking

BinaryMatrix binarize(const RealMatrix& r, double threshold) {
  BinaryMatrix x(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) > threshold) x.set(i, j);
  return x;
}

RealMatrix mask_denoise(const RealMatrix& r, const BinaryMatrix& a, const BinaryMatrix& b) {
  const BinaryMatrix support = bool_product(a, b);
  if (support.rows() != r.rows() || support.cols() != r.cols())
    throw ShapeError("mask_denoise: A (x) B is " + std::to_string(support.rows()) + "x" +
                     std::to_string(support.cols()) + " but the matrix is " +
                     std::to_string(r.rows()) + "x" + std::to_string(r.cols()));
  RealMatrix out(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for_each_set_bit(support.row_words(i), [&](std::size_t j) { out(i, j) = r(i, j); });
  return out;
}

}  // namespace mebf
