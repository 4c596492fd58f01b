#pragma once

#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "picgram/error.hpp"
#include "picgram/symbol.hpp"

namespace picgram {

/// Rectangular array of symbols, indexed 1-based as (row, column).
/// Both dimensions are at least one; the empty picture is not representable.
class Picture {
 public:
  Picture(std::size_t rows, std::size_t cols, Symbol fill) : rows_(rows), cols_(cols), cells_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw Error(errc::empty_picture, "picture dimensions must be positive");
  }

  Picture(std::size_t rows, std::size_t cols, std::vector<Symbol> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows == 0 || cols == 0) throw Error(errc::empty_picture, "picture dimensions must be positive");
    if (cells_.size() != rows * cols) throw Error(errc::out_of_range, "cell count does not match dimensions");
  }

  static Picture from_rows(const std::vector<std::vector<Symbol>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(errc::empty_picture, "picture has no cells");
    std::vector<Symbol> cells;
    for (const auto& row : rows) {
      if (row.size() != rows.front().size()) throw Error(errc::column_mismatch, "ragged picture rows");
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return Picture(rows.size(), rows.front().size(), std::move(cells));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t area() const noexcept { return cells_.size(); }
  const std::vector<Symbol>& cells() const noexcept { return cells_; }

  Symbol operator()(std::size_t i, std::size_t j) const { return cells_[(i - 1) * cols_ + (j - 1)]; }
  Symbol& operator()(std::size_t i, std::size_t j) { return cells_[(i - 1) * cols_ + (j - 1)]; }

  Symbol at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw Error(errc::out_of_range, "pixel (" + std::to_string(i) + "," + std::to_string(j) + ") outside picture");
    return (*this)(i, j);
  }

  bool is_homogeneous() const noexcept {
    for (Symbol s : cells_)
      if (s != cells_.front()) return false;
    return true;
  }

  friend auto operator<=>(const Picture&, const Picture&) = default;
  friend bool operator==(const Picture&, const Picture&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> cells_;
};

/// Column concatenation: `q` is appended to the right of `p`.
inline Picture hcat(const Picture& p, const Picture& q) {
  if (p.rows() != q.rows())
    throw Error(errc::row_mismatch, "column concatenation of pictures with " + std::to_string(p.rows()) + " and " +
                                        std::to_string(q.rows()) + " rows");
  std::vector<Symbol> cells;
  cells.reserve(p.area() + q.area());
  for (std::size_t i = 1; i <= p.rows(); ++i) {
    for (std::size_t j = 1; j <= p.cols(); ++j) cells.push_back(p(i, j));
    for (std::size_t j = 1; j <= q.cols(); ++j) cells.push_back(q(i, j));
  }
  return Picture(p.rows(), p.cols() + q.cols(), std::move(cells));
}

/// Row concatenation: `p` above `q`.
inline Picture vcat(const Picture& p, const Picture& q) {
  if (p.cols() != q.cols())
    throw Error(errc::column_mismatch, "row concatenation of pictures with " + std::to_string(p.cols()) + " and " +
                                           std::to_string(q.cols()) + " columns");
  std::vector<Symbol> cells = p.cells();
  cells.insert(cells.end(), q.cells().begin(), q.cells().end());
  return Picture(p.rows() + q.rows(), p.cols(), std::move(cells));
}

/// The picture framed by one ring of boundary symbols.
inline Picture bordered(const Picture& p) {
  Picture out(p.rows() + 2, p.cols() + 2, kBoundary);
  for (std::size_t i = 1; i <= p.rows(); ++i)
    for (std::size_t j = 1; j <= p.cols(); ++j) out(i + 1, j + 1) = p(i, j);
  return out;
}

/// Parses the on-disk format: one row per line, one character per pixel.
/// A single trailing newline is accepted; ragged, empty, or `#`-bearing input is not.
inline Picture parse_picture(std::string_view text) {
  std::vector<std::vector<Symbol>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (text.empty() && !rows.empty()) break;
      throw Error(errc::syntax, "line " + std::to_string(line_no) + ": empty picture row");
    }
    std::vector<Symbol> row;
    for (std::size_t col = 0; col < line.size(); ++col) {
      char c = line[col];
      if (!is_valid_terminal_char(c))
        throw Error(errc::alphabet, "line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) +
                                        ": invalid pixel character");
      row.push_back(terminal(c));
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(errc::syntax, "line " + std::to_string(line_no) + ": ragged picture row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(errc::empty_picture, "picture text is empty");
  return Picture::from_rows(rows);
}

/// Compact rendering with rows joined by `/`, e.g. "ab/ba"; the usual test notation.
inline Picture pic(std::string_view slash_rows) {
  std::string text(slash_rows);
  for (char& c : text)
    if (c == '/') c = '\n';
  return parse_picture(text);
}

inline std::string to_text(const Picture& p, const SymbolNamer& name = default_symbol_name,
                           std::string_view row_sep = "\n", std::string_view cell_sep = "") {
  std::ostringstream out;
  for (std::size_t i = 1; i <= p.rows(); ++i) {
    if (i > 1) out << row_sep;
    for (std::size_t j = 1; j <= p.cols(); ++j) {
      if (j > 1) out << cell_sep;
      out << name(p(i, j));
    }
  }
  return out.str();
}

inline std::string to_slash_text(const Picture& p) { return to_text(p, default_symbol_name, "/"); }

/// Every picture of the given size over `alphabet`, in lexicographic cell order.
inline std::vector<Picture> all_pictures(const std::vector<Symbol>& alphabet, std::size_t rows, std::size_t cols) {
  std::vector<Picture> out;
  if (alphabet.empty()) return out;
  std::vector<std::size_t> digits(rows * cols, 0);
  while (true) {
    std::vector<Symbol> cells(digits.size());
    for (std::size_t k = 0; k < digits.size(); ++k) cells[k] = alphabet[digits[k]];
    out.emplace_back(rows, cols, std::move(cells));
    std::size_t k = digits.size();
    while (k > 0 && ++digits[k - 1] == alphabet.size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace picgram
