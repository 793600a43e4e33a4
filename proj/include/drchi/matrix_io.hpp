#pragma once

#include "drchi/dr_matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace drchi {

/// Malformed matrix text. Line and column are one-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// message without the "line:column: " prefix
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses `matrix := row (';' | '\n' row)*`, `row := int (ws int)*`,
/// `int := '-'? [0-9]+`. Whitespace around rows is ignored and blank rows are
/// skipped. Throws ParseError for bad tokens, ragged rows or empty input, and
/// RowSumError when a row does not sum to zero.
DRMatrix parse_matrix(std::string_view text);

struct Paragraph {
  std::string text;
  /// one-based line of the paragraph's first line in the source
  std::size_t first_line = 1;
};

/// Splits batch input into blank-line separated paragraphs.
std::vector<Paragraph> split_paragraphs(std::string_view text);

}  // namespace drchi
