#include "drchi/matrix_io.hpp"

#include <cctype>

namespace drchi {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      detail_(what),
      line_(line),
      column_(column) {}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

DRMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::size_t expected_cols = 0;
  std::size_t line = 1, column = 1;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::vector<BigInt> row;
    const std::size_t row_line = line, row_column = column;
    while (pos < text.size() && text[pos] != ';' && text[pos] != '\n') {
      const char c = text[pos];
      if (is_blank(c)) {
        ++pos;
        ++column;
        continue;
      }
      const std::size_t start = pos;
      if (c == '-') {
        ++pos;
        ++column;
      }
      const std::size_t digits = pos;
      while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
        ++column;
      }
      if (pos == digits)
        throw ParseError(line, column,
                         pos < text.size() ? std::string("unexpected character '") + text[pos] + "'"
                                           : std::string("expected digits"));
      if (pos < text.size() && !is_blank(text[pos]) && text[pos] != ';' && text[pos] != '\n')
        throw ParseError(line, column, std::string("unexpected character '") + text[pos] + "'");
      row.emplace_back(std::string(text.substr(start, pos - start)), 10);
    }
    if (!row.empty()) {
      if (rows.empty()) {
        expected_cols = row.size();
      } else if (row.size() != expected_cols) {
        throw ParseError(row_line, row_column,
                         "ragged row " + std::to_string(rows.size() + 1) + ": " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(expected_cols));
      }
      rows.push_back(std::move(row));
    }
    if (pos >= text.size()) break;
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }
  if (rows.empty()) throw ParseError(line, column, "empty matrix");
  return DRMatrix::validate(rows);
}

std::vector<Paragraph> split_paragraphs(std::string_view text) {
  std::vector<Paragraph> out;
  Paragraph current;
  bool open = false;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view content = text.substr(pos, end - pos);
    bool blank = true;
    for (char c : content)
      if (!is_blank(c)) blank = false;
    if (blank) {
      if (open) out.push_back(std::move(current));
      current = {};
      open = false;
    } else {
      if (!open) current.first_line = line;
      else current.text += '\n';
      current.text += content;
      open = true;
    }
    pos = end + 1;
    ++line;
  }
  if (open) out.push_back(std::move(current));
  return out;
}

}  // namespace drchi
