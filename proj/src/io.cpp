#include "lcpcert/io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "lcpcert/errors.hpp"

namespace lcpcert {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

// Splits on whitespace and, when `comma` is set, on commas as well. Empty
// fields between consecutive commas are reported as ParseError.
std::vector<Token> tokenize(std::string_view text, bool comma) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  bool expect_field = false;  // a comma was seen and no token has followed yet
  std::size_t comma_line = 0;
  std::size_t comma_col = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      if (expect_field) throw ParseError(comma_line, comma_col, "empty field after comma");
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (is_space(c)) {
      ++col;
      ++i;
      continue;
    }
    if (comma && c == ',') {
      if (expect_field) throw ParseError(line, col, "empty field");
      if (out.empty() || out.back().line != line) throw ParseError(line, col, "empty field");
      expect_field = true;
      comma_line = line;
      comma_col = col;
      ++col;
      ++i;
      continue;
    }
    const std::size_t start = i;
    const std::size_t start_col = col;
    while (i < text.size() && !is_space(text[i]) && !(comma && text[i] == ',')) {
      ++i;
      ++col;
    }
    out.push_back({text.substr(start, i - start), line, start_col});
    expect_field = false;
  }
  if (expect_field) throw ParseError(comma_line, comma_col, "empty field after comma");
  return out;
}

std::int64_t parse_integer(std::string_view s, std::size_t line, std::size_t column) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, column, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool blank(std::string_view text) {
  for (char c : text)
    if (!is_space(c)) return false;
  return true;
}

std::size_t parse_dimension(const Token& t) {
  const std::int64_t n = parse_integer(t.text, t.line, t.column);
  if (n <= 0) throw ParseError(t.line, t.column, "dimension must be a positive integer");
  return static_cast<std::size_t>(n);
}

}  // namespace

double parse_number(std::string_view token, std::size_t line, std::size_t column) {
  if (token.empty()) throw ParseError(line, column, "empty number");
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    const std::int64_t p = parse_integer(token.substr(0, slash), line, column);
    const std::int64_t q = parse_integer(token.substr(slash + 1), line, column + slash + 1);
    if (q <= 0) throw ParseError(line, column + slash + 1, "fraction denominator must be positive");
    return static_cast<double>(p) / static_cast<double>(q);
  }
  std::string_view s = token;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw ParseError(line, column, "invalid number '" + std::string(token) + "'");
  }
  return v;
}

Matrix parse_matrix_text(std::string_view text, const std::string& source) {
  if (blank(text)) throw EmptyFile(source);

  if (text.find(',') != std::string_view::npos) {
    const std::vector<Token> tokens = tokenize(text, true);
    std::vector<std::vector<double>> rows;
    std::size_t current_line = 0;
    for (const Token& t : tokens) {
      if (rows.empty() || t.line != current_line) {
        rows.emplace_back();
        current_line = t.line;
      }
      rows.back().push_back(parse_number(t.text, t.line, t.column));
    }
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw NonSquare("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                        " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return Matrix(n, std::move(flat));
  }

  const std::vector<Token> tokens = tokenize(text, false);
  const std::size_t n = parse_dimension(tokens.front());
  if (tokens.size() - 1 != n * n) {
    throw NonSquare("expected " + std::to_string(n * n) + " entries for n = " +
                    std::to_string(n) + ", found " + std::to_string(tokens.size() - 1));
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    flat.push_back(parse_number(tokens[k].text, tokens[k].line, tokens[k].column));
  }
  return Matrix(n, std::move(flat));
}

Matrix parse_matrix(const std::string& path) { return parse_matrix_text(read_file(path), path); }

Vector parse_vector_text(std::string_view text, const std::string& source) {
  if (blank(text)) throw EmptyFile(source);
  const bool csv = text.find(',') != std::string_view::npos;
  const std::vector<Token> tokens = tokenize(text, csv);
  Vector out;
  if (csv) {
    for (const Token& t : tokens) out.push_back(parse_number(t.text, t.line, t.column));
    return out;
  }
  const std::size_t n = parse_dimension(tokens.front());
  if (tokens.size() - 1 != n) {
    const Token& last = tokens.back();
    throw ParseError(last.line, last.column,
                     "expected " + std::to_string(n) + " entries, found " +
                         std::to_string(tokens.size() - 1));
  }
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    out.push_back(parse_number(tokens[k].text, tokens[k].line, tokens[k].column));
  }
  return out;
}

Vector parse_vector(const std::string& path) { return parse_vector_text(read_file(path), path); }

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace lcpcert
