#pragma once

// Line-oriented text formats shared by triple systems and digraphs.
//
//   points <n>          vertices <n>
//   <p> <q> <r> <+|->   <u> <v>
//
// '#' starts a comment and blank lines are ignored. Serialization is
// canonical: sorted entries, one per line.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ccsys/errors.hpp"
#include "ccsys/triple_core.hpp"

namespace ccsys {

namespace detail {

struct TokenLine {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Splits text into non-empty, comment-stripped lines of whitespace tokens.
inline std::vector<TokenLine> tokenize_lines(std::string_view text) {
  std::vector<TokenLine> out;
  std::size_t line_no = 0;
  for (;;) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    TokenLine tl{line_no, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      const auto start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) tl.tokens.push_back(line.substr(start, pos - start));
    }
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    if (eol == std::string_view::npos) break;
  }
  return out;
}

inline int parse_int(std::string_view tok, std::size_t line, const char* what) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  return v;
}

inline int parse_header(const std::vector<TokenLine>& lines, std::string_view keyword) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + " <n>' header");
  const auto& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword)
    throw ParseError(h.number, "expected '" + std::string(keyword) + " <n>' header");
  const int n = parse_int(h.tokens[1], h.number, "count");
  if (n < 0 || n > kMaxPoints)
    throw ParseError(h.number, "count must lie in 0.." + std::to_string(kMaxPoints));
  return n;
}

}  // namespace detail

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline PartialTripleSystem parse_system(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  const int n = detail::parse_header(lines, "points");
  PartialTripleSystem s(n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    if (l.tokens.size() != 4)
      throw ParseError(l.number, "expected '<p> <q> <r> <+|->'");
    const OrientedTriple t{detail::parse_int(l.tokens[0], l.number, "point"),
                           detail::parse_int(l.tokens[1], l.number, "point"),
                           detail::parse_int(l.tokens[2], l.number, "point")};
    const auto sign = l.tokens[3];
    if (sign != "+" && sign != "-")
      throw ParseError(l.number, "sign column must be '+' or '-', got '" + std::string(sign) + "'");
    try {
      s.set(t, sign == "+");
    } catch (const ConflictingAssignment& e) {
      throw ConflictingAssignment("line " + std::to_string(l.number) + ": " + e.what(), l.number);
    } catch (const InvalidTriple& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return s;
}

inline std::string serialize_system(const PartialTripleSystem& s) {
  std::ostringstream out;
  out << "points " << s.size() << '\n';
  const auto triples = canonical_triples(s.size());
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto sign = s.canonical_sign(r);
    if (!sign) continue;
    out << triples[r].i << ' ' << triples[r].j << ' ' << triples[r].k << ' '
        << sign_char(*sign) << '\n';
  }
  return out.str();
}

}  // namespace ccsys
