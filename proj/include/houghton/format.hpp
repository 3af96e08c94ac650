// Text round-tripping for points, permutations, elements, words, and
// lattices.  Printers live next to their types; the parsers live here.
#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/errors.hpp"
#include "houghton/lattice.hpp"
#include "houghton/perm.hpp"
#include "houghton/point.hpp"
#include "houghton/word.hpp"

namespace houghton {
namespace detail {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(errc::parse_error, std::string("expected '") + c + "' at offset " +
                                  std::to_string(pos) + " in \"" +
                                  std::string(s) + "\"");
  }
  bool eat_str(std::string_view lit) {
    skip_ws();
    if (s.substr(pos, lit.size()) == lit) {
      pos += lit.size();
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      fail(errc::parse_error, "expected an integer at offset " +
                                  std::to_string(start) + " in \"" +
                                  std::string(s) + "\"");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start)
      fail(errc::parse_error,
           "expected a name at offset " + std::to_string(start));
    return std::string(s.substr(start, pos - start));
  }
};

// One point inside a cycle: "(r,i)" in ray mode, a bare integer in line mode.
inline Point cycle_item(Cursor& c) {
  if (c.peek() == '(') {
    c.expect('(');
    std::int64_t ray = c.integer();
    c.expect(',');
    std::int64_t idx = c.integer();
    c.expect(')');
    if (ray < 1 || ray > 1000000)
      fail(errc::parse_error, "ray number out of range");
    return ray_point(static_cast<int>(ray), idx);
  }
  return line_point(c.integer());
}

inline std::vector<Cycle> cycles(Cursor& c) {
  std::vector<Cycle> out;
  bool any = false;
  while (c.peek() == '(') {
    c.expect('(');
    any = true;
    if (c.eat(')')) continue;  // "()" contributes nothing
    Cycle cyc;
    cyc.push_back(cycle_item(c));
    while (c.eat(',')) cyc.push_back(cycle_item(c));
    c.expect(')');
    out.push_back(std::move(cyc));
  }
  if (!any) fail(errc::parse_error, "expected a cycle");
  return out;
}

}  // namespace detail

// "ray:index", or a bare integer when line mode is requested.
inline Point parse_point(const std::string& text, bool line_mode = false) {
  detail::Cursor c{text};
  if (line_mode) {
    std::int64_t v = c.integer();
    if (!c.eof()) fail(errc::parse_error, "trailing input after point");
    return line_point(v);
  }
  std::int64_t ray = c.integer();
  c.expect(':');
  std::int64_t idx = c.integer();
  if (!c.eof()) fail(errc::parse_error, "trailing input after point");
  if (ray < 1 || ray > 1000000) fail(errc::parse_error, "ray number out of range");
  return ray_point(static_cast<int>(ray), idx);
}

inline std::string format_point(const Point& p) {
  if (is_line(p)) return std::to_string(p.index);
  return std::to_string(p.ray) + ":" + std::to_string(p.index);
}

// "((1,1),(1,2))((2,3),(2,4))" in ray mode, "(0,1,2)" in line mode,
// "()" for the identity.
inline FinitePermutation parse_perm(const std::string& text) {
  detail::Cursor c{text};
  auto cyc = detail::cycles(c);
  if (!c.eof()) fail(errc::parse_error, "trailing input after permutation");
  return FinitePermutation::from_cycles(cyc);
}

// "H[n=3; s=(1,-1,0); {(2,1)->(1,1)}]"
inline HoughtonElement parse_element(const std::string& text) {
  detail::Cursor c{text};
  if (!c.eat_str("H[")) fail(errc::parse_error, "element must start with H[");
  if (!c.eat_str("n=")) fail(errc::parse_error, "expected n=");
  std::int64_t n = c.integer();
  if (n < 2 || n > 1000000) fail(errc::parse_error, "ambient n out of range");
  c.expect(';');
  if (!c.eat_str("s=")) fail(errc::parse_error, "expected s=");
  c.expect('(');
  std::vector<std::int64_t> shifts;
  shifts.push_back(c.integer());
  while (c.eat(',')) shifts.push_back(c.integer());
  c.expect(')');
  c.expect(';');
  c.expect('{');
  std::map<Point, Point> table;
  if (!c.eat('}')) {
    do {
      Point k = detail::cycle_item(c);
      if (!c.eat_str("->")) fail(errc::parse_error, "expected ->");
      Point v = detail::cycle_item(c);
      table[k] = v;
    } while (c.eat(','));
    c.expect('}');
  }
  c.expect(']');
  if (!c.eof()) fail(errc::parse_error, "trailing input after element");
  return HoughtonElement::from_parts(static_cast<int>(n), std::move(shifts),
                                     table);
}

// Letters separated by whitespace or '*': g-letters "g3", "g3^-2",
// permutation letters "p((1,1),(1,2))", named letters "alpha^2", "1".
inline GroupWord parse_word(const std::string& text) {
  detail::Cursor c{text};
  GroupWord w;
  while (!c.eof()) {
    if (c.eat('*')) continue;
    WordTerm t;
    char ch = c.peek();
    if (!std::isalpha(static_cast<unsigned char>(ch)) && ch != '_' &&
        ch != '1')
      fail(errc::parse_error, std::string("unexpected character '") + ch +
                                  "' in word \"" + text + "\"");
    if (ch == '1') {
      ++c.pos;
      continue;  // identity letter
    }
    std::string name = c.identifier();
    if (name == "p" && c.peek() == '(') {
      t.kind = WordTerm::Kind::perm;
      t.perm = FinitePermutation::from_cycles(detail::cycles(c));
    } else if (name.size() >= 2 && name[0] == 'g' &&
               std::isdigit(static_cast<unsigned char>(name[1]))) {
      std::size_t used = 0;
      unsigned long k = std::stoul(name.substr(1), &used);
      if (used + 1 != name.size())
        fail(errc::parse_error, "bad generator letter " + name);
      if (k < 2 || k > 1000000)
        fail(errc::parse_error, "generator index out of range in " + name);
      t.kind = WordTerm::Kind::generator;
      t.gen_index = static_cast<int>(k);
    } else {
      t.kind = WordTerm::Kind::named;
      t.name = name;
    }
    if (c.eat('^')) t.exponent = c.integer();
    w.terms.push_back(std::move(t));
  }
  return w;
}

// Rows separated by ';', entries by ','.  All rows must share one length.
inline LatticeBasis parse_lattice(const std::string& text) {
  detail::Cursor c{text};
  std::vector<LatRow> rows;
  do {
    LatRow row;
    row.push_back(c.integer());
    while (c.eat(',')) row.push_back(c.integer());
    rows.push_back(std::move(row));
  } while (c.eat(';'));
  if (!c.eof()) fail(errc::parse_error, "trailing input after lattice");
  const int dim = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      fail(errc::parse_error, "lattice rows of unequal length");
  return lat_make(dim, std::move(rows));
}

inline std::string format_lattice(const LatticeBasis& b) {
  std::string out;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < b.rows[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(b.rows[i][j]);
    }
  }
  return out;
}

}  // namespace houghton
