#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heckelab/errors.hpp"

namespace heckelab {

using Int = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in one variable v with arbitrary-precision
/// integer coefficients. Terms are kept sorted by exponent; zero
/// coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long long c) {
    if (c != 0) terms_.emplace_back(0, Int(c));
  }
  LaurentPoly(Int c) {
    if (c != 0) terms_.emplace_back(0, std::move(c));
  }

  static LaurentPoly monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
  }

  /// v^exp
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<int, Int>>& terms() const { return terms_; }

  Int coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return Int(0);
  }

  int min_exp() const { return terms_.front().first; }
  int max_exp() const { return terms_.back().first; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    merge(o, +1);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    merge(o, -1);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<int, Int> acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Deterministic rendering, monomials by ascending exponent, e.g.
  /// "v^-1 - v", "2·v^3 + 1", "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          os << '-';
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      write_monomial(os, a, e);
      first = false;
    }
    return os.str();
  }

  /// Inverse of str(); also accepts '*' for the multiplication dot.
  static LaurentPoly parse(std::string_view text);

private:
  static void write_monomial(std::ostringstream& os, const Int& abs_coeff, int e) {
    if (e == 0) {
      os << abs_coeff;
      return;
    }
    if (abs_coeff != 1) os << abs_coeff << "·";
    os << 'v';
    if (e != 1) os << '^' << e;
  }

  void merge(const LaurentPoly& o, int sign) {
    std::vector<std::pair<int, Int>> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, sign * o.terms_[j].second);
        ++j;
      } else {
        Int c = terms_[i].second + sign * o.terms_[j].second;
        if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<std::pair<int, Int>> terms_;
};

namespace detail {

/// Cursor over a Laurent/Hecke text expression. The multiplication dot is
/// UTF-8 (two bytes), so consumption helpers live here.
struct TextCursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_dot() {
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      return true;
    }
    if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xc2 &&
        static_cast<unsigned char>(s[pos + 1]) == 0xb7) {
      pos += 2;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  Int read_uint() {
    skip_ws();
    if (!peek_digit()) throw ParseError("expected integer at position " + std::to_string(pos));
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      digits += s[pos++];
    return Int(digits);
  }
  long read_int() {
    skip_ws();
    long sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    Int u = read_uint();
    return sign * static_cast<long>(u);
  }
};

/// monomial := int | [int ·] v [^ int]
inline LaurentPoly parse_laurent_monomial(TextCursor& c, int sign) {
  Int coeff = 1;
  bool have_coeff = false;
  if (c.peek_digit()) {
    coeff = c.read_uint();
    have_coeff = true;
    c.eat_dot();
  }
  if (c.peek() == 'v') {
    c.eat('v');
    int e = 1;
    if (c.eat('^')) e = static_cast<int>(c.read_int());
    return LaurentPoly::monomial(sign * coeff, e);
  }
  if (!have_coeff) throw ParseError("expected monomial at position " + std::to_string(c.pos));
  return LaurentPoly::monomial(sign * coeff, 0);
}

inline LaurentPoly parse_laurent_body(TextCursor& c) {
  LaurentPoly out;
  int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  out += parse_laurent_monomial(c, sign);
  while (true) {
    c.skip_ws();
    if (c.eat('+'))
      sign = 1;
    else if (c.eat('-'))
      sign = -1;
    else
      break;
    out += parse_laurent_monomial(c, sign);
  }
  return out;
}

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
  detail::TextCursor c{text};
  if (c.done()) throw ParseError("empty Laurent polynomial");
  if (c.peek() == '0') {
    std::size_t save = c.pos;
    c.eat('0');
    if (c.done()) return {};
    c.pos = save;
  }
  LaurentPoly p = detail::parse_laurent_body(c);
  if (!c.done()) throw ParseError("trailing junk in Laurent polynomial: '" + std::string(text) + "'");
  return p;
}

}  // namespace heckelab
