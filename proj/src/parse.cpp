#include "singulens/parse.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "singulens/errors.hpp"

namespace singulens {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(offset_ + pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      const auto e = natural("exponent");
      if (e > std::numeric_limits<unsigned>::max()) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial rational() {
    const std::string numerator = digits();
    Rational value(numerator);
    skip_space();
    // A '/' only continues the literal when a positive integer follows.
    if (accept('/')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected denominator");
      }
      const std::string denominator = digits();
      mpz_class den(denominator);
      if (den == 0) fail("zero denominator");
      value = Rational(mpz_class(numerator), den);
      value.canonicalize();
    }
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
      fail("expected '*' between factors");
    }
    return Polynomial::constant(ring_, value);
  }

  Polynomial identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == kAuxiliaryVariable) {
      pos_ = start;
      fail("identifier '" + std::string(name) + "' is reserved");
    }
    const auto index = ring_.index_of(name);
    if (!index) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    skip_space();
    if (pos_ < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
      fail("expected '*' between factors");
    }
    return Polynomial::variable(ring_, *index);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t natural(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 9) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return std::stoull(d);
  }

  std::string_view text_;
  const RingContext& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingContext& ring) {
  return Parser(text, ring, 0).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingContext& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(Parser(text.substr(start, i - start), ring, start).parse());
      start = i + 1;
    }
  }
  return out;
}

std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Polynomial q = p.with_order(MonomialOrder::grevlex());
  const auto& names = q.ring().names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : q.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    bool wrote = false;
    if (magnitude != 1 || t.exponents.is_zero()) {
      os << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exponents.arity(); ++i) {
      const auto e = t.exponents[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << print(p); }

}  // namespace singulens
