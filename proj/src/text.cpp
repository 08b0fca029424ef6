#include "integrable/text.hpp"

#include <cctype>

namespace integrable::text {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  int signed_int() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    std::string d = digits();
    long v = std::stol(d);
    return static_cast<int>(neg ? -v : v);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected symbol");
    return std::string(s_.substr(start, pos_ - start));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Term> parse_sum(std::string_view input) {
  Lexer lex(input);
  std::vector<Term> out;
  if (lex.done()) lex.fail("empty input");
  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    if (lex.accept('-')) negative = true;
    else if (!lex.accept('+') && !first) lex.fail("expected '+' or '-'");
    first = false;

    Term term;
    bool more = true;
    while (more) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lex.digits();
        if (lex.accept('/')) num += "/" + lex.digits();
        term.scalar *= parse_rational(num);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        Factor f;
        f.symbol = lex.identifier();
        if (lex.accept('^')) f.exponent = lex.signed_int();
        term.factors.push_back(std::move(f));
      } else {
        lex.fail("expected factor");
      }
      more = lex.accept('*');
    }
    if (negative) term.scalar = -term.scalar;
    out.push_back(std::move(term));
  }
  return out;
}

void append_power(std::string& out, std::string_view base, int exponent) {
  out += base;
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

}  // namespace integrable::text
