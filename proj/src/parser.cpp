#include <cctype>

#include "lindlehmer/errors.hpp"
#include "lindlehmer/poly.hpp"

namespace lindlehmer {

namespace {

constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 20;

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' integer)?
// primary := integer | variable | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  IntPolynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    IntPolynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPolynomial expr() {
    IntPolynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntPolynomial term() {
    IntPolynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  IntPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  IntPolynomial power() {
    IntPolynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected nonnegative integer exponent", pos_);
    }
    std::uint64_t e = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (e > kMaxExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    return base.pow(static_cast<std::uint32_t>(e));
  }

  IntPolynomial primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return IntPolynomial::constant(num_vars_, BigInt(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      std::size_t start = pos_++;
      std::size_t index = 0;
      if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          index = index * 10 + static_cast<std::size_t>(text_[pos_] - '0');
          if (index > 1000) throw ParseError("variable index too large", start);
          ++pos_;
        }
        if (index == 0) throw ParseError("variables are numbered from x1", start);
      } else {
        index = static_cast<std::size_t>(c - 'x') + 1;
      }
      if (index > num_vars_) {
        throw ParseError("variable " + std::string(text_.substr(start, pos_ - start)) +
                             " exceeds the " + std::to_string(num_vars_) + " available variables",
                         start);
      }
      return IntPolynomial::variable(num_vars_, index - 1);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
  if (num_vars == 0) throw InvalidArgument("polynomial needs at least one variable");
  return Parser(text, num_vars).parse();
}

}  // namespace lindlehmer
