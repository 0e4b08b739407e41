#include "twistkit/expr.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace twistkit {

namespace {

enum class Mode { poly, form, multivector };

enum class Tok { number, ident, basis, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;  // ident/number text; basis coordinate name for basis tokens
  int line;
  int col;
};

// One term of a graded expression: coefficient polynomial and the basis
// indices it multiplies (empty for scalar terms).
struct RawTerm {
  Polynomial coeff;
  std::vector<std::size_t> indices;
};

class Lexer {
 public:
  Lexer(const Chart& chart, std::string_view text, Mode mode)
      : chart_(chart), text_(text), mode_(mode) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.col);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      bump(text_[pos_]);
    }
    int line = line_, col = col_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, "", line, col};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      if (pos_ < text_.size() && text_[pos_] == '/') {
        bump('/');
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("expected digits after '/' in rational literal", line_, col_);
        }
        num += '/';
        num += take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      }
      current_ = {Tok::number, std::move(num), line, col};
      return;
    }
    if (c == '@') {
      bump(c);
      std::string name = take_ident();
      if (name.empty()) throw ParseError("expected coordinate name after '@'", line, col);
      if (mode_ != Mode::multivector) {
        throw ParseError("'@" + name + "' is a multivector basis token, not valid here", line, col);
      }
      if (!chart_.index_of(name)) {
        throw ParseError("'" + name + "' is not a coordinate of the chart", line, col);
      }
      current_ = {Tok::basis, std::move(name), line, col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = take_ident();
      // "dx1" is a form basis token when the chart has "x1" but not "dx1".
      if (mode_ == Mode::form && name.size() > 1 && name[0] == 'd' &&
          !chart_.index_of(name) && chart_.index_of(name.substr(1))) {
        current_ = {Tok::basis, name.substr(1), line, col};
        return;
      }
      current_ = {Tok::ident, std::move(name), line, col};
      return;
    }
    bump(c);
    switch (c) {
      case '+': current_ = {Tok::plus, "+", line, col}; return;
      case '-': current_ = {Tok::minus, "-", line, col}; return;
      case '*': current_ = {Tok::star, "*", line, col}; return;
      case '^': current_ = {Tok::caret, "^", line, col}; return;
      case '(': current_ = {Tok::lparen, "(", line, col}; return;
      case ')': current_ = {Tok::rparen, ")", line, col}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    std::string out;
    while (pos_ < text_.size() && pred(text_[pos_])) {
      out += text_[pos_];
      bump(text_[pos_]);
    }
    return out;
  }

  std::string take_ident() {
    return take_while([](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
  }

  void bump(char c) {
    ++pos_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  const Chart& chart_;
  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{Tok::end, "", 1, 1};
};

class Parser {
 public:
  Parser(const Chart& chart, std::string_view text, Mode mode)
      : chart_(chart), lex_(chart, text, mode) {}

  // Parses the whole input as a sum of raw terms.
  std::vector<RawTerm> parse_sum() {
    std::vector<RawTerm> terms;
    bool negate = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      negate = true;
    }
    terms.push_back(parse_term(negate, /*allow_basis=*/true));
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool neg = lex_.take().kind == Tok::minus;
      terms.push_back(parse_term(neg, /*allow_basis=*/true));
    }
    if (lex_.peek().kind != Tok::end) {
      lex_.fail("unexpected '" + lex_.peek().text + "'", lex_.peek());
    }
    return terms;
  }

 private:
  RawTerm parse_term(bool negate, bool allow_basis) {
    RawTerm t{Polynomial::constant(chart_, negate ? -1 : 1), {}};
    parse_factor(t, allow_basis);
    while (lex_.peek().kind == Tok::star) {
      lex_.take();
      parse_factor(t, allow_basis);
    }
    return t;
  }

  void parse_factor(RawTerm& term, bool allow_basis) {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::number: {
        lex_.take();
        term.coeff = term.coeff * Polynomial::constant(chart_, Rational(t.text));
        if (lex_.peek().kind == Tok::caret) {
          lex_.fail("exponent is only allowed on a coordinate", lex_.peek());
        }
        return;
      }
      case Tok::ident: {
        lex_.take();
        auto idx = chart_.index_of(t.text);
        if (!idx) lex_.fail("'" + t.text + "' is not a coordinate of the chart", t);
        Polynomial var = Polynomial::variable(chart_, *idx);
        unsigned exp = 1;
        if (lex_.peek().kind == Tok::caret) {
          lex_.take();
          Token e = lex_.take();
          if (e.kind != Tok::number || e.text.find('/') != std::string::npos) {
            lex_.fail("expected a nonnegative integer exponent", e);
          }
          try {
            exp = static_cast<unsigned>(std::stoul(e.text));
          } catch (const std::exception&) {
            lex_.fail("exponent out of range", e);
          }
        }
        for (unsigned k = 0; k < exp; ++k) term.coeff = term.coeff * var;
        return;
      }
      case Tok::basis: {
        if (!allow_basis) {
          lex_.fail("basis tokens are not allowed inside a parenthesized coefficient", t);
        }
        // A chain  dx1^dx2^...  (or @x1^@x2^...).
        term.indices.push_back(*chart_.index_of(lex_.take().text));
        while (lex_.peek().kind == Tok::caret) {
          lex_.take();
          Token b = lex_.take();
          if (b.kind != Tok::basis) lex_.fail("expected a basis token after '^'", b);
          term.indices.push_back(*chart_.index_of(b.text));
        }
        return;
      }
      case Tok::lparen: {
        lex_.take();
        term.coeff = term.coeff * parse_paren_poly();
        return;
      }
      default:
        lex_.fail("expected a factor, got '" + t.text + "'", t);
    }
  }

  // A parenthesized purely polynomial subexpression.
  Polynomial parse_paren_poly() {
    Polynomial sum(chart_);
    bool negate = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      negate = true;
    }
    sum += parse_term(negate, /*allow_basis=*/false).coeff;
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool neg = lex_.take().kind == Tok::minus;
      sum += parse_term(neg, /*allow_basis=*/false).coeff;
    }
    Token close = lex_.take();
    if (close.kind != Tok::rparen) lex_.fail("expected ')'", close);
    return sum;
  }

  const Chart& chart_;
  Lexer lex_;
};

template <Variance V>
Graded<V> assemble(const Chart& chart, std::vector<RawTerm> terms,
                   std::optional<int> expected_degree, std::string_view what) {
  int degree = -1;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    int td = static_cast<int>(t.indices.size());
    if (degree == -1) {
      degree = td;
    } else if (degree != td) {
      throw ParseError(std::string(what) + ": terms of mixed degree", 1, 1);
    }
  }
  if (degree == -1) degree = expected_degree.value_or(0);
  if (expected_degree && degree != *expected_degree) {
    throw ParseError(std::string(what) + ": expected degree " +
                         std::to_string(*expected_degree) + ", got " + std::to_string(degree),
                     1, 1);
  }
  Graded<V> g(chart, degree);
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    g.add_term(std::move(t.indices), std::move(t.coeff));
  }
  return g;
}

}  // namespace

Polynomial parse_polynomial(const Chart& chart, std::string_view text) {
  Parser parser(chart, text, Mode::poly);
  auto terms = parser.parse_sum();
  Polynomial sum(chart);
  for (auto& t : terms) sum += t.coeff;
  return sum;
}

DifferentialForm parse_form(const Chart& chart, std::string_view text,
                            std::optional<int> expected_degree) {
  Parser parser(chart, text, Mode::form);
  return assemble<Variance::form>(chart, parser.parse_sum(), expected_degree, "form");
}

Multivector parse_multivector(const Chart& chart, std::string_view text,
                              std::optional<int> expected_degree) {
  Parser parser(chart, text, Mode::multivector);
  return assemble<Variance::vector>(chart, parser.parse_sum(), expected_degree, "multivector");
}

}  // namespace twistkit
