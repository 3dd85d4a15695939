#include "quatode/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "quatode/errors.hpp"

namespace quatode {

// ---------------------------------------------------------------------------
// Expr construction and access

namespace {

constexpr unsigned kMaxExponent = 1000;

Expr::Node make_node(Expr::Kind kind) {
  Expr::Node n;
  n.kind = kind;
  return n;
}

}  // namespace

Expr Expr::number(double v) {
  auto n = make_node(Kind::number);
  n.value = v;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::unit(char which) {
  switch (which) {
    case 'i': return Expr(std::make_shared<const Node>(make_node(Kind::unit_i)));
    case 'j': return Expr(std::make_shared<const Node>(make_node(Kind::unit_j)));
    case 'k': return Expr(std::make_shared<const Node>(make_node(Kind::unit_k)));
    default: throw InputError(std::string("unknown quaternion unit '") + which + "'");
  }
}

Expr Expr::variable() {
  return Expr(std::make_shared<const Node>(make_node(Kind::variable)));
}

Expr Expr::negate(Expr operand) {
  auto n = make_node(Kind::negate);
  n.children = {std::move(operand)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  if (op != Kind::add && op != Kind::sub && op != Kind::mul && op != Kind::div) {
    throw InputError("not a binary operator");
  }
  auto n = make_node(op);
  n.children = {std::move(lhs), std::move(rhs)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::power(Expr base, unsigned exponent) {
  auto n = make_node(Kind::pow);
  n.exponent = exponent;
  n.children = {std::move(base)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::call(Function fn, Expr arg) {
  auto n = make_node(Kind::call);
  n.function = fn;
  n.children = {std::move(arg)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
unsigned Expr::exponent() const { return node_->exponent; }
Expr::Function Expr::function() const { return node_->function; }
const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

bool Expr::depends_on_t() const {
  if (node_->kind == Kind::variable) {
    return true;
  }
  for (const auto& c : node_->children) {
    if (c.depends_on_t()) {
      return true;
    }
  }
  return false;
}

bool ExprMatrix::depends_on_t() const {
  for (const auto& e : entries) {
    if (e.depends_on_t()) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser

namespace {

struct Token {
  enum class Type { number, identifier, symbol, end };
  Type type = Type::end;
  std::string_view text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      return {Token::Type::end, {}, start};
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return lex_number(start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Token::Type::identifier, src_.substr(start, pos_ - start), start};
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      ++pos_;
      return {Token::Type::symbol, src_.substr(start, 1), start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  Token lex_number(std::size_t start) {
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      throw ParseError("malformed number", start);
    }
    // Exponent part only if a digit actually follows.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
        ++look;
      }
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    return {Token::Type::number, src_.substr(start, pos_ - start), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Expr parse_all() {
    if (cur_.type == Token::Type::end) {
      throw ParseError("empty expression", cur_.pos);
    }
    Expr e = parse_expr();
    if (cur_.type != Token::Type::end) {
      if (cur_.type == Token::Type::identifier || cur_.type == Token::Type::number ||
          is_symbol("(")) {
        throw ParseError("unexpected '" + std::string(cur_.text) +
                             "' (implicit multiplication is not supported, use '*')",
                         cur_.pos);
      }
      throw ParseError("unexpected '" + std::string(cur_.text) + "'", cur_.pos);
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  bool is_symbol(std::string_view s) const {
    return cur_.type == Token::Type::symbol && cur_.text == s;
  }

  void expect(std::string_view s) {
    if (!is_symbol(s)) {
      throw ParseError("expected '" + std::string(s) + "'" + describe_current(), cur_.pos);
    }
    advance();
  }

  std::string describe_current() const {
    if (cur_.type == Token::Type::end) {
      return " but reached end of input";
    }
    return " but found '" + std::string(cur_.text) + "'";
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (is_symbol("+") || is_symbol("-")) {
      const auto op = cur_.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (is_symbol("*") || is_symbol("/")) {
      const auto op = cur_.text == "*" ? Expr::Kind::mul : Expr::Kind::div;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (is_symbol("-")) {
      advance();
      return Expr::negate(parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    while (is_symbol("^")) {
      advance();
      base = Expr::power(std::move(base), parse_exponent());
    }
    return base;
  }

  unsigned parse_exponent() {
    if (is_symbol("-")) {
      throw ParseError("negative exponent is not allowed", cur_.pos);
    }
    if (cur_.type != Token::Type::number) {
      throw ParseError("exponent must be an integer literal" + describe_current(), cur_.pos);
    }
    const std::string_view text = cur_.text;
    if (text.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("non-integer exponent '" + std::string(text) + "'", cur_.pos);
    }
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || value > kMaxExponent) {
      throw ParseError("exponent '" + std::string(text) + "' is too large", cur_.pos);
    }
    advance();
    return value;
  }

  Expr parse_atom() {
    const Token tok = cur_;
    switch (tok.type) {
      case Token::Type::number: {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
        if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
          throw ParseError("malformed number '" + std::string(tok.text) + "'", tok.pos);
        }
        advance();
        return Expr::number(v);
      }
      case Token::Type::identifier: {
        advance();
        if (tok.text == "t") {
          return Expr::variable();
        }
        if (tok.text == "i" || tok.text == "j" || tok.text == "k") {
          return Expr::unit(tok.text.front());
        }
        if (tok.text == "exp" || tok.text == "sin" || tok.text == "cos") {
          const auto fn = tok.text == "exp"   ? Expr::Function::exp
                          : tok.text == "sin" ? Expr::Function::sin
                                              : Expr::Function::cos;
          expect("(");
          Expr arg = parse_expr();
          expect(")");
          return Expr::call(fn, std::move(arg));
        }
        throw ParseError("unknown identifier '" + std::string(tok.text) + "'", tok.pos);
      }
      case Token::Type::symbol:
        if (tok.text == "(") {
          advance();
          Expr inner = parse_expr();
          expect(")");
          return inner;
        }
        throw ParseError("unexpected '" + std::string(tok.text) + "'", tok.pos);
      case Token::Type::end:
        break;
    }
    throw ParseError("unexpected end of input", tok.pos);
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

Expr parse(std::string_view src) {
  return Parser(src).parse_all();
}

// ---------------------------------------------------------------------------
// Evaluation and rendering

Quaternion eval(const Expr& e, double t) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::number: return e.value();
    case K::unit_i: return Quaternion::unit_i();
    case K::unit_j: return Quaternion::unit_j();
    case K::unit_k: return Quaternion::unit_k();
    case K::variable: return t;
    case K::negate: return -eval(e.lhs(), t);
    case K::add: return eval(e.lhs(), t) + eval(e.rhs(), t);
    case K::sub: return eval(e.lhs(), t) - eval(e.rhs(), t);
    case K::mul: return eval(e.lhs(), t) * eval(e.rhs(), t);
    case K::div: return eval(e.lhs(), t) / eval(e.rhs(), t);
    case K::pow: {
      const Quaternion base = eval(e.lhs(), t);
      Quaternion acc = 1.0;
      for (unsigned n = 0; n < e.exponent(); ++n) {
        acc = acc * base;
      }
      return acc;
    }
    case K::call: {
      const Quaternion arg = eval(e.lhs(), t);
      switch (e.function()) {
        case Expr::Function::exp: return qexp(arg);
        case Expr::Function::sin:
        case Expr::Function::cos: {
          const char* name = e.function() == Expr::Function::sin ? "sin" : "cos";
          if (!is_real(arg)) {
            throw EvalError(std::string(name) + " of non-real argument " + to_string(arg));
          }
          return e.function() == Expr::Function::sin ? std::sin(arg.w) : std::cos(arg.w);
        }
      }
    }
  }
  throw InputError("corrupt expression node");
}

std::string render(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::number: {
      const std::string text = format_real(e.value());
      return e.value() < 0.0 ? "(" + text + ")" : text;
    }
    case K::unit_i: return "i";
    case K::unit_j: return "j";
    case K::unit_k: return "k";
    case K::variable: return "t";
    case K::negate: return "(-" + render(e.lhs()) + ")";
    case K::add: return "(" + render(e.lhs()) + " + " + render(e.rhs()) + ")";
    case K::sub: return "(" + render(e.lhs()) + " - " + render(e.rhs()) + ")";
    case K::mul: return "(" + render(e.lhs()) + " * " + render(e.rhs()) + ")";
    case K::div: return "(" + render(e.lhs()) + " / " + render(e.rhs()) + ")";
    case K::pow: return "(" + render(e.lhs()) + ")^" + std::to_string(e.exponent());
    case K::call: {
      const char* name = e.function() == Expr::Function::exp   ? "exp"
                         : e.function() == Expr::Function::sin ? "sin"
                                                               : "cos";
      return std::string(name) + "(" + render(e.lhs()) + ")";
    }
  }
  throw InputError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Matrices and vectors of expressions

namespace {

std::string cell_name(std::size_t r, std::size_t c) {
  return "cell [" + std::to_string(r) + "][" + std::to_string(c) + "]";
}

std::string cell_name(std::size_t r) {
  return "entry [" + std::to_string(r) + "]";
}

template <typename F>
auto with_context(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw e.in_context(where);
  } catch (const EvalError& e) {
    throw EvalError(where + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  }
}

}  // namespace

ExprMatrix parse_matrix(const std::vector<std::vector<std::string>>& cells) {
  ExprMatrix m;
  m.rows = cells.size();
  m.cols = cells.empty() ? 0 : cells.front().size();
  m.entries.reserve(m.rows * m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (cells[r].size() != m.cols) {
      throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(cells[r].size()) +
                       " entries, expected " + std::to_string(m.cols));
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
      m.entries.push_back(with_context(cell_name(r, c), [&] { return parse(cells[r][c]); }));
    }
  }
  return m;
}

ExprVector parse_vector(const std::vector<std::string>& cells) {
  ExprVector v;
  v.reserve(cells.size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    v.push_back(with_context(cell_name(r), [&] { return parse(cells[r]); }));
  }
  return v;
}

QMatrix eval_matrix(const ExprMatrix& m, double t) {
  QMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      out(r, c) = with_context(cell_name(r, c), [&] { return eval(m(r, c), t); });
    }
  }
  return out;
}

QVector eval_vector(const ExprVector& v, double t) {
  QVector out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    out[r] = with_context(cell_name(r), [&] { return eval(v[r], t); });
  }
  return out;
}

Quaternion parse_quaternion(std::string_view src) {
  const Expr e = parse(src);
  if (e.depends_on_t()) {
    throw InputError("quaternion literal '" + std::string(src) + "' must not depend on t");
  }
  return eval(e, 0.0);
}

}  // namespace quatode
