#include "revroot/expr/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

namespace revroot::expr {

namespace {

constexpr std::array<std::pair<Function, std::string_view>, 8> kFunctionNames{{
    {Function::Sin, "sin"},
    {Function::Cos, "cos"},
    {Function::Tan, "tan"},
    {Function::Atan, "atan"},
    {Function::Exp, "exp"},
    {Function::Ln, "ln"},
    {Function::Sqrt, "sqrt"},
    {Function::Abs, "abs"},
}};

NodePtr make(auto kind) { return std::make_shared<const Node>(Node{std::move(kind)}); }

std::string format_number(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

bool contains_variable(const Node& n) {
  return std::visit(
      [](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          return false;
        } else if constexpr (std::is_same_v<K, Variable>) {
          return true;
        } else if constexpr (std::is_same_v<K, Negate>) {
          return contains_variable(*k.operand);
        } else if constexpr (std::is_same_v<K, Call>) {
          return contains_variable(*k.argument);
        } else {
          return contains_variable(*k.lhs) || contains_variable(*k.rhs);
        }
      },
      n.kind);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    NodePtr root = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return Expression(std::move(root));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Binary{BinaryOp::Add, lhs, product()});
      } else if (accept('-')) {
        lhs = make(Binary{BinaryOp::Sub, lhs, product()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Binary{BinaryOp::Mul, lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Binary{BinaryOp::Div, lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Negate{unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    return make(Binary{BinaryOp::Pow, base, make(Constant{exponent()})});
  }

  double exponent() {
    skip_space();
    const std::size_t start = pos_;
    const bool negative = accept('-');
    NodePtr base = primary();
    if (contains_variable(*base)) throw ParseError("exponent must be a constant", start);
    double value = fold(*base);
    if (accept('^')) value = std::pow(value, exponent());
    if (!std::isfinite(value)) throw ParseError("exponent does not evaluate to a finite number", start);
    return negative ? -value : value;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      NodePtr inner = sum();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double value = 0.0;
    auto [end, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) fail("numeric literal out of range");
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - first);
    return make(Constant{value});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return make(Variable{});
    const auto fn = function_from_name(name);
    if (!fn) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    expect('(');
    NodePtr arg = sum();
    expect(')');
    return make(Call{*fn, std::move(arg)});
  }

  static double fold(const Node& n);

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Exponents are tiny constant trees; evaluate them directly.
double Parser::fold(const Node& n) {
  return std::visit(
      [](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          return k.value;
        } else if constexpr (std::is_same_v<K, Variable>) {
          return 0.0;  // unreachable: rejected before folding
        } else if constexpr (std::is_same_v<K, Negate>) {
          return -fold(*k.operand);
        } else if constexpr (std::is_same_v<K, Call>) {
          const double a = fold(*k.argument);
          switch (k.function) {
            case Function::Sin: return std::sin(a);
            case Function::Cos: return std::cos(a);
            case Function::Tan: return std::tan(a);
            case Function::Atan: return std::atan(a);
            case Function::Exp: return std::exp(a);
            case Function::Ln: return std::log(a);
            case Function::Sqrt: return std::sqrt(a);
            case Function::Abs: return std::fabs(a);
          }
          return 0.0;
        } else {
          const double a = fold(*k.lhs);
          const double b = fold(*k.rhs);
          switch (k.op) {
            case BinaryOp::Add: return a + b;
            case BinaryOp::Sub: return a - b;
            case BinaryOp::Mul: return a * b;
            case BinaryOp::Div: return a / b;
            case BinaryOp::Pow: return std::pow(a, b);
          }
          return 0.0;
        }
      },
      n.kind);
}

int precedence(const Node& n) {
  if (const auto* b = std::get_if<Binary>(&n.kind)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub: return 1;
      case BinaryOp::Mul:
      case BinaryOp::Div: return 2;
      case BinaryOp::Pow: return 4;
    }
  }
  if (std::holds_alternative<Negate>(n.kind)) return 3;
  if (const auto* c = std::get_if<Constant>(&n.kind); c && std::signbit(c->value)) return 3;
  return 5;
}

void print(const Node& n, std::string& out);

void print_operand(const Node& n, int min_precedence, std::string& out) {
  if (precedence(n) < min_precedence) {
    out += '(';
    print(n, out);
    out += ')';
  } else {
    print(n, out);
  }
}

void print(const Node& n, std::string& out) {
  std::visit(
      [&out](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          out += format_number(k.value);
        } else if constexpr (std::is_same_v<K, Variable>) {
          out += 'x';
        } else if constexpr (std::is_same_v<K, Negate>) {
          out += '-';
          print_operand(*k.operand, 3, out);
        } else if constexpr (std::is_same_v<K, Call>) {
          out += function_name(k.function);
          out += '(';
          print(*k.argument, out);
          out += ')';
        } else {
          switch (k.op) {
            case BinaryOp::Add:
            case BinaryOp::Sub:
              print_operand(*k.lhs, 1, out);
              out += k.op == BinaryOp::Add ? " + " : " - ";
              print_operand(*k.rhs, 2, out);
              break;
            case BinaryOp::Mul:
            case BinaryOp::Div:
              print_operand(*k.lhs, 2, out);
              out += k.op == BinaryOp::Mul ? " * " : " / ";
              print_operand(*k.rhs, 3, out);
              break;
            case BinaryOp::Pow:
              print_operand(*k.lhs, 5, out);
              out += '^';
              print_operand(*k.rhs, 5, out);
              break;
          }
        }
      },
      n.kind);
}

}  // namespace

std::string_view function_name(Function f) noexcept {
  for (const auto& [fn, name] : kFunctionNames) {
    if (fn == f) return name;
  }
  return "?";
}

std::optional<Function> function_from_name(std::string_view name) noexcept {
  for (const auto& [fn, n] : kFunctionNames) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

Expression::Expression(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw std::invalid_argument("expression root must not be null");
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

Expression parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Node& n) {
  std::string out;
  print(n, out);
  return out;
}

std::string to_string(const Expression& e) { return to_string(e.root()); }

}  // namespace revroot::expr
