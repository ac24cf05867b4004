#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace revroot::expr {

enum class Function { Sin, Cos, Tan, Atan, Exp, Ln, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

std::string_view function_name(Function f) noexcept;
std::optional<Function> function_from_name(std::string_view name) noexcept;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
  double value;
};

/// The single free variable `x`.
struct Variable {};

struct Negate {
  NodePtr operand;
};

struct Call {
  Function function;
  NodePtr argument;
};

/// For BinaryOp::Pow the right operand is always a Constant.
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};

struct Node {
  std::variant<Constant, Variable, Negate, Call, Binary> kind;
};

/// Immutable parsed expression of one variable. Copies share the tree.
class Expression {
 public:
  explicit Expression(NodePtr root);

  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }

 private:
  NodePtr root_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  /// Zero-based character offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar (whitespace-insensitive):
///
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   exponent:= '-'? primary ('^' exponent)?      (must not contain x)
///   primary := number | 'x' | name '(' sum ')' | '(' sum ')'
///
/// so `^` binds tighter than unary minus (-x^2 == -(x^2)) and is right
/// associative. Constant exponents are folded at parse time.
Expression parse(std::string_view text);

/// Canonical text form; `parse(to_string(e))` reproduces the same tree.
std::string to_string(const Expression& e);
std::string to_string(const Node& n);

}  // namespace revroot::expr
