#pragma once

#include "qquat/algebra.hpp"
#include "qquat/tensor.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qquat {

/// Syntax error; position is a 0-based character offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Raised when a well-formed expression has no value (e.g. adding tensors of
/// different rank, dividing by a non-scalar other than a power of N).
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unevaluated expression tree.
struct Expr {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow, Star, Tensor };
    Kind kind;
    std::string text;  // number digits or symbol name
    int exponent = 0;  // Pow
    std::vector<std::unique_ptr<Expr>> args;
    std::size_t position = 0;
};

/// Grammar, loosest to tightest:
///   sum     := tensor (('+' | '-') tensor)*
///   tensor  := product ('(x)' product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' ('*' | '-'? integer))*
///   atom    := integer | a0..a3 | x+ | x- | y+ | y- | N | i | q | '(' sum ')'
std::unique_ptr<Expr> parse(const std::string& text);

using Value = std::variant<Element, Tensor, LocalizedElement>;

Value evaluate(const Expr& e, const SystemPtr& sys);
Value evaluate(const std::string& text, const SystemPtr& sys);

/// Evaluates and requires an algebra element (fractions with trivial
/// denominator are accepted).
Element parse_element(const std::string& text, const SystemPtr& sys);
Tensor parse_tensor(const std::string& text, const SystemPtr& sys);

std::string render(const Value& v);

}  // namespace qquat
