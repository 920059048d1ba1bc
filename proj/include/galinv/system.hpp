#pragma once

#include "galinv/reps.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galinv {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprOp { Num, Ident, Neg, Add, Sub, Mul, Div, Call };

// Expression tree. Num holds non-negative literals only; signs are Neg nodes.
struct Expr {
    ExprOp op;
    Rational value;
    std::string name;  // identifier or function name
    std::vector<ExprPtr> args;
    int line = 0, col = 0;
};

bool same_tree(const ExprPtr& a, const ExprPtr& b);
// A literal 0 stands for the zero of either type
bool is_zero_literal(const ExprPtr& e);

enum class ValueType { Scalar, Vector };

struct Decl {
    std::string name;
    ValueType type;
    friend bool operator==(const Decl&, const Decl&) = default;
};

struct SignedName {
    int sign;  // +1 or -1
    std::string name;
    friend bool operator==(const SignedName&, const SignedName&) = default;
};

// Galilei action on a group of named quantities: slot i of label carries sign_i * name_i
struct RepBinding {
    RepLabel label;
    std::vector<SignedName> names;
    friend bool operator==(const RepBinding&, const RepBinding&) = default;
};

struct Equation {
    std::string name;
    ExprPtr lhs, rhs;
};

struct FieldSystem {
    std::string name;
    std::vector<Decl> fields;
    std::vector<Decl> sources;
    std::vector<std::string> params;
    std::vector<RepBinding> field_reps;
    std::vector<RepBinding> source_reps;
    std::vector<Equation> equations;
    std::vector<RepBinding> residual_reps;

    const Decl* find_symbol(const std::string& n) const;
    bool is_param(const std::string& n) const;
    const Equation* find_equation(const std::string& n) const;
};

bool same_system(const FieldSystem& a, const FieldSystem& b);

// Error with a source position (line/column are 1-based; 0 when unknown)
class DslError : public std::runtime_error {
public:
    enum class Kind { Syntax, Type, Undeclared };
    DslError(Kind k, int line, int col, const std::string& msg);
    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& detail() const { return detail_; }

private:
    Kind kind_;
    int line_, col_;
    std::string detail_;
};

FieldSystem parse_system(const std::string& text);
// A single expression, untyped
ExprPtr parse_expr(const std::string& text);
std::string print_system(const FieldSystem& s);
std::string print_expr(const ExprPtr& e);

// Type checks a system: scalar/vector typing, declared symbols, first order
// terms, at most bilinear in fields and sources. Throws DslError.
void check_system(const FieldSystem& s);
ValueType type_of(const FieldSystem& s, const ExprPtr& e);

// Building expressions from C++
namespace dsl {
ExprPtr num(long v);
ExprPtr num(const Rational& v);
ExprPtr id(const std::string& name);
ExprPtr call(const std::string& fn, std::vector<ExprPtr> args);
ExprPtr dt(ExprPtr e);
ExprPtr grad(ExprPtr e);
ExprPtr div(ExprPtr e);
ExprPtr curl(ExprPtr e);
ExprPtr dot(ExprPtr a, ExprPtr b);
ExprPtr cross(ExprPtr a, ExprPtr b);
ExprPtr operator+(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a, ExprPtr b);
ExprPtr operator*(ExprPtr a, ExprPtr b);
ExprPtr operator/(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a);
}  // namespace dsl

}  // namespace galinv
