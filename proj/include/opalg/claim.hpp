#pragma once

#include "opalg/operator.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opalg {

struct OperatorExpr;
using ExprPtr = std::shared_ptr<const OperatorExpr>;

/// Operator-expression AST: variables, the constants I and 0, postfix
/// adjoint ('), sum (+), composition (*), and scalar multiples. The claim
/// grammar has no scalar literals, so scalar_mul nodes only arise when an
/// expression is built programmatically; format_expr renders them as
/// scale(c, e), which is display-only syntax.
struct OperatorExpr {
    enum class Kind { variable, identity, zero, adjoint, add, compose, scalar_mul };

    Kind kind;
    std::string name;         // variable
    GaussianRational scalar;  // scalar_mul
    ExprPtr child;            // adjoint, scalar_mul
    ExprPtr lhs, rhs;         // add, compose

    static ExprPtr variable(std::string name);
    static ExprPtr identity();
    static ExprPtr zero();
    static ExprPtr adjoint_of(ExprPtr e);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr compose(ExprPtr a, ExprPtr b);
    static ExprPtr scalar_multiple(GaussianRational c, ExprPtr e);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
std::string format_expr(const ExprPtr& e);

/// ran(e1) + ran(e2) + ...; at least one term.
struct RangeSum {
    std::vector<ExprPtr> terms;
};

bool range_sum_equal(const RangeSum& a, const RangeSum& b);
std::string format_range_sum(const RangeSum& r);

struct Predicate {
    enum class Kind { ep, raneq, ransub };

    Kind kind;
    ExprPtr expr;       // ep
    RangeSum lhs, rhs;  // raneq, ransub

    static Predicate ep(ExprPtr e);
    static Predicate raneq(RangeSum lhs, RangeSum rhs);
    static Predicate ransub(RangeSum lhs, RangeSum rhs);
};

bool predicate_equal(const Predicate& a, const Predicate& b);
std::string format_predicate(const Predicate& p);

/// premises => conclusion over declared operator variables.
struct Claim {
    std::vector<std::string> variables;
    std::vector<Predicate> premises;
    Predicate conclusion;
};

bool claim_equal(const Claim& a, const Claim& b);
std::string format_claim(const Claim& c);

class ClaimParseError : public std::runtime_error {
public:
    ClaimParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Grammar:
///   claim := "vars" idlist ";" ["assume" predlist ";"] "show" pred
///   pred  := "ep(" expr ")" | "raneq(" rng "," rng ")" | "ransub(" rng "," rng ")"
///   rng   := "ran(" expr ")" | rng "+" rng
///   expr  := term | expr "+" term
///   term  := factor | term "*" factor
///   factor:= ident | "I" | "0" | factor "'" | "(" expr ")"
/// Whitespace is insignificant. Throws ClaimParseError with line/column on
/// malformed text or use of an undeclared variable.
Claim parse_claim(std::string_view text);

using Assignment = std::map<std::string, Operator>;

struct ClaimEval {
    bool premises_hold;
    bool conclusion_holds;
};

/// Shared evaluation context: the common carrier and window of an
/// assignment. Finite operators must agree on the dimension; cofinite ones
/// are padded on demand.
struct EvalContext {
    Carrier carrier;
    std::size_t dim;
};

/// Validates that every declared variable is assigned and that all assigned
/// operators share a carrier (and, when finite, a dimension).
EvalContext eval_context(const Claim& c, const Assignment& a);

Operator eval_expr(const ExprPtr& e, const Assignment& a, const EvalContext& ctx);
Subspace eval_range_sum(const RangeSum& r, const Assignment& a, const EvalContext& ctx);
bool eval_predicate(const Predicate& p, const Assignment& a, const EvalContext& ctx);

ClaimEval eval_claim(const Claim& c, const Assignment& a);

}  // namespace opalg
