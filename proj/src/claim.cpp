#include "opalg/claim.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace opalg {

ExprPtr OperatorExpr::variable(std::string name) {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::variable;
    e->name = std::move(name);
    return e;
}

ExprPtr OperatorExpr::identity() {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::identity;
    return e;
}

ExprPtr OperatorExpr::zero() {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::zero;
    return e;
}

ExprPtr OperatorExpr::adjoint_of(ExprPtr child) {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::adjoint;
    e->child = std::move(child);
    return e;
}

ExprPtr OperatorExpr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr OperatorExpr::compose(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::compose;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr OperatorExpr::scalar_multiple(GaussianRational c, ExprPtr child) {
    auto e = std::make_shared<OperatorExpr>();
    e->kind = Kind::scalar_mul;
    e->scalar = std::move(c);
    e->child = std::move(child);
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->kind != b->kind) {
        return false;
    }
    switch (a->kind) {
        case OperatorExpr::Kind::variable:
            return a->name == b->name;
        case OperatorExpr::Kind::identity:
        case OperatorExpr::Kind::zero:
            return true;
        case OperatorExpr::Kind::adjoint:
            return expr_equal(a->child, b->child);
        case OperatorExpr::Kind::scalar_mul:
            return a->scalar == b->scalar && expr_equal(a->child, b->child);
        case OperatorExpr::Kind::add:
        case OperatorExpr::Kind::compose:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
    return false;
}

namespace {

// Precedence levels for parenthesization: add < compose < postfix adjoint.
int precedence(OperatorExpr::Kind k) {
    switch (k) {
        case OperatorExpr::Kind::add:
            return 0;
        case OperatorExpr::Kind::compose:
            return 1;
        default:
            return 2;
    }
}

std::string format_child(const ExprPtr& child, int min_precedence) {
    std::string s = format_expr(child);
    if (precedence(child->kind) < min_precedence) {
        return "(" + s + ")";
    }
    return s;
}

}  // namespace

std::string format_expr(const ExprPtr& e) {
    switch (e->kind) {
        case OperatorExpr::Kind::variable:
            return e->name;
        case OperatorExpr::Kind::identity:
            return "I";
        case OperatorExpr::Kind::zero:
            return "0";
        case OperatorExpr::Kind::adjoint:
            return format_child(e->child, 2) + "'";
        case OperatorExpr::Kind::add:
            // Right operand parenthesized when it is itself a sum so the
            // formatted text reparses to an identically shaped tree.
            return format_child(e->lhs, 0) + " + " +
                   (e->rhs->kind == OperatorExpr::Kind::add ? "(" + format_expr(e->rhs) + ")"
                                                            : format_child(e->rhs, 1));
        case OperatorExpr::Kind::compose:
            return format_child(e->lhs, 1) + "*" +
                   (e->rhs->kind == OperatorExpr::Kind::compose ? "(" + format_expr(e->rhs) + ")"
                                                                : format_child(e->rhs, 2));
        case OperatorExpr::Kind::scalar_mul:
            return "scale(" + format_scalar(e->scalar) + ", " + format_expr(e->child) + ")";
    }
    return {};
}

bool range_sum_equal(const RangeSum& a, const RangeSum& b) {
    if (a.terms.size() != b.terms.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (!expr_equal(a.terms[i], b.terms[i])) {
            return false;
        }
    }
    return true;
}

std::string format_range_sum(const RangeSum& r) {
    std::string out;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        if (i != 0) {
            out += " + ";
        }
        out += "ran(" + format_expr(r.terms[i]) + ")";
    }
    return out;
}

Predicate Predicate::ep(ExprPtr e) {
    Predicate p;
    p.kind = Kind::ep;
    p.expr = std::move(e);
    return p;
}

Predicate Predicate::raneq(RangeSum lhs, RangeSum rhs) {
    Predicate p;
    p.kind = Kind::raneq;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
    return p;
}

Predicate Predicate::ransub(RangeSum lhs, RangeSum rhs) {
    Predicate p;
    p.kind = Kind::ransub;
    p.lhs = std::move(lhs);
    p.rhs = std::move(rhs);
    return p;
}

bool predicate_equal(const Predicate& a, const Predicate& b) {
    if (a.kind != b.kind) {
        return false;
    }
    if (a.kind == Predicate::Kind::ep) {
        return expr_equal(a.expr, b.expr);
    }
    return range_sum_equal(a.lhs, b.lhs) && range_sum_equal(a.rhs, b.rhs);
}

std::string format_predicate(const Predicate& p) {
    switch (p.kind) {
        case Predicate::Kind::ep:
            return "ep(" + format_expr(p.expr) + ")";
        case Predicate::Kind::raneq:
            return "raneq(" + format_range_sum(p.lhs) + ", " + format_range_sum(p.rhs) + ")";
        case Predicate::Kind::ransub:
            return "ransub(" + format_range_sum(p.lhs) + ", " + format_range_sum(p.rhs) + ")";
    }
    return {};
}

bool claim_equal(const Claim& a, const Claim& b) {
    if (a.variables != b.variables || a.premises.size() != b.premises.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.premises.size(); ++i) {
        if (!predicate_equal(a.premises[i], b.premises[i])) {
            return false;
        }
    }
    return predicate_equal(a.conclusion, b.conclusion);
}

std::string format_claim(const Claim& c) {
    std::string out = "vars ";
    for (std::size_t i = 0; i < c.variables.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += c.variables[i];
    }
    out += "; ";
    if (!c.premises.empty()) {
        out += "assume ";
        for (std::size_t i = 0; i < c.premises.size(); ++i) {
            if (i != 0) {
                out += ", ";
            }
            out += format_predicate(c.premises[i]);
        }
        out += "; ";
    }
    out += "show " + format_predicate(c.conclusion);
    return out;
}

namespace {

struct Token {
    enum class Kind { ident, number, symbol, end };

    Kind kind;
    std::string text;  // ident or number
    char symbol = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (text[i + j] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        i += k;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t len = 1;
            while (i + len < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_')) {
                ++len;
            }
            tok.kind = Token::Kind::ident;
            tok.text = std::string(text.substr(i, len));
            advance(len);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 1;
            while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) {
                ++len;
            }
            tok.kind = Token::Kind::number;
            tok.text = std::string(text.substr(i, len));
            advance(len);
        } else if (c == ';' || c == ',' || c == '(' || c == ')' || c == '+' || c == '*' || c == '\'') {
            tok.kind = Token::Kind::symbol;
            tok.symbol = c;
            advance(1);
        } else {
            throw ClaimParseError(std::string("unexpected character '") + c + "'", line, column);
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::end;
    end.line = line;
    end.column = column;
    out.push_back(std::move(end));
    return out;
}

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words = {"vars", "assume", "show", "ep",
                                                "raneq", "ransub", "ran", "I"};
    return words;
}

class ClaimParser {
public:
    explicit ClaimParser(std::string_view text) : tokens_(tokenize(text)) {}

    Claim parse() {
        Claim claim;
        expect_keyword("vars");
        claim.variables.push_back(variable_name());
        while (accept_symbol(',')) {
            claim.variables.push_back(variable_name());
        }
        declared_.insert(claim.variables.begin(), claim.variables.end());
        expect_symbol(';');
        if (peek_keyword("assume")) {
            next();
            claim.premises.push_back(predicate());
            while (accept_symbol(',')) {
                claim.premises.push_back(predicate());
            }
            expect_symbol(';');
        }
        expect_keyword("show");
        claim.conclusion = predicate();
        if (cur().kind != Token::Kind::end) {
            fail("unexpected trailing input");
        }
        return claim;
    }

private:
    const Token& cur() const { return tokens_[pos_]; }
    void next() { ++pos_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ClaimParseError(what, cur().line, cur().column);
    }

    bool peek_keyword(const char* word) const {
        return cur().kind == Token::Kind::ident && cur().text == word;
    }

    void expect_keyword(const char* word) {
        if (!peek_keyword(word)) {
            fail(std::string("expected '") + word + "'");
        }
        next();
    }

    bool accept_symbol(char c) {
        if (cur().kind == Token::Kind::symbol && cur().symbol == c) {
            next();
            return true;
        }
        return false;
    }

    void expect_symbol(char c) {
        if (!accept_symbol(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string variable_name() {
        if (cur().kind != Token::Kind::ident) {
            fail("expected variable name");
        }
        std::string name = cur().text;
        if (reserved_words().count(name) != 0) {
            fail("'" + name + "' is reserved and cannot be a variable");
        }
        if (declared_seen_.count(name) != 0) {
            fail("duplicate variable '" + name + "'");
        }
        declared_seen_.insert(name);
        next();
        return name;
    }

    Predicate predicate() {
        if (cur().kind != Token::Kind::ident) {
            fail("expected predicate (ep, raneq or ransub)");
        }
        std::string head = cur().text;
        if (head == "ep") {
            next();
            expect_symbol('(');
            ExprPtr e = expression();
            expect_symbol(')');
            return Predicate::ep(std::move(e));
        }
        if (head == "raneq" || head == "ransub") {
            next();
            expect_symbol('(');
            RangeSum lhs = range_sum();
            expect_symbol(',');
            RangeSum rhs = range_sum();
            expect_symbol(')');
            return head == "raneq" ? Predicate::raneq(std::move(lhs), std::move(rhs))
                                   : Predicate::ransub(std::move(lhs), std::move(rhs));
        }
        fail("expected predicate (ep, raneq or ransub)");
    }

    RangeSum range_sum() {
        RangeSum r;
        r.terms.push_back(range_term());
        while (accept_symbol('+')) {
            r.terms.push_back(range_term());
        }
        return r;
    }

    ExprPtr range_term() {
        expect_keyword("ran");
        expect_symbol('(');
        ExprPtr e = expression();
        expect_symbol(')');
        return e;
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (accept_symbol('+')) {
            e = OperatorExpr::add(std::move(e), term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept_symbol('*')) {
            e = OperatorExpr::compose(std::move(e), factor());
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr e = primary();
        while (accept_symbol('\'')) {
            e = OperatorExpr::adjoint_of(std::move(e));
        }
        return e;
    }

    ExprPtr primary() {
        if (accept_symbol('(')) {
            ExprPtr e = expression();
            expect_symbol(')');
            return e;
        }
        if (cur().kind == Token::Kind::number) {
            if (cur().text != "0") {
                fail("the only numeric constant is 0");
            }
            next();
            return OperatorExpr::zero();
        }
        if (cur().kind == Token::Kind::ident) {
            std::string name = cur().text;
            if (name == "I") {
                next();
                return OperatorExpr::identity();
            }
            if (reserved_words().count(name) != 0) {
                fail("unexpected keyword '" + name + "' in expression");
            }
            if (declared_.count(name) == 0) {
                fail("unknown variable '" + name + "'");
            }
            next();
            return OperatorExpr::variable(std::move(name));
        }
        fail("expected expression");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string> declared_;
    std::set<std::string> declared_seen_;
};

}  // namespace

Claim parse_claim(std::string_view text) {
    return ClaimParser(text).parse();
}

EvalContext eval_context(const Claim& c, const Assignment& a) {
    if (c.variables.empty()) {
        throw std::invalid_argument("claim declares no variables");
    }
    const Operator* first = nullptr;
    std::size_t dim = 0;
    for (const std::string& v : c.variables) {
        auto it = a.find(v);
        if (it == a.end()) {
            throw std::invalid_argument("assignment missing variable '" + v + "'");
        }
        if (first == nullptr) {
            first = &it->second;
            dim = it->second.dim();
            continue;
        }
        if (it->second.carrier() != first->carrier()) {
            throw std::invalid_argument("assignment mixes finite and cofinite operators");
        }
        if (first->carrier() == Carrier::finite && it->second.dim() != dim) {
            throw std::invalid_argument("finite assignment with mismatched dimensions");
        }
        dim = std::max(dim, it->second.dim());
    }
    return {first->carrier(), dim};
}

Operator eval_expr(const ExprPtr& e, const Assignment& a, const EvalContext& ctx) {
    switch (e->kind) {
        case OperatorExpr::Kind::variable:
            return a.at(e->name);
        case OperatorExpr::Kind::identity:
            return op_identity(ctx.carrier, ctx.dim);
        case OperatorExpr::Kind::zero:
            return op_zero(ctx.carrier, ctx.dim);
        case OperatorExpr::Kind::adjoint:
            return adjoint(eval_expr(e->child, a, ctx));
        case OperatorExpr::Kind::scalar_mul:
            return scale(e->scalar, eval_expr(e->child, a, ctx));
        case OperatorExpr::Kind::add:
            return eval_expr(e->lhs, a, ctx) + eval_expr(e->rhs, a, ctx);
        case OperatorExpr::Kind::compose:
            return eval_expr(e->lhs, a, ctx) * eval_expr(e->rhs, a, ctx);
    }
    throw std::logic_error("eval_expr: unreachable");
}

Subspace eval_range_sum(const RangeSum& r, const Assignment& a, const EvalContext& ctx) {
    Subspace acc = range(eval_expr(r.terms.front(), a, ctx));
    for (std::size_t i = 1; i < r.terms.size(); ++i) {
        acc = subspace_sum(acc, range(eval_expr(r.terms[i], a, ctx)));
    }
    return acc;
}

bool eval_predicate(const Predicate& p, const Assignment& a, const EvalContext& ctx) {
    switch (p.kind) {
        case Predicate::Kind::ep:
            return ep_check(eval_expr(p.expr, a, ctx));
        case Predicate::Kind::raneq:
            return subspace_eq(eval_range_sum(p.lhs, a, ctx), eval_range_sum(p.rhs, a, ctx));
        case Predicate::Kind::ransub:
            return subspace_leq(eval_range_sum(p.lhs, a, ctx), eval_range_sum(p.rhs, a, ctx));
    }
    throw std::logic_error("eval_predicate: unreachable");
}

ClaimEval eval_claim(const Claim& c, const Assignment& a) {
    EvalContext ctx = eval_context(c, a);
    ClaimEval out{true, false};
    for (const Predicate& p : c.premises) {
        if (!eval_predicate(p, a, ctx)) {
            out.premises_hold = false;
            break;
        }
    }
    out.conclusion_holds = eval_predicate(c.conclusion, a, ctx);
    return out;
}

}  // namespace opalg
