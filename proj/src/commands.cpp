#include "opalg/commands.hpp"

#include <utility>

namespace opalg {

namespace {

std::string dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

// Four Penrose equations, checked exactly at the block level.
struct PenroseCheck {
    bool m_x_m;   // M X M = M
    bool x_m_x;   // X M X = X
    bool mx_self; // (M X)* = M X
    bool xm_self; // (X M)* = X M

    bool all() const { return m_x_m && x_m_x && mx_self && xm_self; }
};

PenroseCheck penrose_check(const Matrix& m, const Matrix& x) {
    Matrix mx = m * x;
    Matrix xm = x * m;
    return {
        mx * m == m,
        xm * x == x,
        mx.conj_transpose() == mx,
        xm.conj_transpose() == xm,
    };
}

std::string describe_operator(const Operator& op) {
    std::string out = std::string(carrier_name(op.carrier())) + " operator, window " +
                      std::to_string(op.dim());
    if (op.carrier() == Carrier::cofinite && op.is_identity()) {
        return out + " (identity)";
    }
    return out + ":\n" + format_matrix(op.block(), "  ");
}

nlohmann::json predicate_evidence(const Predicate& p, const Assignment& a,
                                  const EvalContext& ctx) {
    if (p.kind == Predicate::Kind::ep) {
        Operator t = eval_expr(p.expr, a, ctx);
        return {
            {"range", subspace_to_json(range(t))},
            {"adjoint_range", subspace_to_json(range(adjoint(t)))},
        };
    }
    return {
        {"lhs", subspace_to_json(eval_range_sum(p.lhs, a, ctx))},
        {"rhs", subspace_to_json(eval_range_sum(p.rhs, a, ctx))},
    };
}

std::string predicate_evidence_text(const Predicate& p, const Assignment& a,
                                    const EvalContext& ctx, const std::string& indent) {
    if (p.kind == Predicate::Kind::ep) {
        Operator t = eval_expr(p.expr, a, ctx);
        std::string star = format_expr(OperatorExpr::adjoint_of(p.expr));
        return indent + "ran(" + format_expr(p.expr) + ") = " + range(t).describe() + "\n" +
               indent + "ran(" + star + ") = " + range(adjoint(t)).describe() + "\n";
    }
    return indent + "lhs = " + eval_range_sum(p.lhs, a, ctx).describe() + "\n" + indent +
           "rhs = " + eval_range_sum(p.rhs, a, ctx).describe() + "\n";
}

}  // namespace

CommandResult cmd_verify_paper(OutputFormat format) {
    std::vector<RefutationReport> reports = verify_all();
    bool all_pass = true;
    for (const RefutationReport& r : reports) {
        all_pass = all_pass && r.all_pass();
    }
    CommandResult res;
    res.exit_code = all_pass ? 0 : 1;
    if (format == OutputFormat::machine) {
        nlohmann::json reports_json = nlohmann::json::array();
        for (const RefutationReport& r : reports) {
            reports_json.push_back(r.to_json());
        }
        res.output = dump({{"reports", reports_json}, {"all_pass", all_pass}});
        return res;
    }
    for (const RefutationReport& r : reports) {
        res.output += r.to_text() + "\n";
    }
    res.output += all_pass ? "verify-paper: all claims pass\n" : "verify-paper: FAILURES above\n";
    return res;
}

CommandResult cmd_ep_check(const std::string& path, OutputFormat format) {
    CommandResult res;
    try {
        Operator op = read_operator_file(path);
        bool ep = ep_check(op);
        Subspace ran = range(op);
        Subspace ran_star = range(adjoint(op));
        if (format == OutputFormat::machine) {
            res.output = dump({
                {"operator", operator_to_json(op)},
                {"ep", ep},
                {"range", subspace_to_json(ran)},
                {"adjoint_range", subspace_to_json(ran_star)},
            });
        } else {
            res.output = describe_operator(op) + "\n";
            res.output += "ran(T)  = " + ran.describe() + "\n";
            res.output += "ran(T') = " + ran_star.describe() + "\n";
            res.output += std::string("verdict: ") + (ep ? "EP" : "not EP") + "\n";
        }
    } catch (const OpFileError& e) {
        res.exit_code = 2;
        res.diagnostics = std::string("ep-check: ") + e.what() + "\n";
    }
    return res;
}

CommandResult cmd_pinv(const std::string& path, OutputFormat format) {
    CommandResult res;
    try {
        Operator op = read_operator_file(path);
        Operator dagger = op_pinv(op);
        std::size_t m = std::max(op.dim(), dagger.dim());
        PenroseCheck penrose = penrose_check(op.block_padded(m), dagger.block_padded(m));
        if (format == OutputFormat::machine) {
            res.output = dump({
                {"operator", operator_to_json(op)},
                {"pinv", operator_to_json(dagger)},
                {"penrose",
                 {
                     {"m_x_m_equals_m", penrose.m_x_m},
                     {"x_m_x_equals_x", penrose.x_m_x},
                     {"mx_selfadjoint", penrose.mx_self},
                     {"xm_selfadjoint", penrose.xm_self},
                     {"all", penrose.all()},
                 }},
            });
        } else {
            res.output = describe_operator(op) + "\n";
            res.output += "pseudoinverse " + describe_operator(dagger) + "\n";
            res.output += std::string("Penrose equations: ") +
                          (penrose.all() ? "all four hold exactly" : "VIOLATED") + "\n";
        }
        if (!penrose.all()) {
            // Cannot happen for an exact pinv; treated as an internal error.
            res.exit_code = 2;
            res.diagnostics = "pinv: internal error: Penrose equations violated\n";
        }
    } catch (const OpFileError& e) {
        res.exit_code = 2;
        res.diagnostics = std::string("pinv: ") + e.what() + "\n";
    }
    return res;
}

CommandResult cmd_range_compare(const std::string& left_path, const std::string& right_path,
                                OutputFormat format) {
    CommandResult res;
    try {
        Operator left = read_operator_file(left_path);
        Operator right = read_operator_file(right_path);
        if (left.carrier() != right.carrier()) {
            throw OpFileError("operators have different carriers (" +
                              std::string(carrier_name(left.carrier())) + " vs " +
                              carrier_name(right.carrier()) + ")");
        }
        if (left.carrier() == Carrier::finite && left.dim() != right.dim()) {
            throw OpFileError("finite operators have different dimensions");
        }
        Subspace u = range(left);
        Subspace v = range(right);
        bool leq = subspace_leq(u, v);
        bool geq = subspace_leq(v, u);
        std::string relation = leq && geq  ? "equal"
                               : leq       ? "strict-subspace"
                               : geq       ? "strict-superspace"
                                           : "incomparable";
        if (format == OutputFormat::machine) {
            res.output = dump({
                {"left", subspace_to_json(u)},
                {"right", subspace_to_json(v)},
                {"relation", relation},
            });
        } else {
            res.output = "ran(left)  = " + u.describe() + "\n";
            res.output += "ran(right) = " + v.describe() + "\n";
            res.output += "relation: " + relation + "\n";
        }
    } catch (const OpFileError& e) {
        res.exit_code = 2;
        res.diagnostics = std::string("range-compare: ") + e.what() + "\n";
    }
    return res;
}

CommandResult cmd_falsify(const FalsifyOptions& options) {
    CommandResult res;
    Claim claim;
    try {
        claim = parse_claim(options.claim_text);
    } catch (const ClaimParseError& e) {
        res.exit_code = 2;
        res.diagnostics = std::string("falsify: ") + e.what() + "\n";
        return res;
    }

    std::optional<Counterexample> found = falsify(claim, options.config);
    if (!found) {
        res.exit_code = 0;
        if (options.format == OutputFormat::machine) {
            res.output = dump({
                {"found", false},
                {"claim", format_claim(claim)},
                {"trials", options.config.trials},
                {"dim", options.config.dim},
                {"entry_bound", options.config.entry_bound},
                {"seed", options.config.seed},
                {"carrier", carrier_name(options.config.carrier)},
            });
        } else {
            res.output = "no counterexample found: " + format_claim(claim) + "\n";
            res.output += "searched " + std::to_string(options.config.trials) + " trials at dim " +
                          std::to_string(options.config.dim) + ", entries in [-" +
                          std::to_string(options.config.entry_bound) + ", " +
                          std::to_string(options.config.entry_bound) + "], seed " +
                          std::to_string(options.config.seed) + "\n";
            res.output += "(absence of a counterexample does not prove the claim)\n";
        }
        return res;
    }

    const Counterexample& cex = *found;
    bool valid = revalidate(claim, cex);
    EvalContext ctx = eval_context(claim, cex.assignment);
    res.exit_code = 1;  // found

    if (options.format == OutputFormat::machine) {
        nlohmann::json assignment = nlohmann::json::object();
        for (const std::string& v : claim.variables) {
            assignment[v] = operator_to_json(cex.assignment.at(v));
        }
        nlohmann::json premises = nlohmann::json::array();
        for (std::size_t i = 0; i < claim.premises.size(); ++i) {
            premises.push_back({
                {"predicate", format_predicate(claim.premises[i])},
                {"holds", static_cast<bool>(cex.premise_verdicts[i])},
                {"evidence", predicate_evidence(claim.premises[i], cex.assignment, ctx)},
            });
        }
        res.output = dump({
            {"found", true},
            {"claim", format_claim(claim)},
            {"revalidated", valid},
            {"certificate",
             {
                 {"seed", cex.seed},
                 {"trial", cex.trial},
                 {"search_dim", cex.search_dim},
                 {"entry_bound", cex.entry_bound},
                 {"carrier", carrier_name(cex.carrier)},
                 {"assignment", assignment},
                 {"premises", premises},
                 {"conclusion",
                  {
                      {"predicate", format_predicate(claim.conclusion)},
                      {"holds", cex.conclusion_verdict},
                      {"evidence", predicate_evidence(claim.conclusion, cex.assignment, ctx)},
                  }},
             }},
        });
        return res;
    }

    res.output = "counterexample found: " + format_claim(claim) + "\n";
    res.output += "trial " + std::to_string(cex.trial) + ", seed " + std::to_string(cex.seed) +
                  ", search dim " + std::to_string(cex.search_dim) + ", entries in [-" +
                  std::to_string(cex.entry_bound) + ", " + std::to_string(cex.entry_bound) +
                  "], carrier " + carrier_name(cex.carrier) + "\n";
    res.output += "assignment:\n";
    for (const std::string& v : claim.variables) {
        res.output += "  " + v + " = " + describe_operator(cex.assignment.at(v)) + "\n";
    }
    if (!claim.premises.empty()) {
        res.output += "premises (all hold):\n";
        for (std::size_t i = 0; i < claim.premises.size(); ++i) {
            res.output += "  " + format_predicate(claim.premises[i]) + ": " +
                          (cex.premise_verdicts[i] ? "true" : "false") + "\n";
            res.output += predicate_evidence_text(claim.premises[i], cex.assignment, ctx, "    ");
        }
    }
    res.output += "conclusion (fails):\n";
    res.output += "  " + format_predicate(claim.conclusion) + ": " +
                  (cex.conclusion_verdict ? "true" : "false") + "\n";
    res.output += predicate_evidence_text(claim.conclusion, cex.assignment, ctx, "    ");
    res.output += valid ? "certificate re-validated: premises hold, conclusion fails\n"
                        : "certificate FAILED revalidation\n";
    return res;
}

}  // namespace opalg
