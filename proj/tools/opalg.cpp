// opalg — exact operator-algebra workbench: EP verdicts, pseudoinverses,
// range comparisons, and a randomized falsifier for operator-range claims.
#include "opalg/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

int finish(const opalg::CommandResult& res) {
    if (!res.output.empty()) {
        std::fputs(res.output.c_str(), stdout);
    }
    if (!res.diagnostics.empty()) {
        std::fputs(res.diagnostics.c_str(), stderr);
    }
    return res.exit_code;
}

opalg::OutputFormat to_format(const std::string& name) {
    return name == "machine" ? opalg::OutputFormat::machine : opalg::OutputFormat::text;
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "opalg: exact-arithmetic workbench for EP operators and operator-range identities"};
    app.require_subcommand(1);

    std::string format = "text";

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "Replay the built-in refutation suite (examples 1-2 and the "
                        "block-column demo); exit 0 iff every claim passes");
    std::string verify_format = "text";
    add_format_option(verify, verify_format);

    CLI::App* ep = app.add_subcommand("ep-check", "EP verdict and range bases for an operator file");
    std::string ep_path;
    std::string ep_format = "text";
    ep->add_option("file", ep_path, "Operator file (JSON)")->required();
    add_format_option(ep, ep_format);

    CLI::App* pv = app.add_subcommand(
        "pinv", "Moore-Penrose pseudoinverse of an operator file, with the four "
                "Penrose equations confirmed exactly");
    std::string pv_path;
    std::string pv_format = "text";
    pv->add_option("file", pv_path, "Operator file (JSON)")->required();
    add_format_option(pv, pv_format);

    CLI::App* rc = app.add_subcommand("range-compare",
                                      "Compare the ranges of two operator files: "
                                      "equal | strict-subspace | strict-superspace | incomparable");
    std::string rc_left;
    std::string rc_right;
    std::string rc_format = "text";
    rc->add_option("left", rc_left, "Operator file (JSON)")->required();
    rc->add_option("right", rc_right, "Operator file (JSON)")->required();
    add_format_option(rc, rc_format);

    CLI::App* fz = app.add_subcommand(
        "falsify", "Randomized search for a counterexample to a claim. Exit 1 means a "
                   "counterexample was FOUND (successful falsification), 0 means none "
                   "found within the trial budget, 2 means a claim syntax error");
    opalg::FalsifyOptions fopts;
    std::string fz_format = "text";
    std::string fz_carrier = "finite";
    fz->add_option("--claim,-c", fopts.claim_text,
                   "Claim text, e.g. \"vars T,S; assume ep(T), ep(S); "
                   "show raneq(ran(T+S), ran(T)+ran(S))\"")
        ->required();
    fz->add_option("--dim", fopts.config.dim, "Matrix dimension of the search")
        ->capture_default_str();
    fz->add_option("--bound", fopts.config.entry_bound,
                   "Entries are drawn uniformly from [-bound, bound]")
        ->capture_default_str();
    fz->add_option("--trials", fopts.config.trials, "Trial budget")->capture_default_str();
    fz->add_option("--seed", fopts.config.seed,
                   "64-bit seed of the SplitMix64 stream (env: OPALG_SEED)")
        ->envname("OPALG_SEED")
        ->capture_default_str();
    fz->add_option("--carrier", fz_carrier, "Operator carrier for the search")
        ->check(CLI::IsMember({"finite", "cofinite"}))
        ->capture_default_str();
    add_format_option(fz, fz_format);

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        return finish(opalg::cmd_verify_paper(to_format(verify_format)));
    }
    if (ep->parsed()) {
        return finish(opalg::cmd_ep_check(ep_path, to_format(ep_format)));
    }
    if (pv->parsed()) {
        return finish(opalg::cmd_pinv(pv_path, to_format(pv_format)));
    }
    if (rc->parsed()) {
        return finish(opalg::cmd_range_compare(rc_left, rc_right, to_format(rc_format)));
    }
    if (fz->parsed()) {
        fopts.format = to_format(fz_format);
        fopts.config.carrier =
            fz_carrier == "cofinite" ? opalg::Carrier::cofinite : opalg::Carrier::finite;
        return finish(opalg::cmd_falsify(fopts));
    }
    return 0;
}
