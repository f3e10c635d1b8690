#pragma once

#include "opalg/falsifier.hpp"
#include "opalg/fixtures.hpp"
#include "opalg/opfile.hpp"

#include <string>

namespace opalg {

enum class OutputFormat { text, machine };

/// Exit-code contract:
///   verify-paper:   0 all claims pass, 1 otherwise
///   ep-check/pinv/range-compare: 0 verdict printed, 2 on parse/IO errors
///   falsify:        1 counterexample found (successful falsification!),
///                   0 no counterexample within the trial budget,
///                   2 claim syntax error
struct CommandResult {
    int exit_code = 0;
    std::string output;       // stdout payload; machine format is one JSON document
    std::string diagnostics;  // stderr payload, nonempty only on errors
};

CommandResult cmd_verify_paper(OutputFormat format);
CommandResult cmd_ep_check(const std::string& path, OutputFormat format);
CommandResult cmd_pinv(const std::string& path, OutputFormat format);
CommandResult cmd_range_compare(const std::string& left_path, const std::string& right_path,
                                OutputFormat format);

struct FalsifyOptions {
    std::string claim_text;
    FalsifyConfig config;
    OutputFormat format = OutputFormat::text;
};

CommandResult cmd_falsify(const FalsifyOptions& options);

}  // namespace opalg
