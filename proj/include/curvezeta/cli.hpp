#ifndef CURVEZETA_CLI_HPP
#define CURVEZETA_CLI_HPP

#include <curvezeta/equitree.hpp>
#include <curvezeta/serialize.hpp>

#include <iosfwd>
#include <string>

namespace curvezeta {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kDegenerate = 3, kConsistency = 4 };

struct Report {
    Json json;
    std::string text;
    int exit_code = kOk;
};

/// Full report for a tree; invalid trees give kInvalidInput with a diagnostic
/// in json["error"].
Report tree_report(const BambooSpec& tree, bool oracle);

/// Full report for a polynomial through the nondegenerate pipeline.
Report poly_report(const std::string& expr, bool oracle);

/// Entry point of the command-line tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvezeta

#endif  // CURVEZETA_CLI_HPP
