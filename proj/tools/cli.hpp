#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iit/differentiation.hpp"
#include "iit/trade_data.hpp"

namespace iit::cli {

enum ExitCode : int { kSuccess = 0, kConfigError = 1, kDataError = 2 };

enum class Command { Compute, Sweep, Transitions, Validate };

enum class OutputFormat { Json, Csv };

struct RunConfig {
    Command command = Command::Compute;
    std::string input;
    std::optional<std::string> group_map;
    GroupPolicy group_policy = GroupPolicy::OwnCode;
    Family family = Family::Ghm;
    double alpha = kDefaultAlpha;
    std::string type_method = "aer";
    double aer_threshold = 0.10;
    std::vector<double> sweep_alphas;
    std::optional<std::string> output;  // stdout when absent
    OutputFormat format = OutputFormat::Json;
};

/// Entry point shared by the binary and the tests. `out` receives reports
/// written to stdout, `err` diagnostics and usage text.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_transitions(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace iit::cli
