#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iit/differentiation.hpp"
#include "iit/sensitivity.hpp"

namespace iit {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

Json to_json(const SharesReport& report);
Json to_json(const SweepResult& sweep);
Json to_json(const TransitionReport& report);

/// One row per report (group and method combination).
void write_shares_csv(std::ostream& out, const std::vector<SharesReport>& reports);

/// One row per (industry, alpha boundary) across all sweeps.
void write_flip_csv(std::ostream& out, const std::vector<SweepResult>& sweeps);

/// One row per (industry, consecutive period pair).
void write_transitions_csv(std::ostream& out, const std::vector<TransitionReport>& reports);

}  // namespace iit
