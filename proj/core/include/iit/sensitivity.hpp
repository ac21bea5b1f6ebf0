#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iit/differentiation.hpp"

namespace iit {

/// The grid {0.05, 0.10, ..., 0.30}.
std::vector<double> default_alpha_grid();

struct FlipPoint {
    FlowKey key;
    double alpha_before = 0.0;  // last alpha carrying the old label
    double alpha = 0.0;         // first alpha carrying the new label
    DifferentiationLabel before = DifferentiationLabel::horizontal();
    DifferentiationLabel after = DifferentiationLabel::horizontal();
};

struct SweepResult {
    Family family = Family::Ghm;
    TradeTypeMethod type_method = TradeTypeMethod::abd_el_rahman();
    std::vector<double> alphas;
    std::vector<SharesReport> reports;  // one per alpha, same order
    std::vector<FlipPoint> flip_points; // ordered by industry, then alpha
};

/// Decomposes `group` at every alpha and records each industry whose label
/// changes between consecutive alphas. Throws ParameterError unless `alphas`
/// is nonempty, strictly increasing and inside (0, 1).
SweepResult alpha_sweep(const IndustryGroup& group, const std::vector<double>& alphas, Family family,
                        const TradeTypeMethod& type_method);

struct Transition {
    FlowKey key_from;  // key at the earlier period
    std::string period_from;
    std::string period_to;
    std::optional<double> r_from;
    std::optional<double> r_to;
    DifferentiationLabel label_from = DifferentiationLabel::horizontal();
    DifferentiationLabel label_to = DifferentiationLabel::horizontal();
    bool flipped = false;
};

struct TransitionReport {
    std::string group_id;
    DifferentiationMethod method = DifferentiationMethod::ghm();
    TradeTypeMethod type_method = TradeTypeMethod::abd_el_rahman();
    std::vector<std::string> periods;  // in evaluation order
    std::vector<Transition> transitions;
    std::size_t skipped = 0;  // industries present in only one period of a pair
    std::size_t flips() const;
};

/// Strict weak ordering on period labels.
using PeriodOrder = std::function<bool(const std::string&, const std::string&)>;

/// Compares labels of each industry (by reporter, partner, industry code)
/// across consecutive periods of `panel`. Each panel entry is one period's
/// group. Periods are sorted with `order` (lexicographic by default).
/// Throws ParameterError for fewer than two distinct periods.
TransitionReport nature_transitions(const std::vector<IndustryGroup>& panel, const DifferentiationMethod& method,
                                    const TradeTypeMethod& type_method, PeriodOrder order = {});

}  // namespace iit
