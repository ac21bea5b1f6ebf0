#include "iit/sensitivity.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "iit/error.hpp"

namespace iit {

std::vector<double> default_alpha_grid() {
    return {0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
}

SweepResult alpha_sweep(const IndustryGroup& group, const std::vector<double>& alphas, Family family,
                        const TradeTypeMethod& type_method) {
    if (alphas.empty()) throw ParameterError("alpha sweep needs at least one alpha");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0 && alphas[i] < 1.0)) {
            throw ParameterError("sweep alpha " + std::to_string(alphas[i]) + " outside (0, 1)");
        }
        if (i > 0 && !(alphas[i] > alphas[i - 1])) {
            throw ParameterError("sweep alphas must be strictly increasing");
        }
    }

    SweepResult result;
    result.family = family;
    result.type_method = type_method;
    result.alphas = alphas;
    result.reports.reserve(alphas.size());
    for (double alpha : alphas) {
        result.reports.push_back(decompose_shares(group, DifferentiationMethod(family, alpha), type_method));
    }

    const std::size_t n = group.members.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 1; a < alphas.size(); ++a) {
            const auto& before = result.reports[a - 1].industries[i].label;
            const auto& after = result.reports[a].industries[i].label;
            if (before != after) {
                result.flip_points.push_back({group.members[i].key, alphas[a - 1], alphas[a], before, after});
            }
        }
    }
    return result;
}

std::size_t TransitionReport::flips() const {
    return static_cast<std::size_t>(
        std::count_if(transitions.begin(), transitions.end(), [](const Transition& t) { return t.flipped; }));
}

TransitionReport nature_transitions(const std::vector<IndustryGroup>& panel, const DifferentiationMethod& method,
                                    const TradeTypeMethod& type_method, PeriodOrder order) {
    if (!order) order = std::less<std::string>();

    std::vector<const IndustryGroup*> sorted;
    sorted.reserve(panel.size());
    for (const auto& g : panel) {
        if (g.members.empty()) throw DomainError("panel contains an empty group '" + g.group_id + "'");
        sorted.push_back(&g);
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const IndustryGroup* a, const IndustryGroup* b) { return order(a->period(), b->period()); });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (!order(sorted[i - 1]->period(), sorted[i]->period())) {
            throw ParameterError("panel has two groups for period '" + sorted[i]->period() + "'");
        }
    }
    if (sorted.size() < 2) throw ParameterError("transition analysis needs at least two periods");

    TransitionReport report;
    report.group_id = sorted.front()->group_id;
    report.method = method;
    report.type_method = type_method;

    using Identity = std::tuple<std::string, std::string, std::string>;
    auto identity = [](const FlowKey& k) { return Identity{k.reporter, k.partner, k.industry_code}; };

    std::vector<SharesReport> shares;
    shares.reserve(sorted.size());
    for (const auto* g : sorted) {
        report.periods.push_back(g->period());
        shares.push_back(decompose_shares(*g, method, type_method));
    }

    for (std::size_t p = 1; p < shares.size(); ++p) {
        std::map<Identity, const IndustryDetail*> later;
        for (const auto& d : shares[p].industries) later.emplace(identity(d.key), &d);

        std::size_t matched = 0;
        for (const auto& d : shares[p - 1].industries) {
            auto it = later.find(identity(d.key));
            if (it == later.end()) {
                ++report.skipped;
                continue;
            }
            ++matched;
            Transition t;
            t.key_from = d.key;
            t.period_from = report.periods[p - 1];
            t.period_to = report.periods[p];
            t.r_from = d.r;
            t.r_to = it->second->r;
            t.label_from = d.label;
            t.label_to = it->second->label;
            t.flipped = t.label_from != t.label_to;
            report.transitions.push_back(std::move(t));
        }
        report.skipped += later.size() - matched;
    }
    return report;
}

}  // namespace iit
