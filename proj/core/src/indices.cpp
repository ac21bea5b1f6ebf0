#include "iit/indices.hpp"

#include <cmath>

#include "iit/error.hpp"

namespace iit {

namespace {

double checked_total(const IndustryFlow& flow) {
    const double total = flow.total();
    if (!(flow.exports >= 0.0) || !(flow.imports >= 0.0) || !(total > 0.0) || !std::isfinite(total)) {
        throw DomainError("index undefined for industry '" + flow.key.industry_code +
                          "': exports and imports must be nonnegative with a positive sum");
    }
    return total;
}

double checked_group_total(const IndustryGroup& group) {
    if (group.members.empty()) throw DomainError("index undefined for empty group '" + group.group_id + "'");
    double total = 0.0;
    for (const auto& m : group.members) total += checked_total(m);
    return total;
}

}  // namespace

std::string_view to_string(TradeType type) {
    return type == TradeType::OneWay ? "one-way" : "two-way";
}

TradeTypeMethod TradeTypeMethod::abd_el_rahman(double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw ParameterError("Abd-El-Rahman threshold must lie strictly between 0 and 1, got " +
                             std::to_string(threshold));
    }
    return TradeTypeMethod(Kind::AbdElRahman, threshold);
}

double balassa_index(const IndustryFlow& flow) {
    const double total = checked_total(flow);
    return std::abs(flow.exports - flow.imports) / total;
}

double balassa_performance(const IndustryFlow& flow) {
    const double total = checked_total(flow);
    return (flow.exports - flow.imports) / total;
}

double grubel_lloyd_simple(const IndustryFlow& flow) {
    const double total = checked_total(flow);
    return 2.0 * flow.minority() / total;
}

double grubel_lloyd_synthetic(const IndustryGroup& group) {
    const double total = checked_group_total(group);
    double overlap = 0.0;
    for (const auto& m : group.members) overlap += m.minority();
    return 2.0 * overlap / total;
}

TradeType classify_trade_type(const IndustryFlow& flow, const TradeTypeMethod& method) {
    checked_total(flow);
    const double minority = flow.minority();
    if (minority == 0.0) return TradeType::OneWay;
    if (method.kind() == TradeTypeMethod::Kind::Vona) return TradeType::TwoWay;
    return minority / flow.majority() >= method.threshold() ? TradeType::TwoWay : TradeType::OneWay;
}

double vona_synthetic(const IndustryGroup& group, const TradeTypeMethod& method) {
    const double total = checked_group_total(group);
    double two_way = 0.0;
    for (const auto& m : group.members) {
        if (classify_trade_type(m, method) == TradeType::TwoWay) two_way += m.total();
    }
    return two_way / total;
}

}  // namespace iit
