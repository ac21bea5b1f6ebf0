#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "iit/trade_data.hpp"

namespace iit {

enum class TradeType { OneWay, TwoWay };

std::string_view to_string(TradeType type);

/// Rule separating one-way from two-way trade in an industry.
///
/// Vona counts any industry with both flows nonzero as two-way. The
/// Abd-El-Rahman rule additionally requires the minority flow to reach a
/// fraction `threshold` of the majority flow (boundary inclusive).
class TradeTypeMethod {
public:
    enum class Kind { Vona, AbdElRahman };

    static constexpr double kDefaultThreshold = 0.10;

    static TradeTypeMethod vona() noexcept { return TradeTypeMethod(Kind::Vona, kDefaultThreshold); }
    /// Throws ParameterError unless 0 < threshold < 1.
    static TradeTypeMethod abd_el_rahman(double threshold = kDefaultThreshold);

    Kind kind() const noexcept { return kind_; }
    /// Meaningful for AbdElRahman only.
    double threshold() const noexcept { return threshold_; }
    std::string_view name() const noexcept { return kind_ == Kind::Vona ? "vona" : "aer"; }

    bool operator==(const TradeTypeMethod&) const = default;

private:
    TradeTypeMethod(Kind kind, double threshold) noexcept : kind_(kind), threshold_(threshold) {}

    Kind kind_;
    double threshold_;
};

/// |X - M| / (X + M). Throws DomainError when X + M is not positive.
double balassa_index(const IndustryFlow& flow);

/// (X - M) / (X + M), in [-1, 1].
double balassa_performance(const IndustryFlow& flow);

/// 2 min(X, M) / (X + M).
double grubel_lloyd_simple(const IndustryFlow& flow);

/// Overlapped trade over total trade across the group:
/// 2 sum(min(X_i, M_i)) / sum(X_i + M_i). Throws DomainError on an empty group.
double grubel_lloyd_synthetic(const IndustryGroup& group);

TradeType classify_trade_type(const IndustryFlow& flow, const TradeTypeMethod& method);

/// Share of group trade carried by industries classified two-way under `method`.
double vona_synthetic(const IndustryGroup& group, const TradeTypeMethod& method);

}  // namespace iit
