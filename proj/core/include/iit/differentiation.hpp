#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iit/indices.hpp"
#include "iit/trade_data.hpp"

namespace iit {

/// Export and import unit values and their ratio r = vux / vum.
struct UnitValueRatio {
    double vux = 0.0;
    double vum = 0.0;
    double r = 0.0;

    bool operator==(const UnitValueRatio&) const = default;
};

enum class UnclassifiableReason {
    MissingVolume,  // export or import quantity absent
    ZeroVolume,     // a quantity is zero while its value is positive
    UnitMismatch,   // quantities present without a consistent unit tag
    InterIndustry,  // no two-way trade to differentiate
};

std::string_view to_string(UnclassifiableReason reason);

enum class Quality { Horizontal, VerticalHigh, VerticalLow, Unclassifiable };

std::string_view to_string(Quality quality);

class DifferentiationLabel {
public:
    static DifferentiationLabel horizontal() noexcept { return DifferentiationLabel(Quality::Horizontal); }
    static DifferentiationLabel vertical_high() noexcept { return DifferentiationLabel(Quality::VerticalHigh); }
    static DifferentiationLabel vertical_low() noexcept { return DifferentiationLabel(Quality::VerticalLow); }
    static DifferentiationLabel unclassifiable(UnclassifiableReason reason) noexcept {
        return DifferentiationLabel(Quality::Unclassifiable, reason);
    }

    Quality quality() const noexcept { return quality_; }
    std::optional<UnclassifiableReason> reason() const noexcept { return reason_; }
    bool is_vertical() const noexcept {
        return quality_ == Quality::VerticalHigh || quality_ == Quality::VerticalLow;
    }

    /// "horizontal", "vertical-high", "vertical-low" or "unclassifiable:<reason>".
    std::string str() const;

    bool operator==(const DifferentiationLabel&) const = default;

private:
    explicit DifferentiationLabel(Quality q, std::optional<UnclassifiableReason> reason = std::nullopt) noexcept
        : quality_(q), reason_(reason) {}

    Quality quality_;
    std::optional<UnclassifiableReason> reason_;
};

/// GHM pairs the interval [1 - alpha, 1 + alpha] with overlap accounting;
/// FF pairs [1 / (1 + alpha), 1 + alpha] with trade-type accounting.
enum class Family { Ghm, Ff };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view text);

inline constexpr double kDefaultAlpha = 0.15;
inline constexpr double kWideAlpha = 0.25;

class DifferentiationMethod {
public:
    /// Throws ParameterError unless 0 < alpha < 1.
    DifferentiationMethod(Family family, double alpha = kDefaultAlpha);

    static DifferentiationMethod ghm(double alpha = kDefaultAlpha) { return {Family::Ghm, alpha}; }
    static DifferentiationMethod ff(double alpha = kDefaultAlpha) { return {Family::Ff, alpha}; }

    Family family() const noexcept { return family_; }
    double alpha() const noexcept { return alpha_; }

    bool operator==(const DifferentiationMethod&) const = default;

private:
    Family family_;
    double alpha_;
};

using RatioOutcome = std::variant<UnitValueRatio, UnclassifiableReason>;

/// Unit values X/x and M/m and their ratio. Missing or zero quantities, and
/// flows with a zero value on either side, yield a reason instead.
RatioOutcome unit_value_ratio(const IndustryFlow& flow);

/// Horizontal iff 1 - alpha <= r <= 1 + alpha.
DifferentiationLabel classify_ghm(double r, double alpha);

/// Horizontal iff 1 / (1 + alpha) <= r <= 1 + alpha.
DifferentiationLabel classify_ff(double r, double alpha);

DifferentiationLabel classify(double r, const DifferentiationMethod& method);

struct IndustryDetail {
    FlowKey key;
    TradeType trade_type = TradeType::OneWay;
    DifferentiationLabel label = DifferentiationLabel::unclassifiable(UnclassifiableReason::InterIndustry);
    std::optional<double> r;
    double iit_amount = 0.0;    // trade counted as intra-industry under the accounting family
    double contribution = 0.0;  // iit_amount / total_trade
};

/// Decomposition of a group's trade into intra-industry shares. Every share
/// is a fraction of `total_trade`.
struct SharesReport {
    std::string group_id;
    std::string period;
    std::string reporter;
    std::string partner;
    DifferentiationMethod method = DifferentiationMethod::ghm();
    TradeTypeMethod type_method = TradeTypeMethod::abd_el_rahman();

    double total_trade = 0.0;
    double iit = 0.0;
    double classified_iit = 0.0;  // hiit + viit
    double hiit = 0.0;
    double viit = 0.0;            // hqviit + lqviit
    double hqviit = 0.0;
    double lqviit = 0.0;
    double unclassified_share = 0.0;
    double inter_industry = 0.0;  // 1 - iit
    std::vector<IndustryDetail> industries;
};

/// "trade-recovery" for GHM, "trade-type" for FF.
std::string_view accounting_name(Family family);

/// Under GHM each industry contributes its overlap 2 min(X, M); under FF each
/// two-way industry contributes X + M. The contribution goes to HIIT,
/// HQVIIT or LQVIIT by the family's interval test on r, or to
/// unclassified_share when r cannot be formed. Throws DomainError on an
/// empty group.
SharesReport decompose_shares(const IndustryGroup& group, const DifferentiationMethod& method,
                              const TradeTypeMethod& type_method);

}  // namespace iit
