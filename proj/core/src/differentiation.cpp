#include "iit/differentiation.hpp"

#include "iit/error.hpp"

namespace iit {

std::string_view to_string(UnclassifiableReason reason) {
    switch (reason) {
        case UnclassifiableReason::MissingVolume: return "missing-volume";
        case UnclassifiableReason::ZeroVolume: return "zero-volume";
        case UnclassifiableReason::UnitMismatch: return "unit-mismatch";
        case UnclassifiableReason::InterIndustry: return "inter-industry";
    }
    return "missing-volume";
}

std::string_view to_string(Quality quality) {
    switch (quality) {
        case Quality::Horizontal: return "horizontal";
        case Quality::VerticalHigh: return "vertical-high";
        case Quality::VerticalLow: return "vertical-low";
        case Quality::Unclassifiable: return "unclassifiable";
    }
    return "unclassifiable";
}

std::string DifferentiationLabel::str() const {
    std::string out(to_string(quality_));
    if (reason_) {
        out += ':';
        out += to_string(*reason_);
    }
    return out;
}

std::string_view to_string(Family family) {
    return family == Family::Ghm ? "ghm" : "ff";
}

std::optional<Family> family_from_string(std::string_view text) {
    if (text == "ghm") return Family::Ghm;
    if (text == "ff") return Family::Ff;
    return std::nullopt;
}

std::string_view accounting_name(Family family) {
    return family == Family::Ghm ? "trade-recovery" : "trade-type";
}

DifferentiationMethod::DifferentiationMethod(Family family, double alpha) : family_(family), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ParameterError("alpha must lie strictly between 0 and 1, got " + std::to_string(alpha));
    }
}

RatioOutcome unit_value_ratio(const IndustryFlow& flow) {
    if (!(flow.exports > 0.0) || !(flow.imports > 0.0)) return UnclassifiableReason::InterIndustry;
    if (!flow.export_volume || !flow.import_volume) return UnclassifiableReason::MissingVolume;
    if (!flow.volume_unit) return UnclassifiableReason::UnitMismatch;
    if (!(*flow.export_volume > 0.0) || !(*flow.import_volume > 0.0)) return UnclassifiableReason::ZeroVolume;

    UnitValueRatio ratio;
    ratio.vux = flow.exports / *flow.export_volume;
    ratio.vum = flow.imports / *flow.import_volume;
    ratio.r = ratio.vux / ratio.vum;
    return ratio;
}

namespace {

void check_ratio_args(double r, double alpha) {
    if (!(r > 0.0)) throw ParameterError("unit value ratio must be positive, got " + std::to_string(r));
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ParameterError("alpha must lie strictly between 0 and 1, got " + std::to_string(alpha));
    }
}

DifferentiationLabel classify_interval(double r, double lower, double upper) {
    if (r > upper) return DifferentiationLabel::vertical_high();
    if (r < lower) return DifferentiationLabel::vertical_low();
    return DifferentiationLabel::horizontal();
}

}  // namespace

DifferentiationLabel classify_ghm(double r, double alpha) {
    check_ratio_args(r, alpha);
    return classify_interval(r, 1.0 - alpha, 1.0 + alpha);
}

DifferentiationLabel classify_ff(double r, double alpha) {
    check_ratio_args(r, alpha);
    return classify_interval(r, 1.0 / (1.0 + alpha), 1.0 + alpha);
}

DifferentiationLabel classify(double r, const DifferentiationMethod& method) {
    return method.family() == Family::Ghm ? classify_ghm(r, method.alpha()) : classify_ff(r, method.alpha());
}

SharesReport decompose_shares(const IndustryGroup& group, const DifferentiationMethod& method,
                              const TradeTypeMethod& type_method) {
    if (group.members.empty()) throw DomainError("cannot decompose empty group '" + group.group_id + "'");

    SharesReport report;
    report.group_id = group.group_id;
    report.period = group.period();
    report.reporter = group.reporter();
    report.partner = group.partner();
    report.method = method;
    report.type_method = type_method;

    double total = 0.0;
    for (const auto& m : group.members) {
        if (!(m.exports >= 0.0) || !(m.imports >= 0.0) || !(m.total() > 0.0)) {
            throw DomainError("industry '" + m.key.industry_code + "' in group '" + group.group_id +
                              "' has no positive trade");
        }
        total += m.total();
    }

    // GHM sums minorities and doubles once, matching the synthetic GL index.
    const bool overlap_accounting = method.family() == Family::Ghm;
    double counted = 0.0;
    double horizontal = 0.0;
    double high = 0.0;
    double low = 0.0;
    double unclassified = 0.0;

    report.industries.reserve(group.members.size());
    for (const auto& m : group.members) {
        IndustryDetail detail;
        detail.key = m.key;
        detail.trade_type = classify_trade_type(m, type_method);

        const RatioOutcome ratio = unit_value_ratio(m);
        if (const auto* uv = std::get_if<UnitValueRatio>(&ratio)) detail.r = uv->r;

        double amount = 0.0;
        if (overlap_accounting) {
            counted += m.minority();
            amount = 2.0 * m.minority();
        } else if (detail.trade_type == TradeType::TwoWay) {
            counted += m.total();
            amount = m.total();
        }

        if (amount > 0.0) {
            if (detail.r) {
                detail.label = classify(*detail.r, method);
                switch (detail.label.quality()) {
                    case Quality::Horizontal: horizontal += amount; break;
                    case Quality::VerticalHigh: high += amount; break;
                    case Quality::VerticalLow: low += amount; break;
                    case Quality::Unclassifiable: break;
                }
            } else {
                detail.label = DifferentiationLabel::unclassifiable(std::get<UnclassifiableReason>(ratio));
                unclassified += amount;
            }
        }
        detail.iit_amount = amount;
        detail.contribution = amount / total;
        report.industries.push_back(std::move(detail));
    }

    report.total_trade = total;
    report.iit = (overlap_accounting ? 2.0 * counted : counted) / total;
    report.hiit = horizontal / total;
    report.hqviit = high / total;
    report.lqviit = low / total;
    report.viit = report.hqviit + report.lqviit;
    report.classified_iit = report.hiit + report.viit;
    report.unclassified_share = unclassified / total;
    report.inter_industry = 1.0 - report.iit;
    return report;
}

}  // namespace iit
