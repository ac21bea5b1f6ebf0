#include "iit/report_io.hpp"

#include <charconv>
#include <ostream>

namespace iit {

namespace {

Json method_json(const DifferentiationMethod& method, const TradeTypeMethod& type_method) {
    Json j;
    j["family"] = to_string(method.family());
    j["alpha"] = method.alpha();
    j["accounting"] = accounting_name(method.family());
    j["type_method"] = type_method.name();
    j["aer_threshold"] = type_method.kind() == TradeTypeMethod::Kind::AbdElRahman ? Json(type_method.threshold())
                                                                                   : Json(nullptr);
    return j;
}

Json optional_number(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_optional(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
}

std::string threshold_cell(const TradeTypeMethod& m) {
    return m.kind() == TradeTypeMethod::Kind::AbdElRahman ? format_number(m.threshold()) : std::string();
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

Json to_json(const SharesReport& r) {
    Json j;
    j["group_id"] = r.group_id;
    j["period"] = r.period;
    j["reporter"] = r.reporter;
    j["partner"] = r.partner;
    j["method"] = method_json(r.method, r.type_method);
    j["total_trade"] = r.total_trade;
    j["iit"] = r.iit;
    j["classified_iit"] = r.classified_iit;
    j["hiit"] = r.hiit;
    j["viit"] = r.viit;
    j["hqviit"] = r.hqviit;
    j["lqviit"] = r.lqviit;
    j["unclassified_share"] = r.unclassified_share;
    j["inter_industry"] = r.inter_industry;
    Json rows = Json::array();
    for (const auto& d : r.industries) {
        Json row;
        row["industry_code"] = d.key.industry_code;
        row["trade_type"] = to_string(d.trade_type);
        row["label"] = d.label.str();
        row["r"] = optional_number(d.r);
        row["iit_amount"] = d.iit_amount;
        row["contribution"] = d.contribution;
        rows.push_back(std::move(row));
    }
    j["industries"] = std::move(rows);
    return j;
}

Json to_json(const SweepResult& sweep) {
    Json j;
    const auto& first = sweep.reports.front();
    j["group_id"] = first.group_id;
    j["period"] = first.period;
    j["reporter"] = first.reporter;
    j["partner"] = first.partner;
    j["family"] = to_string(sweep.family);
    j["type_method"] = sweep.type_method.name();
    j["aer_threshold"] = sweep.type_method.kind() == TradeTypeMethod::Kind::AbdElRahman
                             ? Json(sweep.type_method.threshold())
                             : Json(nullptr);
    j["alphas"] = sweep.alphas;
    Json reports = Json::array();
    for (const auto& r : sweep.reports) reports.push_back(to_json(r));
    j["reports"] = std::move(reports);
    Json flips = Json::array();
    for (const auto& f : sweep.flip_points) {
        Json row;
        row["industry_code"] = f.key.industry_code;
        row["alpha_before"] = f.alpha_before;
        row["alpha"] = f.alpha;
        row["label_before"] = f.before.str();
        row["label_after"] = f.after.str();
        flips.push_back(std::move(row));
    }
    j["flip_points"] = std::move(flips);
    return j;
}

Json to_json(const TransitionReport& r) {
    Json j;
    j["group_id"] = r.group_id;
    j["method"] = method_json(r.method, r.type_method);
    j["periods"] = r.periods;
    j["flips"] = r.flips();
    j["skipped"] = r.skipped;
    Json rows = Json::array();
    for (const auto& t : r.transitions) {
        Json row;
        row["reporter"] = t.key_from.reporter;
        row["partner"] = t.key_from.partner;
        row["industry_code"] = t.key_from.industry_code;
        row["period_from"] = t.period_from;
        row["period_to"] = t.period_to;
        row["r_from"] = optional_number(t.r_from);
        row["r_to"] = optional_number(t.r_to);
        row["label_from"] = t.label_from.str();
        row["label_to"] = t.label_to.str();
        row["flipped"] = t.flipped;
        rows.push_back(std::move(row));
    }
    j["transitions"] = std::move(rows);
    return j;
}

void write_shares_csv(std::ostream& out, const std::vector<SharesReport>& reports) {
    out << "group_id,period,reporter,partner,family,alpha,accounting,type_method,aer_threshold,"
           "total_trade,iit,classified_iit,hiit,viit,hqviit,lqviit,unclassified_share,inter_industry,industries\n";
    for (const auto& r : reports) {
        out << csv_field(r.group_id) << ',' << csv_field(r.period) << ',' << csv_field(r.reporter) << ','
            << csv_field(r.partner) << ',' << to_string(r.method.family()) << ','
            << format_number(r.method.alpha()) << ',' << accounting_name(r.method.family()) << ','
            << r.type_method.name() << ',' << threshold_cell(r.type_method) << ',' << format_number(r.total_trade)
            << ',' << format_number(r.iit) << ',' << format_number(r.classified_iit) << ','
            << format_number(r.hiit) << ',' << format_number(r.viit) << ',' << format_number(r.hqviit) << ','
            << format_number(r.lqviit) << ',' << format_number(r.unclassified_share) << ','
            << format_number(r.inter_industry) << ',' << r.industries.size() << '\n';
    }
}

void write_flip_csv(std::ostream& out, const std::vector<SweepResult>& sweeps) {
    out << "group_id,period,reporter,partner,industry_code,family,type_method,aer_threshold,"
           "alpha_before,alpha_after,label_before,label_after\n";
    for (const auto& s : sweeps) {
        const auto& head = s.reports.front();
        for (const auto& f : s.flip_points) {
            out << csv_field(head.group_id) << ',' << csv_field(f.key.period) << ',' << csv_field(f.key.reporter)
                << ',' << csv_field(f.key.partner) << ',' << csv_field(f.key.industry_code) << ','
                << to_string(s.family) << ',' << s.type_method.name() << ',' << threshold_cell(s.type_method)
                << ',' << format_number(f.alpha_before) << ',' << format_number(f.alpha) << ','
                << f.before.str() << ',' << f.after.str() << '\n';
        }
    }
}

void write_transitions_csv(std::ostream& out, const std::vector<TransitionReport>& reports) {
    out << "group_id,reporter,partner,industry_code,family,alpha,type_method,aer_threshold,"
           "period_from,period_to,r_from,r_to,label_from,label_to,flipped\n";
    for (const auto& r : reports) {
        for (const auto& t : r.transitions) {
            out << csv_field(r.group_id) << ',' << csv_field(t.key_from.reporter) << ','
                << csv_field(t.key_from.partner) << ',' << csv_field(t.key_from.industry_code) << ','
                << to_string(r.method.family()) << ',' << format_number(r.method.alpha()) << ','
                << r.type_method.name() << ',' << threshold_cell(r.type_method) << ','
                << csv_field(t.period_from) << ',' << csv_field(t.period_to) << ',' << csv_optional(t.r_from)
                << ',' << csv_optional(t.r_to) << ',' << t.label_from.str() << ',' << t.label_to.str() << ','
                << (t.flipped ? "true" : "false") << '\n';
        }
    }
}

}  // namespace iit
