#include "iit/trade_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "iit/error.hpp"
#include "detail/csv.hpp"

namespace iit {

namespace {

constexpr std::size_t kFlowColumns = 9;

enum Column : std::size_t {
    kPeriod,
    kReporter,
    kPartner,
    kIndustry,
    kExportValue,
    kImportValue,
    kExportQty,
    kImportQty,
    kQtyUnit,
};

struct RowResult {
    std::optional<FlowRecord> record;
    std::string reason;
};

bool parse_amount(std::string_view cell, std::string_view column, double& out, std::string& reason) {
    auto value = detail::parse_decimal(cell);
    if (!value) {
        reason = std::string(column) + ": not a decimal number '" + std::string(cell) + "'";
        return false;
    }
    if (*value < 0.0) {
        reason = std::string(column) + ": negative value " + std::string(cell);
        return false;
    }
    out = *value + 0.0;  // folds -0 into +0
    return true;
}

RowResult parse_row(const std::vector<std::string>& cells) {
    RowResult result;
    if (cells.size() != kFlowColumns) {
        result.reason = "expected " + std::to_string(kFlowColumns) + " fields, found " +
                        std::to_string(cells.size());
        return result;
    }
    static constexpr std::string_view names[kFlowColumns] = {
        "period",       "reporter",     "partner",    "industry_code", "export_value",
        "import_value", "export_qty",   "import_qty", "qty_unit"};
    for (std::size_t c : {kPeriod, kReporter, kPartner, kIndustry, kExportValue, kImportValue}) {
        if (cells[c].empty()) {
            result.reason = std::string(names[c]) + ": empty required field";
            return result;
        }
    }

    FlowRecord rec;
    rec.period = cells[kPeriod];
    rec.reporter = cells[kReporter];
    rec.partner = cells[kPartner];
    rec.industry_code = cells[kIndustry];
    if (!parse_amount(cells[kExportValue], names[kExportValue], rec.export_value, result.reason) ||
        !parse_amount(cells[kImportValue], names[kImportValue], rec.import_value, result.reason)) {
        return result;
    }
    for (std::size_t c : {kExportQty, kImportQty}) {
        if (cells[c].empty()) continue;
        double qty = 0.0;
        if (!parse_amount(cells[c], names[c], qty, result.reason)) return result;
        (c == kExportQty ? rec.export_volume : rec.import_volume) = qty;
    }
    if (!cells[kQtyUnit].empty()) rec.volume_unit = cells[kQtyUnit];
    if ((rec.export_volume || rec.import_volume) && !rec.volume_unit) {
        result.reason = "qty_unit: volume present without a unit";
        return result;
    }
    result.record = std::move(rec);
    return result;
}

struct KeyHash {
    std::size_t operator()(const FlowKey& k) const noexcept {
        std::hash<std::string> h;
        std::size_t seed = h(k.period);
        for (const auto* s : {&k.reporter, &k.partner, &k.industry_code}) {
            seed ^= h(*s) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        }
        return seed;
    }
};

struct VolumeAccumulator {
    double sum = 0.0;
    bool seen = false;     // some record carried a volume
    bool tainted = false;  // some record carried value but no volume

    void add(double value, const std::optional<double>& volume) {
        if (volume) {
            sum += *volume;
            seen = true;
        } else if (value > 0.0) {
            tainted = true;
        }
    }

    std::optional<double> result() const {
        if (!seen || tainted) return std::nullopt;
        return sum;
    }
};

struct Accumulator {
    double exports = 0.0;
    double imports = 0.0;
    VolumeAccumulator export_volume;
    VolumeAccumulator import_volume;
    std::optional<std::string> unit;
    std::size_t rows = 0;
};

std::string describe(const FlowKey& key) {
    return "(" + key.period + ", " + key.reporter + ", " + key.partner + ", " + key.industry_code + ")";
}

}  // namespace

ParseOutcome scan_flow_records(std::istream& source, const CsvFormat& format) {
    ParseOutcome out;
    detail::LineReader lines(source);
    std::string_view line;
    if (!lines.next(line)) {
        out.errors.push_back({1, "missing header row"});
        return out;
    }
    if (line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    std::string expected_header(kFlowHeader);
    if (format.delimiter != ',') std::replace(expected_header.begin(), expected_header.end(), ',', format.delimiter);
    if (line != expected_header) {
        out.errors.push_back({1, "header must be exactly '" + expected_header + "'"});
        return out;
    }

    std::vector<std::string> cells;
    while (lines.next(line)) {
        if (line.empty()) continue;
        const std::size_t row = lines.line_number();
        std::string reason;
        if (!detail::split_csv_line(line, format.delimiter, cells, reason)) {
            out.errors.push_back({row, reason});
            continue;
        }
        auto parsed = parse_row(cells);
        if (parsed.record) {
            out.records.push_back(std::move(*parsed.record));
        } else {
            out.errors.push_back({row, std::move(parsed.reason)});
        }
    }
    return out;
}

std::vector<FlowRecord> parse_flow_records(std::istream& source, const CsvFormat& format) {
    auto outcome = scan_flow_records(source, format);
    if (!outcome.errors.empty()) {
        const auto& first = outcome.errors.front();
        throw DataError("row " + std::to_string(first.row) + ": " + first.reason, first.row);
    }
    return std::move(outcome.records);
}

CleanedFlows pair_and_clean(const std::vector<FlowRecord>& records) {
    std::unordered_map<FlowKey, Accumulator, KeyHash> merged;
    merged.reserve(records.size());
    for (const auto& rec : records) {
        FlowKey key{rec.period, rec.reporter, rec.partner, rec.industry_code};
        auto& acc = merged[key];
        if (rec.volume_unit) {
            if (acc.unit && *acc.unit != *rec.volume_unit) {
                throw DataError("conflicting volume units '" + *acc.unit + "' and '" + *rec.volume_unit +
                                "' for key " + describe(key));
            }
            acc.unit = rec.volume_unit;
        }
        acc.exports += rec.export_value;
        acc.imports += rec.import_value;
        acc.export_volume.add(rec.export_value, rec.export_volume);
        acc.import_volume.add(rec.import_value, rec.import_volume);
        ++acc.rows;
    }

    CleanedFlows out;
    out.flows.reserve(merged.size());
    for (auto& [key, acc] : merged) {
        if (acc.exports == 0.0 && acc.imports == 0.0) {
            ++out.dropped_keys;
            out.dropped_rows += acc.rows;
            continue;
        }
        IndustryFlow flow;
        flow.key = key;
        flow.exports = acc.exports;
        flow.imports = acc.imports;
        flow.export_volume = acc.export_volume.result();
        flow.import_volume = acc.import_volume.result();
        if (flow.export_volume || flow.import_volume) flow.volume_unit = acc.unit;
        out.flows.push_back(std::move(flow));
    }
    std::sort(out.flows.begin(), out.flows.end(),
              [](const IndustryFlow& a, const IndustryFlow& b) { return a.key < b.key; });
    return out;
}

FlowRecord to_record(const IndustryFlow& flow) {
    return FlowRecord{flow.key.period,   flow.key.reporter,   flow.key.partner,
                      flow.key.industry_code, flow.exports,   flow.imports,
                      flow.export_volume, flow.import_volume, flow.volume_unit};
}

GroupMapping parse_group_mapping(std::istream& source) {
    GroupMapping mapping;
    detail::LineReader lines(source);
    std::string_view line;
    if (!lines.next(line)) throw DataError("group map: missing header row", 1);
    if (line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (line != kGroupMapHeader) {
        throw DataError(std::string("group map: header must be exactly '") + kGroupMapHeader + "'", 1);
    }
    std::vector<std::string> cells;
    while (lines.next(line)) {
        if (line.empty()) continue;
        const std::size_t row = lines.line_number();
        std::string reason;
        if (!detail::split_csv_line(line, ',', cells, reason)) {
            throw DataError("group map row " + std::to_string(row) + ": " + reason, row);
        }
        if (cells.size() != 2 || cells[0].empty() || cells[1].empty()) {
            throw DataError("group map row " + std::to_string(row) + ": expected 'industry_code,group_id'", row);
        }
        auto [it, inserted] = mapping.emplace(cells[0], cells[1]);
        if (!inserted && it->second != cells[1]) {
            throw DataError("group map row " + std::to_string(row) + ": industry '" + cells[0] +
                                "' mapped to both '" + it->second + "' and '" + cells[1] + "'",
                            row);
        }
    }
    return mapping;
}

std::vector<IndustryGroup> apply_grouping(const std::vector<IndustryFlow>& flows,
                                          const GroupMapping& mapping,
                                          GroupPolicy policy) {
    using GroupKey = std::tuple<std::string, std::string, std::string, std::string>;
    std::map<GroupKey, std::vector<const IndustryFlow*>> buckets;
    std::set<std::string> unmapped;

    for (const auto& flow : flows) {
        const std::string* group = nullptr;
        if (auto it = mapping.find(flow.key.industry_code); it != mapping.end()) {
            group = &it->second;
        } else if (policy == GroupPolicy::OwnCode) {
            group = &flow.key.industry_code;
        } else {
            if (policy == GroupPolicy::Strict) unmapped.insert(flow.key.industry_code);
            continue;
        }
        buckets[{flow.key.period, flow.key.reporter, flow.key.partner, *group}].push_back(&flow);
    }

    if (!unmapped.empty()) {
        std::ostringstream msg;
        msg << "unmapped industry codes under strict grouping:";
        for (const auto& code : unmapped) msg << ' ' << code;
        throw DataError(msg.str());
    }

    std::vector<IndustryGroup> groups;
    groups.reserve(buckets.size());
    for (auto& [key, members] : buckets) {
        std::sort(members.begin(), members.end(),
                  [](const IndustryFlow* a, const IndustryFlow* b) { return a->key < b->key; });
        IndustryGroup group;
        group.group_id = std::get<3>(key);
        group.members.reserve(members.size());
        for (const auto* m : members) group.members.push_back(*m);
        groups.push_back(std::move(group));
    }
    return groups;
}

std::optional<GroupPolicy> group_policy_from_string(std::string_view text) {
    if (text == "own-code") return GroupPolicy::OwnCode;
    if (text == "strict") return GroupPolicy::Strict;
    if (text == "drop") return GroupPolicy::Drop;
    return std::nullopt;
}

std::string_view to_string(GroupPolicy policy) {
    switch (policy) {
        case GroupPolicy::OwnCode: return "own-code";
        case GroupPolicy::Strict: return "strict";
        case GroupPolicy::Drop: return "drop";
    }
    return "own-code";
}

}  // namespace iit
