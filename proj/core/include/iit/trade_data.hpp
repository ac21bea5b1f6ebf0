#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iit {

/// One parsed data row of a bilateral trade extract.
struct FlowRecord {
    std::string period;
    std::string reporter;
    std::string partner;
    std::string industry_code;
    double export_value = 0.0;
    double import_value = 0.0;
    std::optional<double> export_volume;
    std::optional<double> import_volume;
    std::optional<std::string> volume_unit;

    bool operator==(const FlowRecord&) const = default;
};

struct FlowKey {
    std::string period;
    std::string reporter;
    std::string partner;
    std::string industry_code;

    auto operator<=>(const FlowKey&) const = default;
    bool operator==(const FlowKey&) const = default;
};

/// Paired export/import observation for one industry in one
/// (period, reporter, partner) snapshot. Values are in currency units,
/// volumes in `volume_unit`.
struct IndustryFlow {
    FlowKey key;
    double exports = 0.0;
    double imports = 0.0;
    std::optional<double> export_volume;
    std::optional<double> import_volume;
    std::optional<std::string> volume_unit;

    double total() const noexcept { return exports + imports; }
    double minority() const noexcept { return exports < imports ? exports : imports; }
    double majority() const noexcept { return exports < imports ? imports : exports; }

    bool operator==(const IndustryFlow&) const = default;
};

/// A set of industries sharing one (period, reporter, partner) snapshot.
struct IndustryGroup {
    std::string group_id;
    std::vector<IndustryFlow> members;

    const std::string& period() const { return members.front().key.period; }
    const std::string& reporter() const { return members.front().key.reporter; }
    const std::string& partner() const { return members.front().key.partner; }
};

inline constexpr const char* kFlowHeader =
    "period,reporter,partner,industry_code,export_value,import_value,export_qty,import_qty,qty_unit";
inline constexpr const char* kGroupMapHeader = "industry_code,group_id";

struct CsvFormat {
    char delimiter = ',';
};

struct RowError {
    std::size_t row = 0;  // 1-based physical line; the header is line 1
    std::string reason;
};

struct ParseOutcome {
    std::vector<FlowRecord> records;
    std::vector<RowError> errors;
};

/// Parses every row, collecting all row-level failures instead of stopping
/// at the first. A bad or missing header is reported as an error on row 1
/// and ends the scan.
ParseOutcome scan_flow_records(std::istream& source, const CsvFormat& format = {});

/// Strict variant: throws DataError for the first bad row.
std::vector<FlowRecord> parse_flow_records(std::istream& source, const CsvFormat& format = {});

struct CleanedFlows {
    std::vector<IndustryFlow> flows;  // sorted by key, keys unique
    std::size_t dropped_keys = 0;     // keys whose merged X and M are both zero
    std::size_t dropped_rows = 0;     // input records folded into those keys
};

/// Merges records sharing a key by summation and drops zero-trade keys.
/// Throws DataError when two records of one key carry different units.
CleanedFlows pair_and_clean(const std::vector<FlowRecord>& records);

FlowRecord to_record(const IndustryFlow& flow);

enum class GroupPolicy {
    OwnCode,  // unmapped industries form their own group named by their code
    Strict,   // any unmapped industry is an error
    Drop,     // unmapped industries are discarded
};

using GroupMapping = std::map<std::string, std::string>;

/// Reads the two-column `industry_code,group_id` file.
GroupMapping parse_group_mapping(std::istream& source);

/// Groups flows per (period, reporter, partner, group id). Output is ordered
/// by that tuple and members keep key order.
std::vector<IndustryGroup> apply_grouping(const std::vector<IndustryFlow>& flows,
                                          const GroupMapping& mapping,
                                          GroupPolicy policy);

std::optional<GroupPolicy> group_policy_from_string(std::string_view text);
std::string_view to_string(GroupPolicy policy);

}  // namespace iit
