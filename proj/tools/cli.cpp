#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "iit/error.hpp"
#include "iit/report_io.hpp"
#include "iit/sensitivity.hpp"

namespace iit::cli {

namespace {

constexpr std::size_t kMaxRowDiagnostics = 50;

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Compute: return "compute";
        case Command::Sweep: return "sweep";
        case Command::Transitions: return "transitions";
        case Command::Validate: return "validate";
    }
    return "compute";
}

TradeTypeMethod type_method_of(const RunConfig& config) {
    return config.type_method == "vona" ? TradeTypeMethod::vona()
                                        : TradeTypeMethod::abd_el_rahman(config.aer_threshold);
}

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = command_name(c.command);
    j["input"] = c.input;
    j["group_map"] = c.group_map ? Json(*c.group_map) : Json(nullptr);
    j["group_policy"] = to_string(c.group_policy);
    j["family"] = to_string(c.family);
    if (c.command == Command::Sweep) {
        j["alphas"] = c.sweep_alphas;
    } else {
        j["alpha"] = c.alpha;
    }
    j["type_method"] = c.type_method;
    j["aer_threshold"] = c.type_method == "aer" ? Json(c.aer_threshold) : Json(nullptr);
    j["format"] = c.format == OutputFormat::Json ? "json" : "csv";
    return j;
}

struct Loaded {
    std::size_t records = 0;
    CleanedFlows cleaned;
    std::vector<IndustryGroup> groups;
};

Loaded load(const RunConfig& config, std::ostream& err) {
    std::ifstream in(config.input, std::ios::binary);
    if (!in) throw ParameterError("--input: cannot open '" + config.input + "'");

    auto parsed = scan_flow_records(in);
    if (!parsed.errors.empty()) {
        std::size_t shown = 0;
        for (const auto& e : parsed.errors) {
            if (shown++ == kMaxRowDiagnostics) break;
            err << config.input << ": row " << e.row << ": " << e.reason << '\n';
        }
        if (parsed.errors.size() > kMaxRowDiagnostics) {
            err << "... " << parsed.errors.size() - kMaxRowDiagnostics << " more row errors\n";
        }
        throw DataError(std::to_string(parsed.errors.size()) + " malformed row(s) in '" + config.input + "'",
                        parsed.errors.front().row);
    }

    Loaded loaded;
    loaded.records = parsed.records.size();
    loaded.cleaned = pair_and_clean(parsed.records);

    GroupMapping mapping;
    if (config.group_map) {
        std::ifstream map_in(*config.group_map, std::ios::binary);
        if (!map_in) throw ParameterError("--group-map: cannot open '" + *config.group_map + "'");
        mapping = parse_group_mapping(map_in);
    }
    loaded.groups = apply_grouping(loaded.cleaned.flows, mapping, config.group_policy);
    return loaded;
}

Json summary_json(const Loaded& loaded) {
    Json j;
    j["records"] = loaded.records;
    j["industry_flows"] = loaded.cleaned.flows.size();
    j["dropped_zero_trade_keys"] = loaded.cleaned.dropped_keys;
    j["dropped_zero_trade_rows"] = loaded.cleaned.dropped_rows;
    j["groups"] = loaded.groups.size();
    return j;
}

class Sink {
public:
    Sink(const std::optional<std::string>& path, std::ostream& fallback) : path_(path), fallback_(fallback) {
        if (path_) {
            file_.open(*path_, std::ios::binary | std::ios::trunc);
            if (!file_) throw ParameterError("--output: cannot write '" + *path_ + "'");
        }
    }

    std::ostream& stream() { return path_ ? static_cast<std::ostream&>(file_) : fallback_; }

private:
    std::optional<std::string> path_;
    std::ostream& fallback_;
    std::ofstream file_;
};

void write_json(const RunConfig& config, std::ostream& out, const Json& doc) {
    Sink sink(config.output, out);
    sink.stream() << doc.dump(2) << '\n';
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
    std::filesystem::path p(path);
    auto stem = p.stem().string();
    auto ext = p.extension().string();
    return (p.parent_path() / (stem + suffix + (ext.empty() ? ".csv" : ext))).string();
}

double parse_fraction(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ParameterError("'" + text + "' is not a number");
    return value;
}

std::vector<double> parse_alpha_list(const std::string& text) {
    std::vector<double> alphas;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double a = 0.0;
        try {
            a = parse_fraction(item);
        } catch (const ParameterError& e) {
            throw ParameterError(std::string("--alphas: ") + e.what());
        }
        if (!(a > 0.0 && a < 1.0)) throw ParameterError("--alphas: value " + item + " outside (0, 1)");
        if (!alphas.empty() && !(a > alphas.back())) {
            throw ParameterError("--alphas: values must be strictly increasing");
        }
        alphas.push_back(a);
    }
    if (alphas.empty()) throw ParameterError("--alphas: empty list");
    return alphas;
}

const CLI::Validator kOpenFraction(
    [](std::string& text) -> std::string {
        try {
            double v = parse_fraction(text);
            if (v > 0.0 && v < 1.0) return {};
            return "value " + text + " must lie strictly between 0 and 1";
        } catch (const ParameterError& e) {
            return e.what();
        }
    },
    "FRACTION in (0,1)");

}  // namespace

int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto loaded = load(config, err);
    const DifferentiationMethod method(config.family, config.alpha);
    const auto type_method = type_method_of(config);

    std::vector<SharesReport> reports;
    reports.reserve(loaded.groups.size());
    for (const auto& g : loaded.groups) reports.push_back(decompose_shares(g, method, type_method));

    if (config.format == OutputFormat::Csv) {
        Sink sink(config.output, out);
        write_shares_csv(sink.stream(), reports);
        return kSuccess;
    }
    Json doc;
    doc["config"] = config_json(config);
    doc["summary"] = summary_json(loaded);
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    doc["reports"] = std::move(arr);
    write_json(config, out, doc);
    return kSuccess;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto loaded = load(config, err);
    const auto type_method = type_method_of(config);

    std::vector<SweepResult> sweeps;
    sweeps.reserve(loaded.groups.size());
    for (const auto& g : loaded.groups) {
        sweeps.push_back(alpha_sweep(g, config.sweep_alphas, config.family, type_method));
    }

    if (config.format == OutputFormat::Csv) {
        {
            Sink sink(config.output, out);
            write_flip_csv(sink.stream(), sweeps);
        }
        if (config.output) {
            std::vector<SharesReport> all;
            for (const auto& s : sweeps) all.insert(all.end(), s.reports.begin(), s.reports.end());
            Sink shares(sibling_path(*config.output, ".shares"), out);
            write_shares_csv(shares.stream(), all);
        }
        return kSuccess;
    }
    Json doc;
    doc["config"] = config_json(config);
    doc["summary"] = summary_json(loaded);
    Json arr = Json::array();
    std::size_t flips = 0;
    for (const auto& s : sweeps) {
        flips += s.flip_points.size();
        arr.push_back(to_json(s));
    }
    doc["summary"]["flip_points"] = flips;
    doc["sweeps"] = std::move(arr);
    write_json(config, out, doc);
    return kSuccess;
}

int run_transitions(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto loaded = load(config, err);
    const DifferentiationMethod method(config.family, config.alpha);
    const auto type_method = type_method_of(config);

    // One panel per (reporter, partner, group), periods ordered lexicographically.
    std::map<std::tuple<std::string, std::string, std::string>, std::vector<IndustryGroup>> panels;
    for (const auto& g : loaded.groups) panels[{g.reporter(), g.partner(), g.group_id}].push_back(g);

    std::vector<TransitionReport> reports;
    std::size_t single_period = 0;
    for (const auto& [key, panel] : panels) {
        if (panel.size() < 2) {
            ++single_period;
            continue;
        }
        reports.push_back(nature_transitions(panel, method, type_method));
    }
    if (reports.empty()) {
        throw ParameterError("transitions: input needs at least two periods for some reporter/partner/group");
    }

    if (config.format == OutputFormat::Csv) {
        Sink sink(config.output, out);
        write_transitions_csv(sink.stream(), reports);
        return kSuccess;
    }
    Json doc;
    doc["config"] = config_json(config);
    doc["summary"] = summary_json(loaded);
    doc["summary"]["single_period_series"] = single_period;
    std::size_t flips = 0;
    Json arr = Json::array();
    for (const auto& r : reports) {
        flips += r.flips();
        arr.push_back(to_json(r));
    }
    doc["summary"]["flips"] = flips;
    doc["panels"] = std::move(arr);
    write_json(config, out, doc);
    return kSuccess;
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto loaded = load(config, err);
    Json doc;
    doc["config"] = config_json(config);
    doc["summary"] = summary_json(loaded);
    doc["valid"] = true;
    write_json(config, out, doc);
    return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intra-industry trade indicators from bilateral trade flows", "iit"};
    app.require_subcommand(1);

    RunConfig config;
    std::string policy = "own-code";
    std::string family = "ghm";
    std::string format = "json";
    std::string alphas_text;
    std::string output;
    std::string group_map;

    auto add_common = [&](CLI::App* sub, bool method_flags) {
        sub->add_option("--input", config.input, "Trade flow CSV")->required()->check(CLI::ExistingFile);
        sub->add_option("--group-map", group_map, "industry_code,group_id CSV")->check(CLI::ExistingFile);
        sub->add_option("--group-policy", policy, "Unmapped industries: own-code|strict|drop")
            ->check(CLI::IsMember({"own-code", "strict", "drop"}));
        sub->add_option("--output", output, "Report path (stdout when omitted)");
        sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        if (!method_flags) return;
        sub->add_option("--family", family, "ghm|ff")->check(CLI::IsMember({"ghm", "ff"}));
        sub->add_option("--type-method", config.type_method, "vona|aer")->check(CLI::IsMember({"vona", "aer"}));
        sub->add_option("--aer-threshold", config.aer_threshold, "Abd-El-Rahman minority share threshold")
            ->check(kOpenFraction);
    };

    auto* compute = app.add_subcommand("compute", "Share decomposition per group");
    add_common(compute, true);
    compute->add_option("--alpha", config.alpha, "Unit value ratio threshold")->check(kOpenFraction);

    auto* sweep = app.add_subcommand("sweep", "Decomposition over a grid of alphas with flip table");
    add_common(sweep, true);
    sweep->add_option("--alphas", alphas_text, "Comma separated, strictly increasing");

    auto* transitions = app.add_subcommand("transitions", "Label changes between consecutive periods");
    add_common(transitions, true);
    transitions->add_option("--alpha", config.alpha, "Unit value ratio threshold")->check(kOpenFraction);

    auto* validate = app.add_subcommand("validate", "Parse and pair the input without computing");
    add_common(validate, false);

    try {
        app.parse(argc, argv);
        if (!alphas_text.empty()) {
            config.sweep_alphas = parse_alpha_list(alphas_text);
        } else {
            config.sweep_alphas = default_alpha_grid();
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kConfigError;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kConfigError;
    }

    if (*compute) config.command = Command::Compute;
    if (*sweep) config.command = Command::Sweep;
    if (*transitions) config.command = Command::Transitions;
    if (*validate) config.command = Command::Validate;
    config.group_policy = *group_policy_from_string(policy);
    config.family = *family_from_string(family);
    config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (!output.empty()) config.output = output;
    if (!group_map.empty()) config.group_map = group_map;

    try {
        switch (config.command) {
            case Command::Compute: return run_compute(config, out, err);
            case Command::Sweep: return run_sweep(config, out, err);
            case Command::Transitions: return run_transitions(config, out, err);
            case Command::Validate: return run_validate(config, out, err);
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kSuccess;
}

}  // namespace iit::cli
