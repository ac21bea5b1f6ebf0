#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "iit/differentiation.hpp"
#include "iit/sensitivity.hpp"
#include "iit/trade_data.hpp"

namespace {

std::string synthetic_csv(int rows) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> value(0.0, 1e5), qty(1.0, 1e3);
    std::ostringstream out;
    out << iit::kFlowHeader << '\n';
    for (int i = 0; i < rows; ++i) {
        out << 2000 + i % 5 << ",FRA,P" << i % 7 << ',' << 100000 + i / 35 << ',' << value(rng) << ','
            << value(rng) << ',' << qty(rng) << ',' << qty(rng) << ",kg\n";
    }
    return out.str();
}

iit::IndustryGroup synthetic_group(int n) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> value(1.0, 1e5), qty(1.0, 1e3);
    iit::IndustryGroup g{"G", {}};
    for (int i = 0; i < n; ++i) {
        iit::IndustryFlow f;
        f.key = {"2020", "FRA", "DEU", std::to_string(i)};
        f.exports = value(rng);
        f.imports = value(rng);
        f.export_volume = qty(rng);
        f.import_volume = qty(rng);
        f.volume_unit = "kg";
        g.members.push_back(std::move(f));
    }
    return g;
}

void BM_ParseFlowRecords(benchmark::State& state) {
    const auto text = synthetic_csv(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(text);
        auto records = iit::parse_flow_records(in);
        benchmark::DoNotOptimize(records.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseFlowRecords)->Arg(10'000)->Arg(100'000);

void BM_PairAndGroup(benchmark::State& state) {
    const auto text = synthetic_csv(static_cast<int>(state.range(0)));
    std::istringstream in(text);
    const auto records = iit::parse_flow_records(in);
    for (auto _ : state) {
        auto cleaned = iit::pair_and_clean(records);
        auto groups = iit::apply_grouping(cleaned.flows, {}, iit::GroupPolicy::OwnCode);
        benchmark::DoNotOptimize(groups.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PairAndGroup)->Arg(100'000);

void BM_DecomposeShares(benchmark::State& state) {
    const auto group = synthetic_group(static_cast<int>(state.range(0)));
    const auto method = state.range(1) ? iit::DifferentiationMethod::ff() : iit::DifferentiationMethod::ghm();
    for (auto _ : state) {
        auto report = iit::decompose_shares(group, method, iit::TradeTypeMethod::abd_el_rahman());
        benchmark::DoNotOptimize(report.iit);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DecomposeShares)->Args({1000, 0})->Args({1000, 1});

void BM_AlphaSweep(benchmark::State& state) {
    const auto group = synthetic_group(1000);
    const auto grid = iit::default_alpha_grid();
    for (auto _ : state) {
        auto sweep = iit::alpha_sweep(group, grid, iit::Family::Ghm, iit::TradeTypeMethod::vona());
        benchmark::DoNotOptimize(sweep.flip_points.data());
    }
}
BENCHMARK(BM_AlphaSweep);

}  // namespace

BENCHMARK_MAIN();
