#include <gtest/gtest.h>

#include "generators.hpp"
#include "iit/error.hpp"
#include "iit/sensitivity.hpp"

using namespace iit;
using iit::test_support::make_flow;
using iit::test_support::make_group;

namespace {

const auto H = DifferentiationLabel::horizontal();
const auto VH = DifferentiationLabel::vertical_high();
const auto VL = DifferentiationLabel::vertical_low();
const auto kAer = TradeTypeMethod::abd_el_rahman();

// Equal values and volumes scaled so that r = export_uv / import_uv.
IndustryFlow with_ratio(double r, std::string code = "1", std::string period = "2020") {
    auto f = make_flow(100.0 * r, 100, 100, 100, std::move(code));
    f.key.period = std::move(period);
    return f;
}

IndustryGroup period_group(std::string period, std::vector<double> ratios) {
    IndustryGroup g{"G", {}};
    for (std::size_t i = 0; i < ratios.size(); ++i) g.members.push_back(with_ratio(ratios[i], "I" + std::to_string(i), period));
    return g;
}

}  // namespace

TEST(AlphaSweep, WorkedRatioFlipsAtWideAlpha) {
    auto res = alpha_sweep(make_group({with_ratio(1.16)}), {0.15, 0.25}, Family::Ghm, kAer);
    ASSERT_EQ(res.reports.size(), 2u);
    ASSERT_EQ(res.flip_points.size(), 1u);
    EXPECT_EQ(res.flip_points[0].alpha, 0.25);
    EXPECT_EQ(res.flip_points[0].alpha_before, 0.15);
    EXPECT_EQ(res.flip_points[0].before, VH);
    EXPECT_EQ(res.flip_points[0].after, H);
}

TEST(AlphaSweep, UnitRatioNeverFlips) {
    auto res = alpha_sweep(make_group({with_ratio(1.0)}), default_alpha_grid(), Family::Ff, kAer);
    EXPECT_TRUE(res.flip_points.empty());
    res = alpha_sweep(make_group({with_ratio(1.0)}), default_alpha_grid(), Family::Ghm, kAer);
    EXPECT_TRUE(res.flip_points.empty());
}

TEST(AlphaSweep, LowRatioBecomesHorizontal) {
    // 0.86 < 0.90 at alpha 0.10 but 0.86 >= 0.85 at alpha 0.15.
    auto f = make_flow(86, 100, 100, 100);
    auto res = alpha_sweep(make_group({f}), {0.10, 0.15}, Family::Ghm, kAer);
    ASSERT_EQ(res.flip_points.size(), 1u);
    EXPECT_EQ(res.flip_points[0].alpha, 0.15);
    EXPECT_EQ(res.flip_points[0].before, VL);
    EXPECT_EQ(res.flip_points[0].after, H);
}

TEST(AlphaSweep, RejectsBadGrids) {
    auto g = make_group({with_ratio(1.0)});
    EXPECT_THROW(alpha_sweep(g, {}, Family::Ghm, kAer), ParameterError);
    EXPECT_THROW(alpha_sweep(g, {0.2, 0.1}, Family::Ghm, kAer), ParameterError);
    EXPECT_THROW(alpha_sweep(g, {0.1, 0.1}, Family::Ghm, kAer), ParameterError);
    EXPECT_THROW(alpha_sweep(g, {0.1, 1.0}, Family::Ghm, kAer), ParameterError);
}

TEST(AlphaSweep, SingleAlphaReproducesDecomposition) {
    test_support::FlowGenerator gen(21);
    for (int i = 0; i < 100; ++i) {
        auto g = gen.group();
        std::erase_if(g.members, [](const IndustryFlow& f) { return f.total() == 0.0; });
        if (g.members.empty()) continue;
        auto res = alpha_sweep(g, {0.2}, Family::Ff, kAer);
        auto direct = decompose_shares(g, DifferentiationMethod::ff(0.2), kAer);
        EXPECT_EQ(res.reports[0].iit, direct.iit);
        EXPECT_EQ(res.reports[0].hiit, direct.hiit);
        EXPECT_EQ(res.reports[0].hqviit, direct.hqviit);
        EXPECT_EQ(res.reports[0].lqviit, direct.lqviit);
        EXPECT_TRUE(res.flip_points.empty());
    }
}

TEST(AlphaSweep, LabelsOnlyMoveTowardHorizontal) {
    test_support::FlowGenerator gen(22);
    std::vector<double> grid;
    for (int k = 1; k < 40; ++k) grid.push_back(k * 0.025);
    for (int i = 0; i < 200; ++i) {
        auto g = gen.group();
        std::erase_if(g.members, [](const IndustryFlow& f) { return f.total() == 0.0; });
        if (g.members.empty()) continue;
        for (auto fam : {Family::Ghm, Family::Ff}) {
            auto res = alpha_sweep(g, grid, fam, kAer);
            for (const auto& f : res.flip_points) {
                EXPECT_TRUE(f.before.is_vertical());
                EXPECT_EQ(f.after, H);
            }
        }
    }
}

TEST(NatureTransitions, SmallMoveAcrossBoundaryFlips) {
    std::vector<IndustryGroup> panel{period_group("2021", {1.149}), period_group("2020", {1.151})};
    auto rep = nature_transitions(panel, DifferentiationMethod::ghm(0.15), kAer);
    ASSERT_EQ(rep.transitions.size(), 1u);
    const auto& t = rep.transitions[0];
    EXPECT_EQ(t.period_from, "2020");
    EXPECT_EQ(t.period_to, "2021");
    EXPECT_EQ(t.label_from, VH);
    EXPECT_EQ(t.label_to, H);
    EXPECT_TRUE(t.flipped);
    EXPECT_EQ(rep.flips(), 1u);

    auto wide = nature_transitions(panel, DifferentiationMethod::ghm(0.25), kAer);
    EXPECT_FALSE(wide.transitions[0].flipped);
    EXPECT_EQ(wide.transitions[0].label_from, H);
}

TEST(NatureTransitions, ConstantRatiosNeverFlip) {
    std::vector<IndustryGroup> panel{period_group("2019", {0.5, 1.0, 1.16, 3.0}),
                                     period_group("2020", {0.5, 1.0, 1.16, 3.0}),
                                     period_group("2021", {0.5, 1.0, 1.16, 3.0})};
    for (double a : default_alpha_grid()) {
        for (auto fam : {Family::Ghm, Family::Ff}) {
            EXPECT_EQ(nature_transitions(panel, DifferentiationMethod(fam, a), kAer).flips(), 0u);
        }
    }
}

TEST(NatureTransitions, SkipsIndustriesMissingFromAPeriod) {
    std::vector<IndustryGroup> panel{period_group("2020", {1.0, 1.0}), period_group("2021", {1.0})};
    auto rep = nature_transitions(panel, DifferentiationMethod::ghm(), kAer);
    EXPECT_EQ(rep.transitions.size(), 1u);
    EXPECT_EQ(rep.skipped, 1u);
}

TEST(NatureTransitions, CustomPeriodOrder) {
    std::vector<IndustryGroup> panel{period_group("9", {1.151}), period_group("10", {1.149})};
    auto numeric = [](const std::string& a, const std::string& b) { return std::stoi(a) < std::stoi(b); };
    auto rep = nature_transitions(panel, DifferentiationMethod::ghm(), kAer, numeric);
    EXPECT_EQ(rep.periods, (std::vector<std::string>{"9", "10"}));
    EXPECT_EQ(rep.transitions[0].label_from, VH);
}

TEST(NatureTransitions, NeedsTwoDistinctPeriods) {
    EXPECT_THROW(nature_transitions({period_group("2020", {1.0})}, DifferentiationMethod::ghm(), kAer),
                 ParameterError);
    EXPECT_THROW(nature_transitions({period_group("2020", {1.0}), period_group("2020", {1.0})},
                                    DifferentiationMethod::ghm(), kAer),
                 ParameterError);
}
