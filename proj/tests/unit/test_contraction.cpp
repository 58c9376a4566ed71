#include <gtest/gtest.h>

#include <cmath>

#include "jungck/contraction.hpp"
#include "jungck/error.hpp"

using namespace jungck;

namespace {

OrderedMetricSpace quarter_powers(std::size_t budget = 128) {
    return IndexedSequenceSpace([](std::size_t i) { return -std::pow(0.25, double(i)) * double(std::min<std::size_t>(i, 1)); },
                                budget);
}

MappingPair shift_pair() {
    MappingPair p;
    p.T = SelfMap::index_fn([](std::size_t i) { return i + 2; }, "T");
    p.S = SelfMap::index_fn([](std::size_t i) { return i + 1; }, "S");
    return p;
}

ImplicitContraction linear_F(double k) {
    ImplicitContraction ic;
    ic.id = "t1 - k t2";
    ic.F = [k](const Tuple6& t) { return t[0] - k * t[1]; };
    ic.companion = ComparisonFn::linear(k);
    return ic;
}

}  // namespace

class LinearComparison : public ::testing::TestWithParam<double> {};

TEST_P(LinearComparison, Passes) {
    const auto r = check_comparison(ComparisonFn::linear(GetParam()));
    EXPECT_TRUE(r.passed()) << r.detail;
    EXPECT_GT(r.evaluated, 25u);
}

INSTANTIATE_TEST_SUITE_P(Ks, LinearComparison, ::testing::Values(0.0, 0.25, 0.5, 0.9));

TEST(Comparison, IdentityIsNotBelowTheDiagonal) {
    const auto r = check_comparison(ComparisonFn::linear(1.0));
    ASSERT_EQ(r.verdict, ConditionVerdict::Counterexample);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->kind, "phi(t) >= t");
    EXPECT_GT(*r.witness->t, 0.0);
}

TEST(Comparison, DecreasingFunctionIsRejected) {
    const ComparisonFn bad([](double t) { return t > 0 ? 0.5 / (1 + t) * t / (1 + t * t) : 0.0; }, "bump");
    const auto r = check_comparison(bad);
    ASSERT_EQ(r.verdict, ConditionVerdict::Counterexample);
    EXPECT_EQ(r.witness->kind, "not increasing");
}

TEST(Comparison, NonzeroAtOriginIsRejected) {
    const ComparisonFn shifted([](double t) { return 0.5 * t + 0.1; }, "shifted");
    EXPECT_EQ(check_comparison(shifted).witness->kind, "phi(0) != 0");
}

TEST(Comparison, RationalAndIterate) {
    const auto g = ComparisonFn::rational(0.5, 1.0);
    EXPECT_DOUBLE_EQ(g(2.0), 1.0 / 3.0);
    EXPECT_TRUE(check_comparison(g).passed());
    EXPECT_DOUBLE_EQ(ComparisonFn::linear(0.5).iterate(8.0, 3), 1.0);
    EXPECT_DOUBLE_EQ(ComparisonFn::zero()(5.0), 0.0);
}

TEST(HalfComparison, LinearPassesExactlyBelowOneHalf) {
    for (double k : {0.0, 0.1, 0.25, 0.4, 0.49}) {
        EXPECT_TRUE(check_half_comparison(HalfComparisonFn(ComparisonFn::linear(k))).passed()) << k;
    }
    for (double k : {0.5, 0.6, 0.75, 0.9}) {
        const auto r = check_half_comparison(HalfComparisonFn(ComparisonFn::linear(k)));
        ASSERT_EQ(r.verdict, ConditionVerdict::Counterexample) << k;
        EXPECT_EQ(r.witness->kind, "rho(2t) >= t");
        EXPECT_GT(*r.witness->t, 0.0);
    }
}

TEST(Characteristic, TuplesMatchTheConditions) {
    EXPECT_EQ(characteristic_tuple(ConditionId::F1a, 2, 3), (Tuple6{2, 3, 3, 2, 5, 0}));
    EXPECT_EQ(characteristic_tuple(ConditionId::F1b, 2, 3), (Tuple6{2, 3, 0, 5, 2, 3}));
    EXPECT_EQ(characteristic_tuple(ConditionId::F1c, 2, 3), (Tuple6{2, 3, 5, 0, 3, 2}));
    EXPECT_THROW(characteristic_tuple(ConditionId::F2, 1, 1), Error);
}

TEST(Conditions, LinearFormSatisfiesAll) {
    const auto ic = linear_F(0.4);
    for (auto id : {ConditionId::F1a, ConditionId::F1b, ConditionId::F1c, ConditionId::F2})
        EXPECT_TRUE(check_condition(ic, id).passed()) << to_string(id);
}

TEST(Conditions, ImplicationCounterexampleCarriesTuple) {
    // Companion too small for F = t1 - 0.5 t2.
    auto ic = linear_F(0.5);
    ic.companion = ComparisonFn::linear(0.25);
    const auto r = check_condition(ic, ConditionId::F1a);
    ASSERT_EQ(r.verdict, ConditionVerdict::Counterexample);
    EXPECT_EQ(r.witness->kind, "implication fails");
    ASSERT_EQ(r.witness->tuple.size(), 6u);
    EXPECT_LE(r.witness->value, kEpsTol);
}

TEST(Conditions, MonotonicityCounterexampleNamesCoordinate) {
    ImplicitContraction ic = linear_F(0.3);
    ic.F = [](const Tuple6& t) { return t[0] - 0.3 * t[1] + 0.01 * t[2]; };
    const auto r = check_condition(ic, ConditionId::F1c);
    ASSERT_EQ(r.verdict, ConditionVerdict::Counterexample);
    EXPECT_EQ(r.witness->kind, "not decreasing");
    EXPECT_EQ(r.witness->coordinate, 2u);
}

TEST(Conditions, F2FailsForZeroMap) {
    ImplicitContraction ic = linear_F(0.3);
    ic.F = [](const Tuple6& t) { return t[0] - t[1]; };
    const auto r = check_condition_F2(ic);
    ASSERT_EQ(r.verdict, ConditionVerdict::Counterexample);
    EXPECT_EQ(r.witness->tuple[2], 0.0);
}

TEST(Conditions, MissingCompanionThrows) {
    ImplicitContraction ic = linear_F(0.3);
    ic.companion.reset();
    EXPECT_THROW(check_condition_F1(ic, ConditionId::F1a), MissingCompanion);
    EXPECT_NO_THROW(check_condition_F2(ic));
}

TEST(Conditions, CustomGrid) {
    const auto grid = GridSpec::from_points({0, 1, 2}, "tiny");
    const auto r = check_condition(linear_F(0.5), ConditionId::F1a, grid);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.grid, "tiny");
    EXPECT_EQ(GridSpec::default_grid().axis.size(), 26u);
}

TEST(Contraction, TupleOrder) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 3});
    MappingPair p;
    p.T = SelfMap::table({0, 0, 1});
    const auto t = contraction_tuple(s, p, Point::at_index(1), Point::at_index(2));
    // d(Tx,Ty), d(Sx,Sy), d(Sx,Tx), d(Sy,Ty), d(Sx,Ty), d(Sy,Tx)
    EXPECT_EQ(t, (Tuple6{1, 2, 1, 2, 0, 3}));
}

TEST(Contraction, QuarterRatioIsTight) {
    const auto space = quarter_powers();
    const auto pair = shift_pair();
    const auto pass = evaluate_contraction(space, pair, linear_F(0.25));
    EXPECT_TRUE(pass.passed()) << pass.detail;
    EXPECT_EQ(pass.evaluated, 64u * 65u / 2u);

    const auto fail = evaluate_contraction(space, pair, linear_F(0.24));
    ASSERT_EQ(fail.verdict, ConditionVerdict::Counterexample);
    ASSERT_TRUE(fail.witness && fail.witness->point && fail.witness->other);
    const auto& w = fail.witness->tuple;
    EXPECT_NEAR(w[0] / w[1], 0.25, 0.25 * 1e-12);
}

TEST(Contraction, UndefinedTuplesAreSkipped) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a"}, {0});
    MappingPair p;
    ImplicitContraction ic = linear_F(0.3);
    ic.F = [](const Tuple6& t) -> double {
        if (t[1] == 0) throw DomainError("division by zero", std::vector<double>(t.begin(), t.end()));
        return t[0] / t[1];
    };
    const auto r = evaluate_contraction(s, p, ic);
    EXPECT_EQ(r.verdict, ConditionVerdict::NotApplicable);
    EXPECT_EQ(r.not_applicable, 1u);
}

TEST(Contraction, IntervalSamples) {
    const OrderedMetricSpace s = NumericIntervalSpace({-1, 1, false, true});
    PairSampler sampler;
    sampler.numeric_samples = 21;
    const auto pts = sample_points(s, sampler);
    EXPECT_FALSE(pts.empty());
    for (const auto& p : pts) EXPECT_TRUE(s.contains(p));
    EXPECT_EQ(pts.back().value(), 1.0);
    MappingPair p;
    p.T = SelfMap::real_fn([](double x) { return x / 3; });
    EXPECT_TRUE(evaluate_contraction(s, p, linear_F(1.0 / 3 + 1e-12), sampler).passed());
    EXPECT_FALSE(evaluate_contraction(s, p, linear_F(0.3), sampler).passed());
}
