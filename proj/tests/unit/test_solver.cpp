#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "jungck/error.hpp"
#include "jungck/solver.hpp"

using namespace jungck;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OrderedMetricSpace isolated_one() {
    return NumericIntervalSpace(
        {-1, 1, false, true}, [](double a, double b) { return (a <= b && b != 1) || (a == 1 && b == 1); },
        "isolated-one");
}

MappingPair third() {
    MappingPair p;
    p.T = SelfMap::real_fn([](double x) { return x / 3; }, "x/3");
    return p;
}

OrderedMetricSpace quarter_powers(std::size_t budget = 128) {
    return IndexedSequenceSpace(
        [](std::size_t i) { return -std::pow(0.25, double(i)) * double(std::min<std::size_t>(i, 1)); }, budget);
}

MappingPair shift_pair() {
    MappingPair p;
    p.T = SelfMap::index_fn([](std::size_t i) { return i + 2; });
    p.S = SelfMap::index_fn([](std::size_t i) { return i + 1; });
    return p;
}

}  // namespace

TEST(Solver, ThirdMapConvergesToZero) {
    const auto space = isolated_one();
    const auto pair = third();
    const auto tr = jungck_sequence(space, pair, Point::at_value(0.9));
    EXPECT_EQ(tr.direction, Direction::Decreasing);
    ASSERT_EQ(tr.verdict, TraceVerdict::CauchyDetected);
    std::optional<std::size_t> small;
    for (std::size_t n = 0; n < tr.steps.size(); ++n) {
        if (!small && std::abs(tr.steps[n].x.value()) <= 1e-9) small = n;
        if (tr.steps[n].gap && n + 1 < tr.steps.size())
            EXPECT_NEAR(*tr.steps[n].gap, 0.2 * std::pow(3.0, -double(n)), 1e-15) << n;
    }
    ASSERT_TRUE(small);
    EXPECT_LE(*small, 25u);

    const auto fp = extract_fixed_point(space, pair, tr);
    EXPECT_EQ(fp.coincidence.value(), 0.0);
    EXPECT_EQ(fp.residual, 0.0);
    ASSERT_TRUE(fp.common_fixed_point);
    EXPECT_EQ(fp.common_fixed_point->value(), 0.0);
    EXPECT_TRUE(fp.weakly_compatible_here);
}

TEST(Solver, IncreasingStartFailsFromAbove) {
    const auto tr = jungck_sequence(isolated_one(), third(), Point::at_value(0.9), {10000, Direction::Increasing});
    EXPECT_EQ(tr.verdict, TraceVerdict::PreconditionFailed);
    EXPECT_TRUE(tr.steps.empty());
}

TEST(Solver, IsolatedPointIsNotAStart) {
    // 1/3 and 1 are incomparable under the isolated-one order.
    const auto tr = jungck_sequence(isolated_one(), third(), Point::at_value(1.0));
    EXPECT_EQ(tr.verdict, TraceVerdict::PreconditionFailed);
}

TEST(Solver, FiniteHit) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 3});
    MappingPair p;
    p.T = SelfMap::table({0, 0, 1});
    const auto tr = jungck_sequence(s, p, Point::at_index(2), {100, Direction::Decreasing});
    ASSERT_EQ(tr.verdict, TraceVerdict::CoincidenceHit);
    EXPECT_EQ(*tr.hit_at, 2u);
    EXPECT_EQ(tr.steps.back().x, Point::at_index(0));
    EXPECT_EQ(*tr.steps[0].gap, 1.0);
    const auto fp = extract_fixed_point(s, p, tr);
    EXPECT_EQ(fp.common_fixed_point, Point::at_index(0));
    EXPECT_FALSE(fp.from_search);
}

TEST(Solver, MissingPreimageThrows) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 2});
    MappingPair p;
    p.T = SelfMap::table({2, 2, 2});
    p.S = SelfMap::table({0, 1, 1});
    try {
        jungck_sequence(s, p, Point::at_index(0));
        FAIL();
    } catch (const NoPreimage& e) {
        EXPECT_EQ(e.target(), Point::at_index(2));
    }
}

TEST(Solver, ShiftPairExhaustsBudget) {
    const auto space = quarter_powers();
    const auto tr = jungck_sequence(space, shift_pair(), Point::at_index(1), {128, Direction::Increasing});
    EXPECT_EQ(tr.verdict, TraceVerdict::NoCoincidenceWithinBudget);
    EXPECT_FALSE(tr.steps.empty());
    EXPECT_THROW(extract_fixed_point(space, shift_pair(), tr), NoCoincidence);
}

TEST(Solver, IterationBudgetIsRespected) {
    const auto tr = jungck_sequence(quarter_powers(), shift_pair(), Point::at_index(1), {10, Direction::Increasing});
    EXPECT_EQ(tr.verdict, TraceVerdict::NoCoincidenceWithinBudget);
    EXPECT_EQ(tr.steps.size(), 10u);
}

TEST(Solver, QuadraticHasNoCoincidence) {
    const OrderedMetricSpace space = NumericIntervalSpace({0, kInf, true, false});
    MappingPair p;
    p.T = SelfMap::real_fn([](double x) { return x * x + 1; });
    p.S = SelfMap::real_fn([](double x) { return 2 * x / 3; });
    p.s_inverse = [](double y) { return 1.5 * y; };
    const auto tr = jungck_sequence(space, p, Point::at_value(0), {60, Direction::Increasing});
    EXPECT_NE(tr.verdict, TraceVerdict::CoincidenceHit);
    try {
        extract_fixed_point(space, p, tr);
        FAIL();
    } catch (const NoCoincidence& e) {
        EXPECT_NEAR(e.min_residual(), 8.0 / 9.0, 1e-9);
        EXPECT_NEAR(e.argmin().value(), 1.0 / 3.0, 1e-6);
    }
}

TEST(Cauchy, DetectsAndValidatesEps) {
    const auto space = isolated_one();
    const auto tr = jungck_sequence(space, third(), Point::at_value(0.9));
    const auto phi = ComparisonFn::linear(1.0 / 3);
    const auto cd = detect_cauchy(space, tr, phi, 0.01);
    ASSERT_TRUE(cd.detected);
    // Threshold eps - phi(eps) = 2/300; first gap below it is 0.2 * 3^-4.
    EXPECT_EQ(*cd.at, 4u);
    EXPECT_FALSE(cd.containment_violated);
    EXPECT_THROW(detect_cauchy(space, tr, phi, 0), InvalidEps);
    EXPECT_THROW(detect_cauchy(space, tr, phi, -1), InvalidEps);
    EXPECT_THROW(detect_cauchy(space, tr, ComparisonFn([](double t) { return t; }, "id"), 0.1), InvalidEps);
}

TEST(Audit, ContractionGapsPass) {
    const auto tr = jungck_sequence(isolated_one(), third(), Point::at_value(0.9));
    const auto a = audit_gaps(tr, ComparisonFn::linear(1.0 / 3));
    EXPECT_TRUE(a.ok) << a.detail;
    EXPECT_GT(a.checked, 10u);
    const auto bad = audit_gaps(tr, ComparisonFn::linear(0.2));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.step_violation, 1u);
}

TEST(Audit, ShiftGapsAreExactlyQuarterRate) {
    const auto tr = jungck_sequence(quarter_powers(), shift_pair(), Point::at_index(1), {40, Direction::Increasing});
    EXPECT_TRUE(audit_gaps(tr, ComparisonFn::linear(0.25)).ok);
    EXPECT_FALSE(audit_gaps(tr, ComparisonFn::linear(0.24), 0).ok);
}

TEST(StartCondition, EitherResolves) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b"}, {0, 1});
    MappingPair p;
    p.T = SelfMap::table({1, 0});
    EXPECT_EQ(start_condition(s, p, Point::at_index(0), Direction::Either), Direction::Increasing);
    EXPECT_EQ(start_condition(s, p, Point::at_index(1), Direction::Either), Direction::Decreasing);
    EXPECT_FALSE(start_condition(s, p, Point::at_index(1), Direction::Increasing));
    EXPECT_EQ(direction_from_string("dec"), Direction::Decreasing);
    EXPECT_EQ(to_string(TraceVerdict::CauchyDetected), "cauchy-detected");
}
