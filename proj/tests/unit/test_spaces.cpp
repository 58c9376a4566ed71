#include <gtest/gtest.h>

#include <cmath>

#include "jungck/error.hpp"
#include "jungck/spaces.hpp"

using namespace jungck;

namespace {

OrderedMetricSpace isolated_one() {
    return NumericIntervalSpace(
        {-1, 1, false, true},
        [](double a, double b) { return (a <= b && b != 1) || (a == 1 && b == 1); }, "isolated-one");
}

}  // namespace

TEST(FiniteSpace, LineSpaceHasUsualMetricAndOrder) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 3});
    EXPECT_EQ(s.flavor(), Flavor::Finite);
    EXPECT_DOUBLE_EQ(s.metric(Point::at_index(0), Point::at_index(2)), 3.0);
    EXPECT_TRUE(s.leq(Point::at_index(0), Point::at_index(1)));
    EXPECT_FALSE(s.leq(Point::at_index(2), Point::at_index(1)));
    EXPECT_TRUE(validate_space(s).ok());
    EXPECT_EQ(s.finite()->find("c"), 2u);
    EXPECT_FALSE(s.finite()->find("z").has_value());
    EXPECT_EQ(s.label(Point::at_index(1)), "b");
}

TEST(FiniteSpace, ExplicitOrderIsReflexivelyClosed) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b"}, {0, 1}, {});
    EXPECT_TRUE(s.leq(Point::at_index(0), Point::at_index(0)));
    EXPECT_FALSE(s.comparable(Point::at_index(0), Point::at_index(1)));
}

TEST(FiniteSpace, ValidationReportsMetricViolations) {
    // d(a,c) = 5 > d(a,b) + d(b,c) = 2, and d(a,b) is asymmetric.
    const OrderedMetricSpace s = FiniteSpace({"a", "b", "c"}, {0, 1, 5, 2, 0, 1, 5, 1, 0}, {});
    const auto r = validate_space(s);
    ASSERT_FALSE(r.ok());
    bool triangle = false, symmetry = false;
    for (const auto& v : r.violations) {
        triangle |= v.axiom == "triangle";
        symmetry |= v.axiom == "symmetry";
    }
    EXPECT_TRUE(triangle);
    EXPECT_TRUE(symmetry);
}

TEST(FiniteSpace, ValidationReportsOrderViolations) {
    const OrderedMetricSpace cyc = FiniteSpace::on_line({"a", "b"}, {0, 1}, {{0, 1}, {1, 0}});
    const auto r = validate_space(cyc);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations.front().axiom, "antisymmetry");

    const OrderedMetricSpace gap = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 2}, {{0, 1}, {1, 2}});
    const auto g = validate_space(gap);
    ASSERT_FALSE(g.ok());
    EXPECT_EQ(g.violations.front().axiom, "transitivity");
    EXPECT_EQ(g.violations.front().witness, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(FiniteSpace, ShapeIsCheckedOnConstruction) {
    EXPECT_THROW(FiniteSpace({"a", "b"}, {0, 1, 1}, {}), Error);
}

TEST(IndexedSpace, BudgetIsEnforced) {
    const OrderedMetricSpace s = IndexedSequenceSpace([](std::size_t i) { return -std::pow(0.25, double(i)); }, 16);
    EXPECT_DOUBLE_EQ(s.indexed()->value(2), -0.0625);
    EXPECT_THROW(s.indexed()->value(16), BudgetExceeded);
    try {
        s.metric(Point::at_index(0), Point::at_index(40));
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.requested(), 40u);
        EXPECT_EQ(e.budget(), 16u);
    }
    EXPECT_EQ(s.enumerate(5).size(), 5u);
    EXPECT_EQ(s.enumerate().size(), 16u);
    EXPECT_EQ(s.label(Point::at_index(5)), "x5");
    EXPECT_TRUE(validate_space(s).ok());
}

TEST(IndexedSpace, OrderFollowsValues) {
    const OrderedMetricSpace s = IndexedSequenceSpace([](std::size_t i) { return -std::pow(0.25, double(i)); }, 16);
    EXPECT_TRUE(s.leq(Point::at_index(1), Point::at_index(2)));
    EXPECT_FALSE(s.leq(Point::at_index(3), Point::at_index(2)));
    EXPECT_NEAR(s.metric(Point::at_index(1), Point::at_index(2)), 0.1875, 1e-15);
}

TEST(IndexedSpace, RepeatedValuesAreReported) {
    const OrderedMetricSpace s = IndexedSequenceSpace([](std::size_t i) { return double(i % 3); }, 10);
    EXPECT_FALSE(validate_space(s).ok());
}

TEST(IntervalSpace, IsolatedOneOrder) {
    const auto s = isolated_one();
    EXPECT_FALSE(s.contains(Point::at_value(-1)));
    EXPECT_TRUE(s.contains(Point::at_value(1)));
    EXPECT_TRUE(s.leq(Point::at_value(-0.5), Point::at_value(0.5)));
    EXPECT_FALSE(s.leq(Point::at_value(0.5), Point::at_value(1)));
    EXPECT_FALSE(s.comparable(Point::at_value(1), Point::at_value(0)));
    EXPECT_TRUE(s.leq(Point::at_value(1), Point::at_value(1)));
    EXPECT_TRUE(s.enumerate().empty());
    EXPECT_EQ(s.interval()->order_label(), "isolated-one");
}

TEST(IntervalSpace, EmptyIntervalIsRejected) {
    EXPECT_THROW(NumericIntervalSpace({1, 0, true, true}), Error);
    EXPECT_THROW(NumericIntervalSpace({0, 0, false, true}), Error);
}

TEST(IntervalSpace, ForeignHandlesAreRejected) {
    const auto s = isolated_one();
    EXPECT_THROW(s.require(Point::at_index(0)), InvalidPoint);
    EXPECT_THROW(s.require(Point::at_value(2)), InvalidPoint);
    EXPECT_TRUE(s.same(Point::at_value(0.5), Point::at_value(0.5 + 1e-13)));
}

TEST(Spaces, TotalRelationKeepsMetric) {
    const auto s = isolated_one().with_total_relation();
    EXPECT_TRUE(s.leq(Point::at_value(1), Point::at_value(0)));
    EXPECT_TRUE(s.leq(Point::at_value(0), Point::at_value(1)));
    EXPECT_DOUBLE_EQ(s.metric(Point::at_value(1), Point::at_value(0)), 1.0);

    const OrderedMetricSpace f = FiniteSpace::on_line({"a", "b"}, {0, 1}, {});
    EXPECT_TRUE(f.with_total_relation().leq(Point::at_index(1), Point::at_index(0)));
}

TEST(Spaces, AssertionsAreCarried) {
    const auto s = isolated_one().with_assertions({Property::Complete});
    EXPECT_TRUE(s.asserts(Property::Complete));
    EXPECT_FALSE(s.asserts(Property::IRegular));
    EXPECT_EQ(property_from_string("i-regular"), Property::IRegular);
    EXPECT_EQ(to_string(Property::SOContinuous), "s-o-continuous");
    EXPECT_FALSE(property_from_string("bogus").has_value());
}
