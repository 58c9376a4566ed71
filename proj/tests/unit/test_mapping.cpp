#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "jungck/error.hpp"
#include "jungck/mapping.hpp"

using namespace jungck;

TEST(SelfMap, TableAppliesAndChecksRange) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 3});
    const auto T = SelfMap::table({0, 0, 1}, "T");
    EXPECT_EQ(T.apply(s, Point::at_index(2)), Point::at_index(1));
    EXPECT_THROW(SelfMap::table({0, 5, 1}).apply(s, Point::at_index(1)), InvalidPoint);
    EXPECT_THROW(SelfMap::table({0}).apply(s, Point::at_index(2)), InvalidPoint);
    EXPECT_TRUE(SelfMap::identity().is_identity());
    EXPECT_EQ(SelfMap::identity().apply(s, Point::at_index(2)), Point::at_index(2));
}

TEST(SelfMap, RealImageMustStayInside) {
    const OrderedMetricSpace s = NumericIntervalSpace({0, 1, true, true});
    const auto f = SelfMap::real_fn([](double x) { return 2 * x; });
    EXPECT_DOUBLE_EQ(f.apply(s, Point::at_value(0.25)).value(), 0.5);
    EXPECT_THROW(f.apply(s, Point::at_value(0.75)), InvalidPoint);
    EXPECT_DOUBLE_EQ(f.eval_real(3), 6.0);
    EXPECT_THROW(SelfMap::table({0}).eval_real(1), InvalidPoint);
}

TEST(Preimage, DiscreteChoosesSmallestIndex) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c", "d"}, {0, 1, 2, 3});
    MappingPair pair;
    pair.S = SelfMap::table({2, 1, 1, 2});
    EXPECT_EQ(s_preimage(s, pair, Point::at_index(1)), Point::at_index(1));
    EXPECT_EQ(s_preimage(s, pair, Point::at_index(2)), Point::at_index(0));
    EXPECT_FALSE(s_preimage(s, pair, Point::at_index(3)).has_value());
}

TEST(Preimage, IndexedSearchesTheBudget) {
    const OrderedMetricSpace s = IndexedSequenceSpace([](std::size_t i) { return -std::pow(0.25, double(i)); }, 32);
    MappingPair pair;
    pair.S = SelfMap::index_fn([](std::size_t i) { return i + 1; });
    EXPECT_EQ(s_preimage(s, pair, Point::at_index(5)), Point::at_index(4));
    EXPECT_FALSE(s_preimage(s, pair, Point::at_index(0)).has_value());
}

TEST(Preimage, IntervalUsesInverseWhenGiven) {
    const OrderedMetricSpace s = NumericIntervalSpace({0, std::numeric_limits<double>::infinity(), true, false});
    MappingPair pair;
    pair.S = SelfMap::real_fn([](double x) { return 2 * x / 3; });
    pair.s_inverse = [](double y) { return 1.5 * y; };
    EXPECT_DOUBLE_EQ(s_preimage(s, pair, Point::at_value(2))->value(), 3.0);
    EXPECT_FALSE(s_preimage(s, pair, Point::at_value(-1)).has_value());
}

TEST(Preimage, IntervalBisectsMonotoneS) {
    const OrderedMetricSpace s = NumericIntervalSpace({0, std::numeric_limits<double>::infinity(), true, false});
    MappingPair pair;
    pair.S = SelfMap::real_fn([](double x) { return x * x * x; });
    pair.s_monotone = true;
    const auto p = s_preimage(s, pair, Point::at_value(1000));
    ASSERT_TRUE(p.has_value());
    EXPECT_NEAR(p->value(), 10.0, 1e-9);
    EXPECT_FALSE(s_preimage(s, pair, Point::at_value(-8)).has_value());
}

TEST(Preimage, IntervalWithoutInverseIsAnError) {
    const OrderedMetricSpace s = NumericIntervalSpace({0, 1, true, true});
    MappingPair pair;
    pair.S = SelfMap::real_fn([](double x) { return x / 2; });
    EXPECT_THROW(s_preimage(s, pair, Point::at_value(0.25)), Error);
}

TEST(Preimage, IdentityOnInterval) {
    const OrderedMetricSpace s = NumericIntervalSpace({-1, 1, false, true});
    MappingPair pair;
    EXPECT_EQ(s_preimage(s, pair, Point::at_value(0.5)), Point::at_value(0.5));
    EXPECT_FALSE(s_preimage(s, pair, Point::at_value(-1)).has_value());
}
