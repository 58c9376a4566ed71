#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jungck/config.hpp"
#include "jungck/error.hpp"

using namespace jungck;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr const char* kMinimal = R"(# smallest useful problem
[space]
flavor = finite
points = a, b, c
values = 0, 1, 3

[mappings]
T = a, a, b

[contraction]
catalog = banach:k=0.5
)";

template <typename E>
std::pair<std::size_t, std::size_t> position_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const E& e) {
        return {e.line(), e.column()};
    }
    ADD_FAILURE() << "no error raised for:\n" << text;
    return {0, 0};
}

}  // namespace

TEST(Config, MinimalFiniteProblem) {
    const auto cfg = parse_config(kMinimal);
    EXPECT_EQ(cfg.space.flavor, Flavor::Finite);
    EXPECT_EQ(cfg.space.points, (std::vector<std::string>{"a", "b", "c"}));
    ASSERT_TRUE(cfg.mappings.T);
    EXPECT_FALSE(cfg.mappings.S);
    EXPECT_EQ(cfg.contraction.catalog, "banach");
    EXPECT_DOUBLE_EQ(cfg.contraction.params.at("k"), 0.5);

    const Problem p = build_problem(cfg);
    EXPECT_EQ(p.space.flavor(), Flavor::Finite);
    EXPECT_TRUE(p.pair.S.is_identity());
    EXPECT_EQ(p.pair.T.apply(p.space, Point::at_index(2)), Point::at_index(1));
    ASSERT_TRUE(p.contraction);
    EXPECT_EQ(p.contraction->id, "banach");
    EXPECT_FALSE(p.direction);
    EXPECT_EQ(p.E.kind, Subspace::Kind::Whole);
}

TEST(Config, CustomSixVariableContraction) {
    const auto cfg = parse_config(std::string(kMinimal).replace(std::string(kMinimal).find("catalog = banach:k=0.5"),
                                                                 22,
                                                                 "F = t1 - 0.3*max(t2, t3, t4, t5, t6)\nphi = 0.3*t/(1 - 0.3)\n"
                                                                 "claims = F1a, F2"));
    ASSERT_TRUE(cfg.contraction.F);
    EXPECT_EQ(cfg.contraction.claims, (std::set<ConditionId>{ConditionId::F1a, ConditionId::F2}));
    const auto ic = build_contraction(cfg.contraction);
    EXPECT_NEAR(ic(Tuple6{1, 1, 2, 0, 0, 0}), 0.4, 1e-15);
    ASSERT_TRUE(ic.companion);
    EXPECT_TRUE(check_condition(ic, ConditionId::F1a).passed());
}

TEST(Config, UnbalancedExpressionReportsColumn) {
    const std::string text = "[space]\nflavor = interval\n\n[mappings]\nT =   (x + 1/3\n";
    const auto [line, col] = position_of<SyntaxError>(text);
    EXPECT_EQ(line, 5u);
    EXPECT_GE(col, 7u);
}

TEST(Config, UnknownKeyPosition) {
    const auto [line, col] = position_of<UnknownKey>("[space]\nflavor = finite\n  colour = red\n");
    EXPECT_EQ(line, 3u);
    EXPECT_EQ(col, 3u);
    const auto [bl, bc] = position_of<UnknownKey>("\n[geometry]\n");
    EXPECT_EQ(bl, 2u);
    EXPECT_EQ(bc, 2u);
    // Keys of another flavor are unknown here.
    EXPECT_EQ(position_of<UnknownKey>("[space]\nflavor = finite\nlower = 0\n").first, 3u);
}

TEST(Config, ArityErrorsPropagate) {
    const auto text = std::string("[space]\nflavor = interval\n[contraction]\nF = t1 - abs(t2, t3)\n");
    const auto [line, col] = position_of<ArityError>(text);
    EXPECT_EQ(line, 4u);
    EXPECT_GT(col, 4u);
}

TEST(Config, StructuralErrors) {
    EXPECT_THROW(parse_config("flavor = finite\n"), SyntaxError);
    EXPECT_THROW(parse_config("[space]\nflavor finite\n"), SyntaxError);
    EXPECT_THROW(parse_config("[space]\nflavor = finite\nflavor = finite\n"), SyntaxError);
    EXPECT_THROW(parse_config("[space]\nflavor = round\n"), SyntaxError);
    EXPECT_THROW(parse_config("[space\nflavor = finite\n"), SyntaxError);
    EXPECT_THROW(parse_config("[contraction]\ncatalog = nope\n"), SyntaxError);
    EXPECT_THROW(parse_config("[run]\ndirection = sideways\n"), SyntaxError);
    EXPECT_THROW(parse_config("[run]\nassert = magic\n"), SyntaxError);
}

TEST(Config, BuildRejectsBadPoints) {
    auto cfg = parse_config(std::string(kMinimal) + "\n[run]\nx0 = z\n");
    EXPECT_THROW(build_problem(cfg), Error);
    cfg = parse_config(std::string(kMinimal).replace(std::string(kMinimal).find("T = a, a, b"), 11, "T = a, q, b"));
    EXPECT_THROW(build_problem(cfg), Error);
}

TEST(Config, ParsePointForEachFlavor) {
    const OrderedMetricSpace f = FiniteSpace::on_line({"a", "b"}, {0, 1});
    EXPECT_EQ(parse_point(f, "b"), Point::at_index(1));
    const OrderedMetricSpace s = IndexedSequenceSpace([](std::size_t i) { return double(i); }, 10);
    EXPECT_EQ(parse_point(s, "x3"), Point::at_index(3));
    EXPECT_EQ(parse_point(s, "4"), Point::at_index(4));
    const OrderedMetricSpace r = NumericIntervalSpace({0, 1});
    EXPECT_EQ(parse_point(r, "0.25"), Point::at_value(0.25));
    EXPECT_THROW(parse_point(r, "2"), Error);
}

TEST(Config, ShippedConfigsRoundTrip) {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(JUNGCK_CONFIG_DIR)) {
        if (entry.path().extension() != ".cfg") continue;
        ++seen;
        const auto cfg = parse_config(slurp(entry.path()));
        const std::string canon = to_text(cfg);
        EXPECT_EQ(parse_config(canon), cfg) << entry.path() << "\n" << canon;
        EXPECT_EQ(to_text(parse_config(canon)), canon);
        EXPECT_NO_THROW(build_problem(cfg)) << entry.path();
    }
    EXPECT_GE(seen, 4u);
}

TEST(Config, IntervalConfigBuildsOrderAndAssertions) {
    const auto cfg = parse_config(slurp(std::filesystem::path(JUNGCK_CONFIG_DIR) / "interval_third.cfg"));
    const Problem p = build_problem(cfg);
    ASSERT_TRUE(p.space.interval());
    EXPECT_FALSE(p.space.leq(Point::at_value(0.5), Point::at_value(1)));
    EXPECT_TRUE(p.space.asserts(Property::Complete));
    EXPECT_EQ(p.variant, TheoremVariant::MainContinuity);
    EXPECT_EQ(p.continuity, Continuity::OCompatibleContinuous);
    EXPECT_EQ(p.direction, Direction::Either);
    ASSERT_TRUE(p.x0);
    EXPECT_EQ(p.x0->value(), 0.9);
    EXPECT_EQ(p.eps, 0.01);
    EXPECT_EQ(p.budget, 200u);
}

TEST(Config, IndexedConfigBuildsShift) {
    const auto cfg = parse_config(slurp(std::filesystem::path(JUNGCK_CONFIG_DIR) / "quarter_powers.cfg"));
    const Problem p = build_problem(cfg);
    ASSERT_TRUE(p.space.indexed());
    EXPECT_EQ(p.space.indexed()->budget(), 128u);
    EXPECT_EQ(p.pair.T.apply(p.space, Point::at_index(3)), Point::at_index(5));
    EXPECT_EQ(p.E.kind, Subspace::Kind::ImageT);
    EXPECT_DOUBLE_EQ(p.space.indexed()->value(2), -0.0625);
}
