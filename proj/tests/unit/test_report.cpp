#include <gtest/gtest.h>

#include <json.hpp>

#include "jungck/report.hpp"

using namespace jungck;
using nlohmann::json;

namespace {

OrderedMetricSpace isolated_one() {
    return NumericIntervalSpace(
        {-1, 1, false, true}, [](double a, double b) { return (a <= b && b != 1) || (a == 1 && b == 1); },
        "isolated-one");
}

MappingPair third() {
    MappingPair p;
    p.T = SelfMap::real_fn([](double x) { return x / 3; });
    return p;
}

}  // namespace

TEST(Report, StructuredTraceHasStepFields) {
    const auto space = isolated_one();
    const auto tr = jungck_sequence(space, third(), Point::at_value(0.9));
    const auto fp = extract_fixed_point(space, third(), tr);
    const json j = json::parse(render_solve(space, tr, fp, "", Format::Structured));
    const auto& steps = j.at("trace").at("steps");
    ASSERT_EQ(steps.size(), tr.steps.size());
    for (const char* k : {"n", "x", "Sx", "Tx", "gap"}) EXPECT_TRUE(steps[0].contains(k)) << k;
    EXPECT_DOUBLE_EQ(steps[0].at("x").get<double>(), 0.9);
    EXPECT_DOUBLE_EQ(steps[0].at("gap").get<double>(), 0.2);
    EXPECT_EQ(steps[1].at("n").get<int>(), 1);
    EXPECT_EQ(j.at("trace").at("verdict"), "cauchy-detected");
    EXPECT_EQ(j.at("fixed_point").at("coincidence").get<double>(), 0.0);
    EXPECT_EQ(j.at("fixed_point").at("residual").get<double>(), 0.0);
}

TEST(Report, DiscretePointsAreLabels) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 3});
    MappingPair p;
    p.T = SelfMap::table({0, 0, 1});
    const auto tr = jungck_sequence(s, p, Point::at_index(2));
    const json j = json::parse(render_solve(s, tr, extract_fixed_point(s, p, tr), "", Format::Structured));
    EXPECT_EQ(j.at("trace").at("steps")[0].at("x"), "c");
    EXPECT_EQ(j.at("fixed_point").at("common_fixed_point"), "a");
}

TEST(Report, TextFailureMentionsResidual) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b"}, {0, 1});
    MappingPair p;
    p.T = SelfMap::table({1, 0});
    const auto tr = jungck_sequence(s, p, Point::at_index(0), {4, Direction::Either});
    const std::string text = render_solve(s, tr, std::nullopt, "smallest residual d(Sx, Tx) = 1 at x = a", Format::Text);
    EXPECT_NE(text.find("no coincidence point: smallest residual"), std::string::npos) << text;
}

TEST(Report, CertificateStructuredAndText) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b", "c"}, {0, 1, 3});
    MappingPair p;
    p.T = SelfMap::table({0, 0, 1});
    CertifyOptions o;
    o.direction = Direction::Decreasing;
    const auto r = certify(s, p, make_catalog_entry("banach"), TheoremVariant::MainRegular, Subspace::whole(),
                           std::nullopt, o);
    const json j = json::parse(render_certificate(s, r, Format::Structured));
    EXPECT_EQ(j.at("overall"), "verified");
    EXPECT_EQ(j.at("variant"), "main-regular");
    EXPECT_FALSE(j.at("hypotheses").empty());
    EXPECT_EQ(j.at("hypotheses")[0].at("label"), "complete");
    const std::string text = render_certificate(s, r, Format::Text);
    EXPECT_NE(text.find("[verified] b6"), std::string::npos) << text;
}

TEST(Report, CatalogAndConditions) {
    const json cat = json::parse(render_catalog(catalog(), Format::Structured));
    EXPECT_EQ(cat.at("catalog").size(), catalog().size());
    EXPECT_EQ(cat.at("catalog")[0].at("id"), "linear-quasi");

    const auto ic = make_catalog_entry("vv-ratio");
    const auto rep = check_condition(ic, ConditionId::F1b);
    const json c = json::parse(render_conditions(ic, {rep}, Format::Structured));
    EXPECT_EQ(c.at("conditions")[0].at("verdict"), "counterexample");
    EXPECT_EQ(c.at("conditions")[0].at("witness").at("tuple").size(), 6u);
    EXPECT_NE(render_conditions(ic, {rep}, Format::Text).find("witness:"), std::string::npos);
}

TEST(Report, OracleText) {
    const OrderedMetricSpace s = FiniteSpace::on_line({"a", "b"}, {0, 1});
    const auto bf = coincidence_points_bruteforce(s, MappingPair{});
    const std::string text = render_oracle(s, bf, Format::Text);
    EXPECT_NE(text.find("inspected: 2 points"), std::string::npos) << text;
    const json j = json::parse(render_oracle(s, bf, Format::Structured));
    EXPECT_EQ(j.at("common_fixed_points").size(), 2u);
}
