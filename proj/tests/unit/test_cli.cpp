#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jungck_cli/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "jungck");
    std::ostringstream out, err;
    const int code = jungck::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string cfg(const char* name) { return (std::filesystem::path(JUNGCK_CONFIG_DIR) / name).string(); }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(Cli, SolveIntervalReachesZero) {
    const auto r = run({"solve", "--config", cfg("interval_third.cfg")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("coincidence point: 0 (residual 0)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("cauchy test (eps 0.01)"), std::string::npos) << r.out;
}

TEST(Cli, SolveStructuredIsJson) {
    const auto r = run({"solve", "--config", cfg("interval_third.cfg"), "--format", "structured"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("fixed_point").at("coincidence").get<double>(), 0.0);
    EXPECT_TRUE(j.at("trace").at("steps")[0].contains("gap"));
}

TEST(Cli, SolveWithoutCoincidenceExitsTwo) {
    const auto r = run({"solve", "--config", cfg("quadratic_no_coincidence.cfg")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("no coincidence point"), std::string::npos) << r.out;
}

TEST(Cli, OracleOnShiftIsEmpty) {
    const auto r = run({"oracle", "--config", cfg("quarter_powers.cfg"), "--budget", "12"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("inspected: 12 points"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("coincidence points: {}"), std::string::npos) << r.out;
}

TEST(Cli, ConditionsForNonlinearQuasi) {
    const auto r = run({"conditions", "--contraction", "nonlinear-quasi:k=0.4"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    for (const char* c : {"F1a", "F1b", "F1c", "F2"}) EXPECT_NE(r.out.find(c), std::string::npos) << c;
}

TEST(Cli, ConditionsReportDeniedWithoutFailing) {
    const auto r = run({"conditions", "--contraction", "vv-ratio", "--format", "structured"});
    EXPECT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("id"), "vv-ratio");
}

TEST(Cli, ConditionsFailWhenHalfComparisonFails) {
    const auto r = run({"conditions", "--contraction", "nonlinear-quasi:k=0.5"});
    EXPECT_EQ(r.code, 2) << r.out;
}

TEST(Cli, CatalogListsEntries) {
    const auto r = run({"catalog"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("linear-quasi"), std::string::npos);
    EXPECT_NE(r.out.find("psi-max-t4half"), std::string::npos);
    const auto s = run({"catalog", "--format", "structured"});
    EXPECT_FALSE(nlohmann::json::parse(s.out).at("catalog").empty());
}

TEST(Cli, CertifyFiniteChainVerifies) {
    const auto r = run({"certify", "--config", cfg("finite_chain.cfg")});
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, CertifyCounterexampleExitsTwo) {
    const auto r = run({"certify", "--config", cfg("quarter_powers.cfg"), "--format", "structured"});
    EXPECT_EQ(r.code, 2) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("overall"), "counterexample");
}

TEST(Cli, BadConfigExitsOne) {
    const auto path = temp_file("jungck_bad.cfg", "[space]\nflavor = finite\nshape = round\n");
    const auto r = run({"certify", "--config", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find(":3:1:"), std::string::npos) << r.err;
    EXPECT_EQ(run({"solve", "--config", "/nonexistent/file.cfg"}).code, 1);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"certify"}).code, 1);
    EXPECT_EQ(run({"solve", "--config", cfg("interval_third.cfg"), "--direction", "up"}).code, 1);
    EXPECT_EQ(run({"conditions", "--contraction", "nope"}).code, 1);
    EXPECT_EQ(run({"catalog", "--help"}).code, 0);
}

TEST(Cli, OverridesApply) {
    const auto r = run({"solve", "--config", cfg("interval_third.cfg"), "--x0", "-0.9", "--direction", "inc",
                        "--format", "structured"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("trace").at("direction"), "increasing");
    EXPECT_DOUBLE_EQ(j.at("trace").at("steps")[0].at("x").get<double>(), -0.9);
}
