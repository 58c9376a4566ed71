#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jungck/certifier.hpp"
#include "jungck/contraction.hpp"
#include "jungck/expr.hpp"
#include "jungck/mapping.hpp"
#include "jungck/solver.hpp"
#include "jungck/spaces.hpp"

namespace jungck {

// Problem description read from the line-oriented block format documented in
// docs/config_format.md. Every field keeps its parsed form so that
// parse_config(to_text(c)) == c.

struct SpaceBlock {
    Flavor flavor = Flavor::Finite;
    // finite
    std::vector<std::string> points;
    std::vector<double> values;
    std::vector<double> distances;
    std::vector<std::pair<std::string, std::string>> order_pairs;
    // indexed
    std::optional<Expr> value;
    std::size_t budget = 0;
    // interval
    IntervalBounds bounds{0, 1, true, true};
    /// Predicate over (a, b); nonzero means a <= b. Absent: the usual order.
    std::optional<Expr> order;
    std::string order_label;

    friend bool operator==(const SpaceBlock&, const SpaceBlock&) = default;
};

/// A finite-space map as a list of labels, or an expression in x (interval)
/// or i (indexed).
using MapSpec = std::variant<std::vector<std::string>, Expr>;

struct MappingsBlock {
    std::optional<MapSpec> T;
    std::optional<MapSpec> S;
    std::optional<Expr> s_inverse;
    bool s_monotone = false;

    friend bool operator==(const MappingsBlock&, const MappingsBlock&) = default;
};

struct ContractionBlock {
    std::optional<std::string> catalog;
    std::map<std::string, double> params;
    std::optional<Expr> F;
    std::optional<Expr> phi;
    std::optional<Expr> inner;
    bool inner_is_half = false;
    std::set<ConditionId> claims;
    std::set<ConditionId> denies;

    bool empty() const { return !catalog && !F; }
    friend bool operator==(const ContractionBlock&, const ContractionBlock&) = default;
};

struct RunBlock {
    std::optional<std::string> variant;
    std::optional<Direction> direction;
    std::optional<std::string> x0;
    std::optional<std::size_t> budget;
    std::optional<double> tol;
    std::optional<double> eps;
    std::optional<std::string> E;
    std::set<Property> asserted;

    friend bool operator==(const RunBlock&, const RunBlock&) = default;
};

struct ProblemConfig {
    SpaceBlock space;
    MappingsBlock mappings;
    ContractionBlock contraction;
    RunBlock run;

    friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

/// Throws SyntaxError, UnknownKey or ArityError with 1-based line and column.
ProblemConfig parse_config(std::string_view text);
/// Canonical text; parse_config(to_text(c)) == c.
std::string to_text(const ProblemConfig& config);

/// Library objects built from a config.
struct Problem {
    OrderedMetricSpace space;
    MappingPair pair;
    std::optional<ImplicitContraction> contraction;
    TheoremVariant variant = TheoremVariant::MainRegular;
    Continuity continuity = Continuity::OCompatibleContinuous;
    /// As configured; commands pick their own default when absent.
    std::optional<Direction> direction;
    Subspace E;
    std::optional<Point> x0;
    std::size_t budget = 10000;
    double tol = 1e-12;
    std::optional<double> eps;
};

Problem build_problem(const ProblemConfig& config);

/// Resolves a point written in config syntax: a label (finite), "x<i>" or
/// "<i>" (indexed), or a number (interval).
Point parse_point(const OrderedMetricSpace& space, std::string_view text);

/// Contraction from "catalog-id:k=..,s=.." or a custom F block.
ImplicitContraction build_contraction(const ContractionBlock& block);

}  // namespace jungck
