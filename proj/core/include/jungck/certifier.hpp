#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jungck/contraction.hpp"
#include "jungck/mapping.hpp"
#include "jungck/solver.hpp"
#include "jungck/spaces.hpp"

namespace jungck {

enum class Verdict { Verified, Asserted, Counterexample, NotCheckable };

std::string_view to_string(Verdict v);

struct HypothesisEntry {
    std::string label;
    std::string description;
    Verdict verdict = Verdict::NotCheckable;
    std::string witness;
    std::vector<Point> witness_points;

    bool holds() const noexcept { return verdict == Verdict::Verified || verdict == Verdict::Asserted; }
};

/// The subspace E of the theorems.
struct Subspace {
    enum class Kind { Whole, ImageT, ImageS, Explicit };
    Kind kind = Kind::Whole;
    std::vector<Point> points;

    static Subspace whole() { return {}; }
    static Subspace image_T() { return {Kind::ImageT, {}}; }
    static Subspace image_S() { return {Kind::ImageS, {}}; }
    static Subspace explicit_points(std::vector<Point> pts) { return {Kind::Explicit, std::move(pts)}; }

    std::string describe() const;
};

/// Condition used in place of regularity: (i) T is (S,O)-continuous;
/// (ii) (T,S) is O-compatible and both maps are O-continuous; (iii) T and S
/// are continuous.
enum class Continuity { SOContinuous, OCompatibleContinuous, Continuous };

std::string_view to_string(Continuity c);

enum class TheoremVariant { BVOrdered, MainRegular, MainContinuity, PoCUnique, PoCContinuity, QuasiCorollary, Metric };

std::string_view to_string(TheoremVariant v);
/// Accepts "main-continuity(ii)" style ids; the continuity choice is written
/// to `continuity` when present.
std::optional<TheoremVariant> variant_from_string(std::string_view s, Continuity* continuity = nullptr);

// Individual hypothesis checks. Finite spaces are checked exhaustively,
// indexed spaces on the fragment of indices below budget/2 (preimages are
// searched over the whole budget), interval spaces via asserted properties.

HypothesisEntry check_S_increasing(const OrderedMetricSpace& space, const MappingPair& pair);
HypothesisEntry check_range_inclusion(const OrderedMetricSpace& space, const MappingPair& pair, const Subspace& E);
HypothesisEntry check_completeness(const OrderedMetricSpace& space, const MappingPair& pair, const Subspace& E,
                                   Direction direction = Direction::Increasing);
/// I-regularity for Increasing, D- for Decreasing, M- for Either. On finite
/// spaces this is: for every x with Sx in E, Sx <= S(Sx) (resp. >=, both).
HypothesisEntry check_regularity(const OrderedMetricSpace& space, const MappingPair& pair, Direction direction,
                                 const Subspace& E = Subspace::whole());
HypothesisEntry check_weak_compatibility(const OrderedMetricSpace& space, const MappingPair& pair);
HypothesisEntry check_O_compatibility(const OrderedMetricSpace& space, const MappingPair& pair, Direction direction);
HypothesisEntry check_continuity(const OrderedMetricSpace& space, const MappingPair& pair, Continuity which,
                                 Direction direction);

struct BruteForceResult {
    std::vector<Point> coincidence_points;
    std::vector<Point> common_fixed_points;
    /// Distinct values S x over the coincidence points.
    std::vector<Point> points_of_coincidence;
    std::size_t inspected = 0;
};

/// Exact enumeration of {x : Sx = Tx} and {x : Sx = Tx = x}. Indexed spaces
/// inspect indices below `limit` (default budget/2) and throw BudgetExceeded
/// when limit exceeds the budget. Interval spaces are rejected.
BruteForceResult coincidence_points_bruteforce(const OrderedMetricSpace& space, const MappingPair& pair,
                                               std::optional<std::size_t> limit = std::nullopt);

HypothesisEntry check_directedness(const OrderedMetricSpace& space, const MappingPair& pair,
                                   const std::vector<Point>& C);
HypothesisEntry check_totally_ordered(const OrderedMetricSpace& space, const std::vector<Point>& C);
HypothesisEntry check_comparable_mapping(const OrderedMetricSpace& space, const SelfMap& f,
                                         std::string_view name = "f");
HypothesisEntry check_one_one(const OrderedMetricSpace& space, const SelfMap& f, std::string_view name = "f");

struct CertifyOptions {
    Direction direction = Direction::Increasing;
    Continuity continuity = Continuity::OCompatibleContinuous;
    SolveOptions solve{};
    PairSampler sampler{};
    GridSpec grid = GridSpec::default_grid();
    double tol = 1e-9;
};

struct Conclusion {
    std::string claim;
    std::vector<std::string> requires_labels;
    bool hypotheses_hold = false;
    /// Whether the claim could be tested (solver plus brute force).
    bool checked = false;
    bool confirmed = false;
    std::string detail;
};

struct HypothesisReport {
    TheoremVariant variant = TheoremVariant::MainRegular;
    Direction direction = Direction::Increasing;
    Continuity continuity = Continuity::OCompatibleContinuous;
    std::vector<HypothesisEntry> entries;
    /// Labels whose conjunction the overall verdict is taken over.
    std::vector<std::string> base_labels;
    Verdict overall = Verdict::NotCheckable;
    bool relies_on_assertions = false;
    std::vector<Conclusion> conclusions;
    std::vector<std::string> discrepancies;
    /// Extra checks run to explain a discrepancy.
    std::vector<HypothesisEntry> diagnostics;
    std::optional<Point> x0;
    std::optional<IterationTrace> trace;
    std::optional<FixedPointResult> fixed_point;
    std::string fixed_point_error;
    std::optional<BruteForceResult> oracle;

    const HypothesisEntry* find(std::string_view label) const;
    bool verified() const noexcept { return overall == Verdict::Verified; }
};

/// Runs the checks the chosen theorem requires, in a fixed order, and when
/// they hold runs the solver and the brute-force oracle to test the promised
/// conclusions. x0 is searched for when absent.
HypothesisReport certify(const OrderedMetricSpace& space, const MappingPair& pair, const ImplicitContraction& ic,
                         TheoremVariant variant, const Subspace& E = Subspace::whole(),
                         std::optional<Point> x0 = std::nullopt, const CertifyOptions& options = {});

}  // namespace jungck
