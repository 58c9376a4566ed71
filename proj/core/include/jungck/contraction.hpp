#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jungck/mapping.hpp"
#include "jungck/point.hpp"
#include "jungck/spaces.hpp"

namespace jungck {

/// Trigger and strict-inequality tolerance used by all condition checks.
inline constexpr double kEpsTol = 1e-9;

/// Iteration cap for the decay test phi^n(t) -> 0; iteration stops early once
/// the iterate drops below kEpsTol.
inline constexpr std::size_t kDecayIterations = 100000;

class ComparisonFn {
public:
    using Fn = std::function<double(double)>;

    ComparisonFn(Fn f, std::string label) : f_(std::move(f)), label_(std::move(label)) {}

    static ComparisonFn linear(double k);
    static ComparisonFn zero();
    /// t -> k t / (1 + s t); a nonlinear comparison function for k in [0, 1).
    static ComparisonFn rational(double k, double s);

    double operator()(double t) const { return f_(t); }
    const std::string& label() const noexcept { return label_; }

    /// n-fold composition applied to t.
    double iterate(double t, std::size_t n) const;

private:
    Fn f_;
    std::string label_;
};

/// rho with t -> rho(2t) a comparison function.
class HalfComparisonFn {
public:
    explicit HalfComparisonFn(ComparisonFn rho) : rho_(std::move(rho)) {}

    double operator()(double t) const { return rho_(t); }
    const std::string& label() const noexcept { return rho_.label(); }
    const ComparisonFn& base() const noexcept { return rho_; }

    /// t -> rho(2t).
    ComparisonFn doubled() const;

private:
    ComparisonFn rho_;
};

struct GridSpec {
    std::vector<double> axis;
    std::string description;

    /// 25 log-spaced points over [1e-3, 1e3] plus the boundary value 0.
    static GridSpec default_grid();
    static GridSpec from_points(std::vector<double> points, std::string description);
};

enum class ConditionId { Comparison, HalfComparison, F1a, F1b, F1c, F2, Contraction };
enum class ConditionVerdict { PassOnGrid, Counterexample, NotApplicable };

std::string_view to_string(ConditionId id);
std::string_view to_string(ConditionVerdict v);
std::optional<ConditionId> condition_from_string(std::string_view name);

/// What failed, and where. `tuple` holds the F arguments for implication and
/// monotonicity witnesses; `point`/`other` hold space points for contraction
/// witnesses; scalar witnesses use `t`.
struct Witness {
    std::string kind;
    std::vector<double> tuple;
    std::optional<double> t;
    std::optional<Point> point;
    std::optional<Point> other;
    std::optional<std::size_t> coordinate;
    double value = 0;
    std::string note;
};

struct ConditionReport {
    ConditionId id;
    ConditionVerdict verdict = ConditionVerdict::PassOnGrid;
    std::optional<Witness> witness;
    std::string detail;
    std::string grid;
    std::size_t evaluated = 0;
    std::size_t not_applicable = 0;

    bool passed() const noexcept { return verdict == ConditionVerdict::PassOnGrid; }
};

using Tuple6 = std::array<double, 6>;

/// A member of the implicit-function family together with the companion
/// comparison function the F1 conditions are stated for.
struct ImplicitContraction {
    std::string id;
    std::string formula;
    std::function<double(const Tuple6&)> F;
    std::optional<ComparisonFn> companion;
    std::set<ConditionId> claims;
    /// Conditions stated not to hold; F2 here may also come out NotApplicable.
    std::set<ConditionId> denies;
    std::map<std::string, double> params;
    /// Inner function used by the formula (psi or rho), for quasi forms.
    std::optional<ComparisonFn> inner;
    bool inner_is_half = false;

    double operator()(const Tuple6& t) const { return F(t); }
};

ConditionReport check_comparison(const ComparisonFn& phi, const GridSpec& grid = GridSpec::default_grid());
ConditionReport check_half_comparison(const HalfComparisonFn& rho,
                                      const GridSpec& grid = GridSpec::default_grid());

/// `which` must be F1a, F1b or F1c. Throws MissingCompanion without phi.
ConditionReport check_condition_F1(const ImplicitContraction& ic, ConditionId which,
                                   const GridSpec& grid = GridSpec::default_grid());
ConditionReport check_condition_F2(const ImplicitContraction& ic,
                                   const GridSpec& grid = GridSpec::default_grid());
/// Dispatches on the condition id.
ConditionReport check_condition(const ImplicitContraction& ic, ConditionId which,
                                const GridSpec& grid = GridSpec::default_grid());

/// The characteristic argument tuple of an F1 condition at (u, v).
Tuple6 characteristic_tuple(ConditionId which, double u, double v);

/// Which pairs evaluate_contraction inspects on non-finite spaces.
struct PairSampler {
    /// Indexed spaces: indices below min(index_limit, budget).
    std::size_t index_limit = 64;
    /// Interval spaces: uniform samples across the (clipped) interval.
    std::size_t numeric_samples = 201;
    /// Interval spaces with an infinite side are clipped to this half-width.
    double numeric_span = 10;
};

/// The six distances the contraction inequality feeds to F.
Tuple6 contraction_tuple(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x,
                         const Point& y);

/// Checks F(...) <= eps over every inspected pair with Sx <= Sy. Tuples where
/// F leaves its domain are counted as not applicable.
ConditionReport evaluate_contraction(const OrderedMetricSpace& space, const MappingPair& pair,
                                     const ImplicitContraction& ic, const PairSampler& sampler = {});

/// Points evaluate_contraction and the certifier iterate over.
std::vector<Point> sample_points(const OrderedMetricSpace& space, const PairSampler& sampler);

/// Catalog of example implicit functions with their stated conditions.
std::vector<ImplicitContraction> catalog();

/// Builds a catalog entry from "id" or "id:k=0.3,s=1,L=2".
ImplicitContraction make_catalog_entry(std::string_view spec);
ImplicitContraction make_catalog_entry(std::string_view id, const std::map<std::string, double>& params);

/// Stable ids in catalog order.
std::vector<std::string> catalog_ids();

}  // namespace jungck
