#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jungck/contraction.hpp"
#include "jungck/mapping.hpp"
#include "jungck/point.hpp"
#include "jungck/spaces.hpp"

namespace jungck {

/// Which order relation between S x0 and T x0 the iteration requires.
/// Either accepts a comparable start, trying the increasing case first.
enum class Direction { Increasing, Decreasing, Either };

std::string_view to_string(Direction d);
std::optional<Direction> direction_from_string(std::string_view s);

struct SolveOptions {
    std::size_t budget = 10000;
    Direction direction = Direction::Either;
    /// Numeric spaces: |Sx - Tx| <= tol counts as a hit, a gap <= tol as Cauchy.
    double tol = 1e-12;
};

enum class TraceVerdict { CoincidenceHit, CauchyDetected, NoCoincidenceWithinBudget, PreconditionFailed };

std::string_view to_string(TraceVerdict v);

struct Step {
    Point x;
    Point sx;
    Point tx;
    /// d(T x_n, T x_{n+1}); absent on the final step unless it is a hit.
    std::optional<double> gap;
};

struct IterationTrace {
    std::vector<Step> steps;
    TraceVerdict verdict = TraceVerdict::PreconditionFailed;
    /// Direction the precondition was satisfied in (Either resolves to one).
    Direction direction = Direction::Either;
    std::optional<std::size_t> hit_at;
    /// Coincidence candidate for CauchyDetected: the last iterate.
    std::optional<Point> candidate;
    /// d(Sx, Tx) at the hit or candidate.
    std::optional<double> residual;
    std::string detail;
};

/// Builds the T-S-sequence T x_n = S x_{n+1} from x0, choosing S-preimages
/// deterministically. Stops at the first n with S x_n = T x_n, at a gap
/// below tol (numeric spaces), or when the budget runs out. Throws NoPreimage
/// if some T x_n has no S-preimage.
IterationTrace jungck_sequence(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x0,
                               const SolveOptions& options = {});

struct CauchyDetection {
    bool detected = false;
    std::optional<std::size_t> at;
    double threshold = 0;
    bool containment_violated = false;
    std::optional<std::size_t> violation_at;
};

/// First n with d(T x_n, T x_{n+1}) < eps - phi(eps); then checks that every
/// later recorded T x_{n+k} stays within eps of T x_n. Throws InvalidEps when
/// eps <= 0 or phi(eps) >= eps.
CauchyDetection detect_cauchy(const OrderedMetricSpace& space, const IterationTrace& trace,
                              const ComparisonFn& phi, double eps);

struct FixedPointResult {
    Point coincidence;
    /// The common value S x = T x.
    Point point_of_coincidence;
    double residual = 0;
    bool weakly_compatible_here = false;
    std::optional<Point> common_fixed_point;
    /// True when the point came from a residual search rather than the trace.
    bool from_search = false;
    std::string detail;
};

/// Coincidence point at a hit or near a Cauchy candidate (continuing the
/// iteration while the residual shrinks). Otherwise searches for the smallest
/// residual and throws NoCoincidence unless it is within tol.
FixedPointResult extract_fixed_point(const OrderedMetricSpace& space, const MappingPair& pair,
                                     const IterationTrace& trace, double tol = 1e-9);

struct GapAudit {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<std::size_t> step_violation;
    std::optional<std::size_t> envelope_violation;
    std::string detail;
};

/// Checks gap_n <= phi(gap_{n-1}) + eps and gap_n <= phi^n(gap_0) + n eps.
GapAudit audit_gaps(const IterationTrace& trace, const ComparisonFn& phi, double eps = kEpsTol);

/// Whether x0 satisfies the start condition for `direction`; Either resolves
/// to the direction that holds.
std::optional<Direction> start_condition(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x0,
                                         Direction direction);

}  // namespace jungck
