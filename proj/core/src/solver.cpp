#include "jungck/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "jungck/error.hpp"

namespace jungck {

namespace {

constexpr std::size_t kPolishSteps = 2000;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

bool hit(const OrderedMetricSpace& space, const Point& sx, const Point& tx, double tol) {
    if (space.is_discrete()) return sx == tx;
    return std::abs(sx.value() - tx.value()) <= tol;
}

struct Overflow {};

// Applies a map, signalling overflow of a real iterate separately from a
// genuine escape from the space.
Point image(const OrderedMetricSpace& space, const SelfMap& map, const Point& x) {
    if (!space.is_discrete() && !std::isfinite(map.eval_real(x.value()))) throw Overflow{};
    return map.apply(space, x);
}

double residual_at(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x) {
    return space.metric(pair.S.apply(space, x), pair.T.apply(space, x));
}

// |S x - T x| without the containment check, or nullopt outside the domain.
std::optional<double> real_residual(const MappingPair& pair, double x) {
    try {
        const double r = std::abs(pair.S.eval_real(x) - pair.T.eval_real(x));
        if (!std::isfinite(r)) return std::nullopt;
        return r;
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

struct Best {
    double residual = std::numeric_limits<double>::infinity();
    std::optional<Point> at;
    bool exact = false;
};

Best discrete_search(const OrderedMetricSpace& space, const MappingPair& pair) {
    std::vector<Point> pts;
    if (space.flavor() == Flavor::Finite) {
        pts = space.enumerate();
    } else {
        pts = space.enumerate(std::max<std::size_t>(1, space.indexed()->budget() / 2));
    }
    Best best;
    for (const auto& p : pts) {
        double r;
        try {
            if (pair.S.apply(space, p) == pair.T.apply(space, p)) return Best{0.0, p, true};
            r = residual_at(space, pair, p);
        } catch (const BudgetExceeded&) {
            continue;
        }
        if (r < best.residual) {
            best.residual = r;
            best.at = p;
        }
    }
    return best;
}

// Scan of a linear grid, geometric points on both sides of 0 and the finite
// endpoints, refined by golden-section search around the best sample.
Best numeric_search(const OrderedMetricSpace& space, const MappingPair& pair) {
    const auto& b = space.interval()->bounds();
    auto inside = [&](double x) { return space.contains(Point::at_value(x)); };

    std::vector<double> xs;
    for (int i = 0; i <= 2000; ++i) xs.push_back(-10.0 + 20.0 * i / 2000.0);
    for (int e = -60; e <= 60; ++e) {
        const double m = std::pow(10.0, e / 10.0);
        xs.push_back(m);
        xs.push_back(-m);
    }
    // Endpoints and points just inside them; excluded endpoints drop out below.
    if (std::isfinite(b.lower)) {
        xs.insert(xs.end(), {b.lower, std::nextafter(b.lower, b.upper), b.lower + 1e-12 * std::max(1.0, std::abs(b.lower))});
    }
    if (std::isfinite(b.upper)) {
        xs.insert(xs.end(), {b.upper, std::nextafter(b.upper, b.lower), b.upper - 1e-12 * std::max(1.0, std::abs(b.upper))});
    }
    xs.push_back(0.0);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    xs.erase(std::remove_if(xs.begin(), xs.end(), [&](double x) { return !inside(x); }), xs.end());

    Best best;
    std::size_t best_i = 0;
    std::vector<double> rs(xs.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (auto r = real_residual(pair, xs[i])) {
            rs[i] = *r;
            if (*r < best.residual) {
                best.residual = *r;
                best_i = i;
            }
        }
    }
    if (!std::isfinite(best.residual)) return best;

    double lo = best_i > 0 ? xs[best_i - 1] : xs[best_i];
    double hi = best_i + 1 < xs.size() ? xs[best_i + 1] : xs[best_i];
    double bx = xs[best_i];
    const double g = (std::sqrt(5.0) - 1) / 2;
    auto f = [&](double x) {
        auto r = real_residual(pair, x);
        return r ? *r : std::numeric_limits<double>::infinity();
    };
    double c = hi - g * (hi - lo);
    double d = lo + g * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 300 && hi - lo > 1e-15 * std::max(1.0, std::abs(bx)); ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    for (double x : {c, d, (lo + hi) / 2}) {
        const double r = f(x);
        if (r < best.residual && inside(x)) {
            best.residual = r;
            bx = x;
        }
    }
    best.at = Point::at_value(bx);
    return best;
}

}  // namespace

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::Increasing: return "increasing";
        case Direction::Decreasing: return "decreasing";
        case Direction::Either: return "either";
    }
    return "?";
}

std::optional<Direction> direction_from_string(std::string_view s) {
    if (s == "increasing" || s == "inc") return Direction::Increasing;
    if (s == "decreasing" || s == "dec") return Direction::Decreasing;
    if (s == "either" || s == "monotone") return Direction::Either;
    return std::nullopt;
}

std::string_view to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::CoincidenceHit: return "coincidence-hit";
        case TraceVerdict::CauchyDetected: return "cauchy-detected";
        case TraceVerdict::NoCoincidenceWithinBudget: return "no-coincidence-within-budget";
        case TraceVerdict::PreconditionFailed: return "precondition-failed";
    }
    return "?";
}

std::optional<Direction> start_condition(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x0,
                                         Direction direction) {
    const Point sx = pair.S.apply(space, x0);
    const Point tx = pair.T.apply(space, x0);
    const bool inc = space.leq(sx, tx);
    const bool dec = space.leq(tx, sx);
    switch (direction) {
        case Direction::Increasing: return inc ? std::optional(Direction::Increasing) : std::nullopt;
        case Direction::Decreasing: return dec ? std::optional(Direction::Decreasing) : std::nullopt;
        case Direction::Either:
            if (inc) return Direction::Increasing;
            if (dec) return Direction::Decreasing;
            return std::nullopt;
    }
    return std::nullopt;
}

IterationTrace jungck_sequence(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x0,
                               const SolveOptions& options) {
    IterationTrace trace;
    space.require(x0);
    const auto dir = start_condition(space, pair, x0, options.direction);
    if (!dir) {
        trace.verdict = TraceVerdict::PreconditionFailed;
        trace.direction = options.direction;
        trace.detail = "start condition for direction " + std::string(to_string(options.direction)) +
                       " fails at x0 = " + space.label(x0);
        return trace;
    }
    trace.direction = *dir;

    Point x = x0;
    try {
        Point sx = image(space, pair.S, x);
        Point tx = image(space, pair.T, x);
        for (std::size_t n = 0;; ++n) {
            trace.steps.push_back(Step{x, sx, tx, std::nullopt});
            if (!space.is_discrete() && !(std::isfinite(sx.value()) && std::isfinite(tx.value()))) {
                trace.verdict = TraceVerdict::NoCoincidenceWithinBudget;
                trace.detail = "iterates left the finite reals at n = " + std::to_string(n);
                return trace;
            }
            if (hit(space, sx, tx, options.tol)) {
                trace.steps.back().gap = 0.0;
                trace.verdict = TraceVerdict::CoincidenceHit;
                trace.hit_at = n;
                trace.residual = space.metric(sx, tx);
                trace.detail = "S x_n = T x_n at n = " + std::to_string(n);
                return trace;
            }
            if (n + 1 >= options.budget) {
                trace.verdict = TraceVerdict::NoCoincidenceWithinBudget;
                trace.detail = "no coincidence within " + std::to_string(options.budget) + " iterations";
                return trace;
            }
            const auto next = s_preimage(space, pair, tx);
            if (!next) throw NoPreimage("T x_" + std::to_string(n) + " = " + space.label(tx) + " has no S-preimage", tx);
            const Point nsx = image(space, pair.S, *next);
            const Point ntx = image(space, pair.T, *next);
            const double gap = space.metric(tx, ntx);
            trace.steps.back().gap = gap;
            x = *next;
            sx = nsx;
            tx = ntx;
            if (!space.is_discrete() && std::isfinite(gap) && gap <= options.tol) {
                trace.steps.push_back(Step{x, sx, tx, std::nullopt});
                trace.verdict = TraceVerdict::CauchyDetected;
                trace.candidate = x;
                trace.residual = space.metric(sx, tx);
                trace.detail = "gap " + num(gap) + " <= " + num(options.tol) + " at n = " + std::to_string(n);
                return trace;
            }
        }
    } catch (const BudgetExceeded& e) {
        trace.verdict = TraceVerdict::NoCoincidenceWithinBudget;
        trace.detail = std::string("space budget reached: ") + e.what();
    } catch (const DomainError& e) {
        trace.verdict = TraceVerdict::NoCoincidenceWithinBudget;
        trace.detail = std::string("mapping left its domain: ") + e.what();
    } catch (const Overflow&) {
        trace.verdict = TraceVerdict::NoCoincidenceWithinBudget;
        trace.detail = "iterates overflowed after " + std::to_string(trace.steps.size()) + " steps";
    }
    return trace;
}

CauchyDetection detect_cauchy(const OrderedMetricSpace& space, const IterationTrace& trace, const ComparisonFn& phi,
                              double eps) {
    if (!(eps > 0)) throw InvalidEps("eps must be positive");
    const double pe = phi(eps);
    if (!(pe < eps)) throw InvalidEps("phi(eps) = " + num(pe) + " is not below eps = " + num(eps));
    CauchyDetection out;
    out.threshold = eps - pe;
    for (std::size_t n = 0; n < trace.steps.size(); ++n) {
        const auto& g = trace.steps[n].gap;
        if (g && *g < out.threshold) {
            out.detected = true;
            out.at = n;
            break;
        }
    }
    if (!out.detected) return out;
    const Point& anchor = trace.steps[*out.at].tx;
    for (std::size_t m = *out.at + 1; m < trace.steps.size(); ++m) {
        if (!(space.metric(trace.steps[m].tx, anchor) < eps)) {
            out.containment_violated = true;
            out.violation_at = m;
            break;
        }
    }
    return out;
}

FixedPointResult extract_fixed_point(const OrderedMetricSpace& space, const MappingPair& pair,
                                     const IterationTrace& trace, double tol) {
    std::optional<Point> x;
    bool from_search = false;
    if (trace.verdict == TraceVerdict::CoincidenceHit && trace.hit_at) {
        x = trace.steps[*trace.hit_at].x;
    } else if (trace.verdict == TraceVerdict::CauchyDetected && trace.candidate) {
        Point cur = *trace.candidate;
        double r = residual_at(space, pair, cur);
        for (std::size_t i = 0; i < kPolishSteps && r > 0; ++i) {
            std::optional<Point> next;
            try {
                next = s_preimage(space, pair, pair.T.apply(space, cur));
            } catch (const Error&) {
                break;
            }
            if (!next) break;
            const double nr = residual_at(space, pair, *next);
            if (!(nr <= r)) break;
            const bool stalled = nr == r && space.same(*next, cur);
            cur = *next;
            r = nr;
            if (stalled) break;
        }
        x = cur;
    }

    // Discrete spaces accept only exact coincidences; a small metric residual
    // between distinct points is not one.
    auto accepted = [&](const Point& p) {
        if (space.is_discrete()) return pair.S.apply(space, p) == pair.T.apply(space, p);
        return residual_at(space, pair, p) <= tol;
    };
    if (!x || !accepted(*x)) {
        const Best best = space.is_discrete() ? discrete_search(space, pair) : numeric_search(space, pair);
        if (!best.at)
            throw NoCoincidence("no point with a finite residual was found", std::numeric_limits<double>::infinity(),
                                x.value_or(Point::at_index(0)));
        if (space.is_discrete() ? !best.exact : best.residual > tol)
            throw NoCoincidence("smallest residual d(Sx, Tx) = " + num(best.residual) +
                                    " at x = " + space.label(*best.at),
                                best.residual, *best.at);
        x = best.at;
        from_search = true;
    }

    if (!space.is_discrete()) {
        // Snap to the tolerance lattice when that does not worsen the residual,
        // so an exact coincidence such as 0 is reported exactly.
        const Point snapped = Point::at_value(std::round(x->value() / tol) * tol);
        try {
            if (space.contains(snapped) && residual_at(space, pair, snapped) <= residual_at(space, pair, *x)) x = snapped;
        } catch (const Error&) {
        }
    }

    FixedPointResult out{*x, pair.S.apply(space, *x)};
    out.residual = residual_at(space, pair, *x);
    out.from_search = from_search;
    const Point z = out.point_of_coincidence;
    const Point tz = pair.T.apply(space, z);
    const Point sz = pair.S.apply(space, z);
    // Weak compatibility at x: S(Tx) = T(Sx); with Sx = Tx = z this is Sz = Tz.
    auto equal = [&](const Point& a, const Point& b) { return space.is_discrete() ? a == b : space.metric(a, b) <= tol; };
    out.weakly_compatible_here = equal(sz, tz);
    if (out.weakly_compatible_here && equal(sz, z) && equal(tz, z)) {
        out.common_fixed_point = z;
    } else if (equal(out.point_of_coincidence, *x)) {
        out.common_fixed_point = *x;
    }
    out.detail = "coincidence point " + space.label(*x) + " with residual " + num(out.residual);
    if (out.common_fixed_point) out.detail += "; common fixed point " + space.label(*out.common_fixed_point);
    if (from_search) out.detail += " (located by residual search)";
    return out;
}

GapAudit audit_gaps(const IterationTrace& trace, const ComparisonFn& phi, double eps) {
    GapAudit a;
    std::vector<double> gaps;
    for (const auto& s : trace.steps) {
        if (!s.gap) break;
        gaps.push_back(*s.gap);
    }
    if (gaps.empty()) {
        a.detail = "no gaps recorded";
        return a;
    }
    double envelope = gaps[0];
    for (std::size_t n = 1; n < gaps.size(); ++n) {
        envelope = phi(envelope);
        ++a.checked;
        if (!a.step_violation && gaps[n] > phi(gaps[n - 1]) + eps) a.step_violation = n;
        if (!a.envelope_violation && gaps[n] > envelope + static_cast<double>(n) * eps) a.envelope_violation = n;
    }
    a.ok = !a.step_violation && !a.envelope_violation;
    if (a.ok) {
        a.detail = std::to_string(a.checked) + " consecutive gaps within phi and the phi^n envelope";
    } else {
        const std::size_t n = a.step_violation ? *a.step_violation : *a.envelope_violation;
        a.detail = "gap " + std::to_string(n) + " = " + num(gaps[n]) + " exceeds " +
                   (a.step_violation ? "phi(previous gap) = " + num(phi(gaps[n - 1])) : std::string("the envelope"));
    }
    return a;
}

}  // namespace jungck
