#include "jungck/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "jungck/error.hpp"

namespace jungck {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string tuple_text(const Tuple6& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + num(t[i]);
    return out + ")";
}

// Grid points ordered by distance from 1 on a log scale, so witnesses are
// reported at unit scale when the violation occurs there.
std::vector<double> unit_first(std::vector<double> pts) {
    std::stable_sort(pts.begin(), pts.end(), [](double a, double b) {
        auto key = [](double t) { return t > 0 ? std::abs(std::log10(t)) : 1e9; };
        return key(a) < key(b);
    });
    return pts;
}

std::vector<double> positive_points(const GridSpec& grid) {
    std::vector<double> out;
    for (double t : grid.axis)
        if (t > 0) out.push_back(t);
    return out;
}

// Evaluates F, mapping domain failures to nullopt.
std::optional<double> try_eval(const ImplicitContraction& ic, const Tuple6& t) {
    try {
        const double v = ic.F(t);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

std::size_t designated_coordinate(ConditionId which) {
    switch (which) {
        case ConditionId::F1a: return 4;
        case ConditionId::F1b: return 3;
        case ConditionId::F1c: return 2;
        default: throw Error("not an F1 condition: " + std::string(to_string(which)));
    }
}

}  // namespace

ComparisonFn ComparisonFn::linear(double k) {
    return ComparisonFn([k](double t) { return k * t; }, num(k) + "*t");
}

ComparisonFn ComparisonFn::zero() {
    return ComparisonFn([](double) { return 0.0; }, "0");
}

ComparisonFn ComparisonFn::rational(double k, double s) {
    if (s == 0) return linear(k);
    return ComparisonFn([k, s](double t) { return k * t / (1 + s * t); },
                        num(k) + "*t/(1 + " + num(s) + "*t)");
}

double ComparisonFn::iterate(double t, std::size_t n) const {
    for (std::size_t i = 0; i < n; ++i) t = f_(t);
    return t;
}

ComparisonFn HalfComparisonFn::doubled() const {
    auto rho = rho_;
    return ComparisonFn([rho](double t) { return rho(2 * t); }, "(" + rho_.label() + ")[t:=2t]");
}

GridSpec GridSpec::default_grid() {
    GridSpec g;
    g.axis.push_back(0.0);
    for (int i = 0; i <= 24; ++i) g.axis.push_back(std::pow(10.0, -3.0 + 6.0 * i / 24.0));
    g.description = "log grid of 25 points over [1e-3, 1e3] plus 0";
    return g;
}

GridSpec GridSpec::from_points(std::vector<double> points, std::string description) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return GridSpec{std::move(points), std::move(description)};
}

std::string_view to_string(ConditionId id) {
    switch (id) {
        case ConditionId::Comparison: return "comparison";
        case ConditionId::HalfComparison: return "half-comparison";
        case ConditionId::F1a: return "F1a";
        case ConditionId::F1b: return "F1b";
        case ConditionId::F1c: return "F1c";
        case ConditionId::F2: return "F2";
        case ConditionId::Contraction: return "contraction";
    }
    return "?";
}

std::string_view to_string(ConditionVerdict v) {
    switch (v) {
        case ConditionVerdict::PassOnGrid: return "pass-on-grid";
        case ConditionVerdict::Counterexample: return "counterexample";
        case ConditionVerdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::optional<ConditionId> condition_from_string(std::string_view name) {
    for (auto id : {ConditionId::Comparison, ConditionId::HalfComparison, ConditionId::F1a, ConditionId::F1b,
                    ConditionId::F1c, ConditionId::F2, ConditionId::Contraction}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

ConditionReport check_comparison(const ComparisonFn& phi, const GridSpec& grid) {
    ConditionReport r{ConditionId::Comparison};
    r.grid = grid.description;
    const auto pos = positive_points(grid);
    if (pos.size() < 2) throw Error("comparison grid needs at least two positive points");

    auto fail = [&](Witness w, std::string detail) {
        r.verdict = ConditionVerdict::Counterexample;
        r.witness = std::move(w);
        r.detail = std::move(detail);
        return r;
    };

    const double at0 = phi(0.0);
    ++r.evaluated;
    if (!(std::abs(at0) <= kEpsTol)) {
        Witness w{"phi(0) != 0"};
        w.t = 0.0;
        w.value = at0;
        return fail(w, phi.label() + " at 0 is " + num(at0));
    }

    std::vector<double> sorted = grid.axis;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> vals;
    for (double t : sorted) vals.push_back(phi(t));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            ++r.evaluated;
            if (!(vals[i] <= vals[j] + kEpsTol)) {
                Witness w{"not increasing"};
                w.tuple = {sorted[i], sorted[j]};
                w.value = vals[i] - vals[j];
                return fail(w, "phi(" + num(sorted[i]) + ") = " + num(vals[i]) + " > phi(" + num(sorted[j]) +
                                   ") = " + num(vals[j]));
            }
        }
    }

    for (double t : unit_first(pos)) {
        ++r.evaluated;
        const double v = phi(t);
        if (!(v < t - kEpsTol) || v < -kEpsTol) {
            Witness w{"phi(t) >= t"};
            w.t = t;
            w.value = v;
            return fail(w, "phi(" + num(t) + ") = " + num(v) + " is not below " + num(t));
        }
    }

    for (double t : unit_first(pos)) {
        double x = t;
        std::size_t n = 0;
        for (; n < kDecayIterations && x >= kEpsTol; ++n) {
            x = phi(x);
            if (!std::isfinite(x)) break;
        }
        ++r.evaluated;
        if (!(std::isfinite(x) && x < kEpsTol)) {
            Witness w{"iterates do not decay"};
            w.t = t;
            w.value = x;
            return fail(w, "phi^" + std::to_string(n) + "(" + num(t) + ") = " + num(x));
        }
    }
    r.detail = phi.label() + " is increasing, below the diagonal and decays to 0 on the grid";
    return r;
}

ConditionReport check_half_comparison(const HalfComparisonFn& rho, const GridSpec& grid) {
    ConditionReport r = check_comparison(rho.doubled(), grid);
    r.id = ConditionId::HalfComparison;
    if (r.verdict == ConditionVerdict::Counterexample) {
        r.detail = "t -> rho(2t) is not a comparison function: " + r.detail;
        if (r.witness && r.witness->kind == "phi(t) >= t") r.witness->kind = "rho(2t) >= t";
    } else {
        r.detail = "t -> " + rho.label() + " at 2t is a comparison function on the grid";
    }
    return r;
}

Tuple6 characteristic_tuple(ConditionId which, double u, double v) {
    switch (which) {
        case ConditionId::F1a: return {u, v, v, u, u + v, 0};
        case ConditionId::F1b: return {u, v, 0, u + v, u, v};
        case ConditionId::F1c: return {u, v, u + v, 0, v, u};
        default: throw Error("not an F1 condition: " + std::string(to_string(which)));
    }
}

ConditionReport check_condition_F1(const ImplicitContraction& ic, ConditionId which, const GridSpec& grid) {
    const std::size_t coord = designated_coordinate(which);
    if (!ic.companion) throw MissingCompanion(std::string(to_string(which)) + " needs a companion comparison function");
    const ComparisonFn& phi = *ic.companion;

    ConditionReport r{which};
    r.grid = grid.description;
    bool any_defined = false;

    for (double u : unit_first(grid.axis)) {
        for (double v : unit_first(grid.axis)) {
            const Tuple6 t = characteristic_tuple(which, u, v);
            ++r.evaluated;
            const auto val = try_eval(ic, t);
            if (!val) {
                ++r.not_applicable;
                continue;
            }
            any_defined = true;
            const double bound = phi(v);
            if (*val <= kEpsTol && u > bound + kEpsTol) {
                r.verdict = ConditionVerdict::Counterexample;
                Witness w{"implication fails"};
                w.tuple.assign(t.begin(), t.end());
                w.value = *val;
                w.note = "u = " + num(u) + ", v = " + num(v) + ", phi(v) = " + num(bound);
                r.detail = "F" + tuple_text(t) + " = " + num(*val) + " <= 0 but u = " + num(u) + " > phi(v) = " +
                           num(bound);
                r.witness = std::move(w);
                return r;
            }
        }
    }

    // Monotone decrease in the designated coordinate, other coordinates from a
    // small lattice of values.
    static constexpr double kBase[] = {0, 0.5, 1, 3};
    static constexpr double kLevels[] = {0, 1e-3, 1e-2, 1e-1, 1, 10, 100, 1000};
    std::array<std::size_t, 5> digit{};
    for (std::size_t combo = 0; combo < 1024; ++combo) {
        std::size_t c = combo;
        for (auto& d : digit) {
            d = c % 4;
            c /= 4;
        }
        Tuple6 t{};
        for (std::size_t i = 0, k = 0; i < 6; ++i) {
            if (i != coord) t[i] = kBase[digit[k++]];
        }
        for (std::size_t l = 0; l + 1 < std::size(kLevels); ++l) {
            Tuple6 lo = t, hi = t;
            lo[coord] = kLevels[l];
            hi[coord] = kLevels[l + 1];
            r.evaluated += 2;
            const auto flo = try_eval(ic, lo);
            const auto fhi = try_eval(ic, hi);
            if (!flo || !fhi) {
                ++r.not_applicable;
                continue;
            }
            any_defined = true;
            if (*flo < *fhi - kEpsTol) {
                r.verdict = ConditionVerdict::Counterexample;
                Witness w{"not decreasing"};
                w.tuple.assign(lo.begin(), lo.end());
                w.coordinate = coord;
                w.value = *fhi - *flo;
                w.note = "raising t" + std::to_string(coord + 1) + " from " + num(kLevels[l]) + " to " +
                         num(kLevels[l + 1]) + " raises F from " + num(*flo) + " to " + num(*fhi);
                r.detail = "F is not decreasing in variable " + std::to_string(coord + 1) + ": " + w.note;
                r.witness = std::move(w);
                return r;
            }
        }
    }

    if (!any_defined) {
        r.verdict = ConditionVerdict::NotApplicable;
        r.detail = "F is undefined on every inspected tuple";
    } else {
        r.detail = "implication and monotonicity hold on the grid with phi = " + phi.label();
    }
    return r;
}

ConditionReport check_condition_F2(const ImplicitContraction& ic, const GridSpec& grid) {
    ConditionReport r{ConditionId::F2};
    r.grid = grid.description;
    const auto pos = unit_first(positive_points(grid));
    for (double u : pos) {
        const Tuple6 t{u, u, 0, 0, u, u};
        ++r.evaluated;
        const auto val = try_eval(ic, t);
        if (!val) {
            ++r.not_applicable;
            continue;
        }
        if (!(*val > kEpsTol)) {
            r.verdict = ConditionVerdict::Counterexample;
            Witness w{"F(u,u,0,0,u,u) <= 0"};
            w.tuple.assign(t.begin(), t.end());
            w.t = u;
            w.value = *val;
            r.detail = "F" + tuple_text(t) + " = " + num(*val) + " is not positive";
            r.witness = std::move(w);
            return r;
        }
    }
    if (r.not_applicable == pos.size()) {
        r.verdict = ConditionVerdict::NotApplicable;
        r.detail = "F(u,u,0,0,u,u) is undefined for every grid u";
    } else {
        r.detail = "F(u,u,0,0,u,u) > 0 on the grid";
    }
    return r;
}

ConditionReport check_condition(const ImplicitContraction& ic, ConditionId which, const GridSpec& grid) {
    switch (which) {
        case ConditionId::F1a:
        case ConditionId::F1b:
        case ConditionId::F1c: return check_condition_F1(ic, which, grid);
        case ConditionId::F2: return check_condition_F2(ic, grid);
        case ConditionId::Comparison:
            if (!ic.companion) throw MissingCompanion("no companion comparison function");
            return check_comparison(*ic.companion, grid);
        case ConditionId::HalfComparison:
            if (!ic.inner) throw MissingCompanion("no inner function to test");
            return check_half_comparison(HalfComparisonFn(*ic.inner), grid);
        case ConditionId::Contraction: break;
    }
    throw Error("the contraction inequality needs a space; use evaluate_contraction");
}

Tuple6 contraction_tuple(const OrderedMetricSpace& space, const MappingPair& pair, const Point& x,
                         const Point& y) {
    const Point tx = pair.T.apply(space, x);
    const Point ty = pair.T.apply(space, y);
    const Point sx = pair.S.apply(space, x);
    const Point sy = pair.S.apply(space, y);
    return {space.metric(tx, ty), space.metric(sx, sy), space.metric(sx, tx),
            space.metric(sy, ty), space.metric(sx, ty), space.metric(sy, tx)};
}

std::vector<Point> sample_points(const OrderedMetricSpace& space, const PairSampler& sampler) {
    if (space.flavor() == Flavor::Finite) return space.enumerate();
    if (space.flavor() == Flavor::Indexed) {
        // Only the first half of the budget acts as a source, so that T and S
        // images of sampled points stay materializable.
        const std::size_t budget = space.indexed()->budget();
        return space.enumerate(std::min(sampler.index_limit, std::max<std::size_t>(1, budget / 2)));
    }
    const auto& b = space.interval()->bounds();
    const double lo = std::isfinite(b.lower) ? b.lower : (std::isfinite(b.upper) ? b.upper - 2 * sampler.numeric_span
                                                                                 : -sampler.numeric_span);
    const double hi = std::isfinite(b.upper) ? b.upper : (std::isfinite(b.lower) ? b.lower + 2 * sampler.numeric_span
                                                                                 : sampler.numeric_span);
    std::vector<double> xs;
    const std::size_t n = std::max<std::size_t>(sampler.numeric_samples, 3);
    for (std::size_t i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        if (i == n - 1) x = hi;
        xs.push_back(x);
    }
    if (lo < 0 && hi > 0) xs.push_back(0.0);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Point> out;
    for (double x : xs) {
        const Point p = Point::at_value(x);
        if (space.contains(p)) out.push_back(p);
    }
    return out;
}

ConditionReport evaluate_contraction(const OrderedMetricSpace& space, const MappingPair& pair,
                                     const ImplicitContraction& ic, const PairSampler& sampler) {
    ConditionReport r{ConditionId::Contraction};
    const auto pts = sample_points(space, sampler);
    r.grid = space.flavor() == Flavor::Finite ? "all pairs of the finite space"
                                              : std::to_string(pts.size()) + " sampled points";

    std::vector<Point> images;
    images.reserve(pts.size());
    for (const auto& p : pts) images.push_back(pair.S.apply(space, p));

    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (!space.leq(images[i], images[j])) continue;
            const Tuple6 t = contraction_tuple(space, pair, pts[i], pts[j]);
            ++r.evaluated;
            const auto val = try_eval(ic, t);
            if (!val) {
                ++r.not_applicable;
                continue;
            }
            if (*val > kEpsTol) {
                r.verdict = ConditionVerdict::Counterexample;
                Witness w{"contraction inequality fails"};
                w.tuple.assign(t.begin(), t.end());
                w.point = pts[i];
                w.other = pts[j];
                w.value = *val;
                r.detail = "x = " + space.label(pts[i]) + ", y = " + space.label(pts[j]) + ": F" + tuple_text(t) +
                           " = " + num(*val) + " > 0";
                r.witness = std::move(w);
                return r;
            }
        }
    }
    if (r.evaluated > 0 && r.not_applicable == r.evaluated) {
        r.verdict = ConditionVerdict::NotApplicable;
        r.detail = "F is undefined on every inspected pair";
    } else {
        r.detail = std::to_string(r.evaluated) + " pairs with Sx <= Sy satisfy F <= 0";
        if (r.not_applicable) r.detail += " (" + std::to_string(r.not_applicable) + " undefined tuples skipped)";
    }
    return r;
}

}  // namespace jungck
