#include "jungck/mapping.hpp"

#include <cmath>

#include "jungck/error.hpp"

namespace jungck {

namespace {

constexpr double kBisectionTolerance = 1e-12;

std::optional<double> bisect_preimage(const NumericIntervalSpace& space, const SelfMap::RealFn& s,
                                      double target) {
    const auto& b = space.bounds();
    auto f = [&](double x) { return s(x) - target; };

    double lo = std::isfinite(b.lower) ? b.lower : std::min(-1.0, std::isfinite(b.upper) ? b.upper - 1 : -1.0);
    double hi = std::isfinite(b.upper) ? b.upper : std::max(1.0, std::isfinite(b.lower) ? b.lower + 1 : 1.0);
    double flo = f(lo);
    double fhi = f(hi);
    // Grow an unbounded side until the monotone S brackets the target.
    for (int k = 0; k < 2100 && flo * fhi > 0; ++k) {
        const bool grow_hi = !std::isfinite(b.upper) && (std::isfinite(b.lower) || k % 2 == 0);
        const bool grow_lo = !std::isfinite(b.lower) && !grow_hi;
        if (grow_hi && hi < 1e300) {
            hi = hi * 2 + 1;
            fhi = f(hi);
        } else if (grow_lo && lo > -1e300) {
            lo = lo * 2 - 1;
            flo = f(lo);
        } else {
            break;
        }
    }
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (!(flo * fhi < 0)) return std::nullopt;

    for (int it = 0; it < 400 && hi - lo > kBisectionTolerance; ++it) {
        const double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::abs(flo) <= std::abs(f(hi)) ? lo : hi;
}

}  // namespace

SelfMap SelfMap::table(Table t, std::string label) {
    SelfMap m;
    m.rep_ = std::move(t);
    m.label_ = label.empty() ? "table" : std::move(label);
    return m;
}

SelfMap SelfMap::index_fn(IndexFn f, std::string label) {
    SelfMap m;
    m.rep_ = std::move(f);
    m.label_ = label.empty() ? "index map" : std::move(label);
    return m;
}

SelfMap SelfMap::real_fn(RealFn f, std::string label) {
    SelfMap m;
    m.rep_ = std::move(f);
    m.label_ = label.empty() ? "real map" : std::move(label);
    return m;
}

Point SelfMap::apply(const OrderedMetricSpace& space, const Point& p) const {
    if (is_identity()) return p;
    if (const auto* t = std::get_if<Table>(&rep_)) {
        const std::size_t i = p.index();
        if (i >= t->size()) throw InvalidPoint("map table has no entry for " + p.to_string());
        const Point out = Point::at_index((*t)[i]);
        if (space.flavor() == Flavor::Finite && !space.contains(out))
            throw InvalidPoint("map " + label_ + " sends " + p.to_string() + " outside the space");
        return out;
    }
    if (const auto* f = std::get_if<IndexFn>(&rep_)) return Point::at_index((*f)(p.index()));
    const auto& f = std::get<RealFn>(rep_);
    const Point out = Point::at_value(f(p.value()));
    if (!space.contains(out))
        throw InvalidPoint("map " + label_ + " sends " + p.to_string() + " to " + out.to_string() +
                           ", outside the space");
    return out;
}

double SelfMap::eval_real(double x) const {
    if (is_identity()) return x;
    if (const auto* f = std::get_if<RealFn>(&rep_)) return (*f)(x);
    throw InvalidPoint("map " + label_ + " is not a real function");
}

std::optional<Point> s_preimage(const OrderedMetricSpace& space, const MappingPair& pair,
                                const Point& target) {
    if (pair.S.is_identity()) {
        if (space.flavor() == Flavor::Interval && !space.contains(target)) return std::nullopt;
        return target;
    }
    if (space.is_discrete()) {
        for (const Point& x : space.enumerate()) {
            if (pair.S.apply(space, x) == target) return x;
        }
        return std::nullopt;
    }

    const double y = target.value();
    double x = 0;
    if (pair.s_inverse) {
        x = (*pair.s_inverse)(y);
        if (!space.contains(Point::at_value(x))) return std::nullopt;
        const double back = pair.S.apply(space, Point::at_value(x)).value();
        if (!std::isfinite(x) || std::abs(back - y) > 1e-9 * std::max(1.0, std::abs(y))) return std::nullopt;
    } else if (pair.s_monotone) {
        // S may be evaluated at an excluded endpoint while bracketing.
        SelfMap::RealFn s = [&](double v) { return pair.S.eval_real(v); };
        auto root = bisect_preimage(*space.interval(), s, y);
        if (!root) return std::nullopt;
        x = *root;
        if (std::abs(s(x) - y) > 1e-9 * std::max(1.0, std::abs(y))) return std::nullopt;
    } else {
        throw Error("S has no configured inverse; declare S monotone or supply S_inverse");
    }
    const Point p = Point::at_value(x);
    if (!space.contains(p)) return std::nullopt;
    return p;
}

}  // namespace jungck
