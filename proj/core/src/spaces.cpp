#include "jungck/spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "jungck/error.hpp"

namespace jungck {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 14> kPropertyNames{{
    {Property::Complete, "complete"},
    {Property::IRegular, "i-regular"},
    {Property::DRegular, "d-regular"},
    {Property::MRegular, "m-regular"},
    {Property::SIncreasing, "s-increasing"},
    {Property::RangeInclusion, "range-inclusion"},
    {Property::SOContinuous, "s-o-continuous"},
    {Property::OCompatible, "o-compatible"},
    {Property::OContinuous, "o-continuous"},
    {Property::Continuous, "continuous"},
    {Property::WeaklyCompatible, "weakly-compatible"},
    {Property::Directed, "directed"},
    {Property::TotallyOrdered, "totally-ordered"},
    {Property::ComparableMapping, "comparable-mapping"},
}};

std::string fmt_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

std::string_view to_string(Property p) {
    for (const auto& [prop, name] : kPropertyNames)
        if (prop == p) return name;
    return "?";
}

std::optional<Property> property_from_string(std::string_view name) {
    for (const auto& [prop, n] : kPropertyNames)
        if (n == name) return prop;
    return std::nullopt;
}

std::string_view to_string(Flavor f) {
    switch (f) {
        case Flavor::Finite: return "finite";
        case Flavor::Indexed: return "indexed";
        case Flavor::Interval: return "interval";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<double> distances,
                         const std::vector<OrderPair>& order)
    : labels_(std::move(labels)), distances_(std::move(distances)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidSpace("finite space needs at least one point");
    if (distances_.size() != n * n)
        throw InvalidSpace("distance matrix has " + std::to_string(distances_.size()) +
                           " entries, expected " + std::to_string(n * n));
    for (double d : distances_)
        if (!std::isfinite(d) || d < 0) throw InvalidSpace("distances must be finite and nonnegative");
    order_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) order_[i * n + i] = 1;
    for (const auto& [a, b] : order) {
        if (a >= n || b >= n) throw InvalidSpace("order pair refers to a point outside the space");
        order_[a * n + b] = 1;
    }
}

FiniteSpace FiniteSpace::on_line(std::vector<std::string> labels, const std::vector<double>& values) {
    std::vector<OrderPair> order;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j)
            if (i != j && values[i] <= values[j]) order.emplace_back(i, j);
    return on_line(std::move(labels), values, order);
}

FiniteSpace FiniteSpace::on_line(std::vector<std::string> labels, const std::vector<double>& values,
                                 const std::vector<OrderPair>& order) {
    if (labels.size() != values.size()) throw InvalidSpace("labels and values differ in length");
    const std::size_t n = values.size();
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::abs(values[i] - values[j]);
    return FiniteSpace(std::move(labels), std::move(d), order);
}

std::optional<std::size_t> FiniteSpace::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

FiniteSpace FiniteSpace::with_total_relation() const {
    FiniteSpace copy = *this;
    std::fill(copy.order_.begin(), copy.order_.end(), char{1});
    return copy;
}

// ---------------------------------------------------------------------------
// IndexedSequenceSpace

IndexedSequenceSpace::IndexedSequenceSpace(ValueFn value, std::size_t budget, std::string description)
    : value_(std::move(value)), budget_(budget), description_(std::move(description)) {
    if (!value_) throw InvalidSpace("indexed space needs a value function");
    if (budget_ == 0) throw InvalidSpace("indexed space budget must be positive");
}

double IndexedSequenceSpace::value(std::size_t i) const {
    if (i >= budget_) throw BudgetExceeded(i, budget_);
    return value_(i);
}

double IndexedSequenceSpace::distance(std::size_t a, std::size_t b) const {
    return std::abs(value(a) - value(b));
}

bool IndexedSequenceSpace::leq(std::size_t a, std::size_t b) const {
    const double va = value(a);
    const double vb = value(b);
    return total_ || a == b || va <= vb;
}

IndexedSequenceSpace IndexedSequenceSpace::with_total_relation() const {
    IndexedSequenceSpace copy = *this;
    copy.total_ = true;
    return copy;
}

// ---------------------------------------------------------------------------
// NumericIntervalSpace

NumericIntervalSpace::NumericIntervalSpace(IntervalBounds bounds, OrderPredicate order,
                                           std::string order_label)
    : bounds_(bounds), order_(std::move(order)), order_label_(std::move(order_label)) {
    if (std::isnan(bounds_.lower) || std::isnan(bounds_.upper) || !(bounds_.lower < bounds_.upper))
        throw InvalidSpace("interval needs lower < upper");
    if (std::isinf(bounds_.lower)) bounds_.include_lower = false;
    if (std::isinf(bounds_.upper)) bounds_.include_upper = false;
}

bool NumericIntervalSpace::contains(double x) const {
    if (!std::isfinite(x)) return false;
    const bool above = bounds_.include_lower ? x >= bounds_.lower : x > bounds_.lower;
    const bool below = bounds_.include_upper ? x <= bounds_.upper : x < bounds_.upper;
    return above && below;
}

bool NumericIntervalSpace::leq(double a, double b) const {
    if (a == b) return true;
    return order_ ? order_(a, b) : a <= b;
}

NumericIntervalSpace NumericIntervalSpace::with_total_relation() const {
    return NumericIntervalSpace(bounds_, [](double, double) { return true; }, "total");
}

// ---------------------------------------------------------------------------
// OrderedMetricSpace

void OrderedMetricSpace::require(const Point& p) const {
    switch (flavor()) {
        case Flavor::Finite: {
            const std::size_t i = p.index();
            if (i >= finite()->size())
                throw InvalidPoint("point " + p.to_string() + " is outside the finite space");
            return;
        }
        case Flavor::Indexed: {
            const std::size_t i = p.index();
            if (i >= indexed()->budget()) throw BudgetExceeded(i, indexed()->budget());
            return;
        }
        case Flavor::Interval:
            if (!interval()->contains(p.value()))
                throw InvalidPoint("point " + p.to_string() + " is outside the interval");
            return;
    }
}

bool OrderedMetricSpace::contains(const Point& p) const {
    switch (flavor()) {
        case Flavor::Finite: return p.is_index() && p.index() < finite()->size();
        case Flavor::Indexed: return p.is_index() && p.index() < indexed()->budget();
        case Flavor::Interval: return p.is_value() && interval()->contains(p.value());
    }
    return false;
}

double OrderedMetricSpace::metric(const Point& a, const Point& b) const {
    require(a);
    require(b);
    switch (flavor()) {
        case Flavor::Finite: return finite()->distance(a.index(), b.index());
        case Flavor::Indexed: return indexed()->distance(a.index(), b.index());
        case Flavor::Interval: return std::abs(a.value() - b.value());
    }
    return 0.0;
}

bool OrderedMetricSpace::leq(const Point& a, const Point& b) const {
    require(a);
    require(b);
    switch (flavor()) {
        case Flavor::Finite: return finite()->leq(a.index(), b.index());
        case Flavor::Indexed: return indexed()->leq(a.index(), b.index());
        case Flavor::Interval: return interval()->leq(a.value(), b.value());
    }
    return false;
}

bool OrderedMetricSpace::same(const Point& a, const Point& b) const {
    if (flavor() == Flavor::Interval) return std::abs(a.value() - b.value()) <= kMetricTolerance;
    return a.index() == b.index();
}

std::vector<Point> OrderedMetricSpace::enumerate(std::size_t limit) const {
    std::vector<Point> out;
    std::size_t n = 0;
    if (const auto* f = finite()) n = f->size();
    else if (const auto* s = indexed()) n = s->budget();
    n = std::min(n, limit);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(Point::at_index(i));
    return out;
}

OrderedMetricSpace OrderedMetricSpace::with_assertions(std::set<Property> props) const {
    OrderedMetricSpace copy = *this;
    copy.asserted_ = std::move(props);
    return copy;
}

OrderedMetricSpace OrderedMetricSpace::with_total_relation() const {
    OrderedMetricSpace copy = std::visit(
        [](const auto& s) { return OrderedMetricSpace(s.with_total_relation()); }, rep_);
    copy.asserted_ = asserted_;
    return copy;
}

std::string OrderedMetricSpace::label(const Point& p) const {
    if (const auto* f = finite(); f && p.is_index() && p.index() < f->size()) return f->label(p.index());
    if (flavor() == Flavor::Indexed && p.is_index()) return "x" + std::to_string(p.index());
    return p.is_value() ? fmt_real(p.value()) : p.to_string();
}

std::string OrderedMetricSpace::describe() const {
    switch (flavor()) {
        case Flavor::Finite: return "finite space with " + std::to_string(finite()->size()) + " points";
        case Flavor::Indexed: {
            std::string d = "indexed space (budget " + std::to_string(indexed()->budget()) + ")";
            if (!indexed()->description().empty()) d += ": " + indexed()->description();
            return d;
        }
        case Flavor::Interval: {
            const auto& b = interval()->bounds();
            return std::string(b.include_lower ? "[" : "(") + fmt_real(b.lower) + ", " + fmt_real(b.upper) +
                   (b.include_upper ? "]" : ")") + " with " + interval()->order_label() + " order";
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

ValidationReport validate_space(const OrderedMetricSpace& space) {
    ValidationReport report;
    auto add = [&](std::string axiom, std::vector<std::size_t> w, std::string detail) {
        report.violations.push_back({std::move(axiom), std::move(w), std::move(detail)});
    };

    if (const auto* f = space.finite()) {
        const std::size_t n = f->size();
        for (std::size_t a = 0; a < n; ++a) {
            if (std::abs(f->distance(a, a)) > kMetricTolerance)
                add("identity", {a}, "d(a,a) = " + fmt_real(f->distance(a, a)));
            for (std::size_t b = 0; b < n; ++b) {
                if (std::abs(f->distance(a, b) - f->distance(b, a)) > kMetricTolerance)
                    add("symmetry", {a, b}, "d(a,b) != d(b,a)");
                if (a != b && f->distance(a, b) <= kMetricTolerance)
                    add("separation", {a, b}, "d(a,b) = 0 for distinct points");
                for (std::size_t c = 0; c < n; ++c)
                    if (f->distance(a, b) > f->distance(a, c) + f->distance(c, b) + kMetricTolerance)
                        add("triangle", {a, b, c},
                            fmt_real(f->distance(a, b)) + " > " + fmt_real(f->distance(a, c)) + " + " +
                                fmt_real(f->distance(c, b)));
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (!f->leq(a, a)) add("reflexivity", {a}, "a not <= a");
            for (std::size_t b = a + 1; b < n; ++b)
                if (f->leq(a, b) && f->leq(b, a)) add("antisymmetry", {a, b}, "a <= b and b <= a");
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (f->leq(a, b) && f->leq(b, c) && !f->leq(a, c))
                        add("transitivity", {a, b, c}, "a <= b <= c but not a <= c");
        }
        return report;
    }

    if (const auto* s = space.indexed()) {
        // Structural: values finite and pairwise distinct on a leading fragment.
        const std::size_t m = std::min<std::size_t>(s->budget(), 256);
        std::vector<std::pair<double, std::size_t>> vals;
        for (std::size_t i = 0; i < m; ++i) {
            const double v = s->value(i);
            if (!std::isfinite(v)) add("finite-values", {i}, "value is not finite");
            vals.emplace_back(v, i);
        }
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 1; k < vals.size(); ++k)
            if (vals[k].first == vals[k - 1].first)
                add("separation", {vals[k - 1].second, vals[k].second}, "two indices share a value");
        return report;
    }

    // Interval bounds are validated on construction.
    return report;
}

}  // namespace jungck
