#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jungck/point.hpp"

namespace jungck {

/// Absolute tolerance for equality of metric values and of real points.
inline constexpr double kMetricTolerance = 1e-12;

/// Properties a user may vouch for on spaces where they cannot be computed
/// (completeness, regularity, continuity of the mappings, ...). Certifiers
/// surface these as "asserted", never as "verified".
enum class Property {
    Complete,
    IRegular,
    DRegular,
    MRegular,
    SIncreasing,
    RangeInclusion,
    SOContinuous,
    OCompatible,
    OContinuous,
    Continuous,
    WeaklyCompatible,
    Directed,
    TotallyOrdered,
    ComparableMapping,
};

std::string_view to_string(Property p);
std::optional<Property> property_from_string(std::string_view name);

enum class Flavor { Finite, Indexed, Interval };

std::string_view to_string(Flavor f);

/// Finite point table with an explicit distance matrix and order relation.
///
/// The order is stored as its reflexive closure. Construction checks shape
/// only; metric and order axioms are reported by validate_space().
class FiniteSpace {
public:
    using OrderPair = std::pair<std::size_t, std::size_t>;

    /// `distances` is row-major n x n.
    FiniteSpace(std::vector<std::string> labels, std::vector<double> distances,
                const std::vector<OrderPair>& order);

    /// Points on the real line: d = |a - b|, ordered by value.
    static FiniteSpace on_line(std::vector<std::string> labels, const std::vector<double>& values);
    /// Points on the real line with an explicit order relation.
    static FiniteSpace on_line(std::vector<std::string> labels, const std::vector<double>& values,
                               const std::vector<OrderPair>& order);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> find(std::string_view label) const;

    double distance(std::size_t a, std::size_t b) const { return distances_[a * size() + b]; }
    bool leq(std::size_t a, std::size_t b) const { return order_[a * size() + b] != 0; }

    FiniteSpace with_total_relation() const;

private:
    std::vector<std::string> labels_;
    std::vector<double> distances_;
    std::vector<char> order_;
};

/// Countable space x_0, x_1, ... of reals, materialized lazily up to `budget`.
/// Metric is |value(i) - value(j)|, order is the value order.
class IndexedSequenceSpace {
public:
    using ValueFn = std::function<double(std::size_t)>;

    IndexedSequenceSpace(ValueFn value, std::size_t budget, std::string description = {});

    /// Throws BudgetExceeded for i >= budget.
    double value(std::size_t i) const;
    std::size_t budget() const noexcept { return budget_; }
    const std::string& description() const noexcept { return description_; }

    double distance(std::size_t a, std::size_t b) const;
    bool leq(std::size_t a, std::size_t b) const;

    IndexedSequenceSpace with_total_relation() const;

private:
    ValueFn value_;
    std::size_t budget_;
    std::string description_;
    bool total_ = false;
};

struct IntervalBounds {
    double lower;
    double upper;
    bool include_lower = true;
    bool include_upper = true;

    friend bool operator==(const IntervalBounds&, const IntervalBounds&) = default;
};

/// Interval of the real line with the usual metric and either the usual
/// order or a user-declared relation.
class NumericIntervalSpace {
public:
    using OrderPredicate = std::function<bool(double, double)>;

    explicit NumericIntervalSpace(IntervalBounds bounds, OrderPredicate order = {},
                                  std::string order_label = "usual");

    const IntervalBounds& bounds() const noexcept { return bounds_; }
    const std::string& order_label() const noexcept { return order_label_; }
    bool contains(double x) const;

    bool leq(double a, double b) const;

    NumericIntervalSpace with_total_relation() const;

private:
    IntervalBounds bounds_;
    OrderPredicate order_;
    std::string order_label_;
};

/// An ordered metric space in one of three concrete representations.
/// Values are immutable after construction; queries are pure.
class OrderedMetricSpace {
public:
    OrderedMetricSpace(FiniteSpace s) : rep_(std::move(s)) {}
    OrderedMetricSpace(IndexedSequenceSpace s) : rep_(std::move(s)) {}
    OrderedMetricSpace(NumericIntervalSpace s) : rep_(std::move(s)) {}

    Flavor flavor() const noexcept { return static_cast<Flavor>(rep_.index()); }
    bool is_discrete() const noexcept { return flavor() != Flavor::Interval; }

    double metric(const Point& a, const Point& b) const;
    bool leq(const Point& a, const Point& b) const;
    bool comparable(const Point& a, const Point& b) const { return leq(a, b) || leq(b, a); }

    /// Point identity: index equality, or |x - y| <= kMetricTolerance for reals.
    bool same(const Point& a, const Point& b) const;

    bool contains(const Point& p) const;
    /// Throws InvalidPoint (or BudgetExceeded for indexed spaces) when p is not usable.
    void require(const Point& p) const;

    /// Every point of a finite space; the first min(limit, budget) of an
    /// indexed space; empty for interval spaces.
    std::vector<Point> enumerate(std::size_t limit = static_cast<std::size_t>(-1)) const;

    bool asserts(Property p) const { return asserted_.count(p) != 0; }
    const std::set<Property>& assertions() const noexcept { return asserted_; }
    OrderedMetricSpace with_assertions(std::set<Property> props) const;

    /// Same points and metric, every pair related. Used for the plain metric
    /// variant of the theorems.
    OrderedMetricSpace with_total_relation() const;

    const FiniteSpace* finite() const { return std::get_if<FiniteSpace>(&rep_); }
    const IndexedSequenceSpace* indexed() const { return std::get_if<IndexedSequenceSpace>(&rep_); }
    const NumericIntervalSpace* interval() const { return std::get_if<NumericIntervalSpace>(&rep_); }

    std::string label(const Point& p) const;
    std::string describe() const;

private:
    std::variant<FiniteSpace, IndexedSequenceSpace, NumericIntervalSpace> rep_;
    std::set<Property> asserted_;
};

struct Violation {
    std::string axiom;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive metric and order axiom check for finite spaces; structural
/// checks for the other flavors. Violations are entries, never exceptions.
ValidationReport validate_space(const OrderedMetricSpace& space);

}  // namespace jungck
