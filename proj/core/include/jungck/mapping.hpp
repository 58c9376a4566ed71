#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jungck/point.hpp"
#include "jungck/spaces.hpp"

namespace jungck {

/// A self-map of an ordered metric space: a lookup table (finite spaces), an
/// index function (indexed spaces), a real function (interval spaces), or the
/// identity on any flavor.
class SelfMap {
public:
    using Table = std::vector<std::size_t>;
    using IndexFn = std::function<std::size_t(std::size_t)>;
    using RealFn = std::function<double(double)>;

    SelfMap() = default;  // identity

    static SelfMap identity() { return SelfMap{}; }
    static SelfMap table(Table t, std::string label = {});
    static SelfMap index_fn(IndexFn f, std::string label = {});
    static SelfMap real_fn(RealFn f, std::string label = {});

    bool is_identity() const noexcept { return std::holds_alternative<std::monostate>(rep_); }
    const std::string& label() const noexcept { return label_; }
    const Table* as_table() const { return std::get_if<Table>(&rep_); }

    /// Applies the map and checks the image lies in the space. Indexed images
    /// are not budget-checked here; the budget applies when a value is read.
    Point apply(const OrderedMetricSpace& space, const Point& p) const;

    /// Real-valued evaluation without the containment check (identity or RealFn).
    double eval_real(double x) const;

private:
    std::variant<std::monostate, Table, IndexFn, RealFn> rep_;
    std::string label_ = "id";
};

/// The pair (T, S). For interval spaces S-preimages come from an explicit
/// inverse when given, otherwise from bisection (requires s_monotone).
struct MappingPair {
    SelfMap T;
    SelfMap S;
    std::optional<std::function<double(double)>> s_inverse;
    bool s_monotone = false;
};

/// Deterministic choice of x with Sx = target: the smallest index for
/// discrete spaces, the configured inverse or a bisection root (tolerance
/// 1e-12) otherwise. nullopt when target has no preimage in the space.
std::optional<Point> s_preimage(const OrderedMetricSpace& space, const MappingPair& pair,
                                const Point& target);

}  // namespace jungck
