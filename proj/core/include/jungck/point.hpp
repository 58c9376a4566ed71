#pragma once

#include <cstddef>
#include <string>
#include <variant>

namespace jungck {

/// Handle to an element of an ordered metric space.
///
/// Finite and indexed spaces hand out index handles; interval spaces hand out
/// real-valued handles. A handle is only meaningful against the space that
/// issued it; spaces reject foreign handles with InvalidPoint.
class Point {
public:
    static Point at_index(std::size_t i) { return Point{Handle{std::in_place_index<0>, i}}; }
    static Point at_value(double x) { return Point{Handle{std::in_place_index<1>, x}}; }

    bool is_index() const noexcept { return handle_.index() == 0; }
    bool is_value() const noexcept { return handle_.index() == 1; }

    /// Throws InvalidPoint when the handle is real-valued.
    std::size_t index() const;
    /// Throws InvalidPoint when the handle is an index.
    double value() const;

    std::string to_string() const;

    friend bool operator==(const Point&, const Point&) = default;

private:
    using Handle = std::variant<std::size_t, double>;
    explicit Point(Handle h) : handle_(h) {}
    Handle handle_;
};

}  // namespace jungck
