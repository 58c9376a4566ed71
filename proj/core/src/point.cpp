#include "jungck/point.hpp"

#include <charconv>

#include "jungck/error.hpp"

namespace jungck {

std::size_t Point::index() const {
    if (!is_index()) throw InvalidPoint("expected an index handle, got value " + to_string());
    return std::get<0>(handle_);
}

double Point::value() const {
    if (!is_value()) throw InvalidPoint("expected a real handle, got index " + to_string());
    return std::get<1>(handle_);
}

std::string Point::to_string() const {
    if (is_index()) return "#" + std::to_string(std::get<0>(handle_));
    char buf[32];
    *std::to_chars(buf, buf + sizeof buf - 1, std::get<1>(handle_)).ptr = '\0';
    return buf;
}

BudgetExceeded::BudgetExceeded(std::size_t requested, std::size_t budget)
    : Error("index " + std::to_string(requested) + " exceeds materialization budget " +
            std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

DomainError::DomainError(const std::string& what, std::vector<double> inputs)
    : Error(what), inputs_(std::move(inputs)) {}

NoPreimage::NoPreimage(const std::string& what, Point target) : Error(what), target_(target) {}

NoCoincidence::NoCoincidence(const std::string& what, double min_residual, Point argmin)
    : Error(what), min_residual_(min_residual), argmin_(argmin) {}

ConfigError::ConfigError(const std::string& what, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace jungck
