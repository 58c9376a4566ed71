#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jungck/certifier.hpp"
#include "jungck/contraction.hpp"
#include "jungck/solver.hpp"
#include "jungck/spaces.hpp"

namespace jungck {

/// Text is for people; Structured is a JSON document.
enum class Format { Text, Structured };

std::string render_certificate(const OrderedMetricSpace& space, const HypothesisReport& report, Format format);

std::string render_solve(const OrderedMetricSpace& space, const IterationTrace& trace,
                         const std::optional<FixedPointResult>& fixed_point, const std::string& fixed_point_error,
                         Format format);

std::string render_oracle(const OrderedMetricSpace& space, const BruteForceResult& result, Format format);

std::string render_catalog(const std::vector<ImplicitContraction>& entries, Format format);

std::string render_conditions(const ImplicitContraction& ic, const std::vector<ConditionReport>& reports,
                              Format format);

}  // namespace jungck
