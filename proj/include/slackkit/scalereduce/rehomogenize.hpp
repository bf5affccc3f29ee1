#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slackkit/groebner/ideal.hpp"
#include "slackkit/scalereduce/forest.hpp"

namespace slackkit::scale {

using gb::Ideal;
using poly::Polynomial;

/// (d+2)-minors of the scaled matrix saturated by the surviving variables.
Ideal dehomogenizedIdeal(std::size_t d, const ScaledSlackMatrix& y);

Polynomial rehomogenizePoly(const Polynomial& p, const ScaledSlackMatrix& y, const SpanningForest& f);

/// Rehomogenized reduced basis of the dehomogenized ideal, saturated by the
/// forest variables. Passing `dehomogenized` skips recomputing it.
Ideal rehomogenizeIdeal(std::size_t d, const ScaledSlackMatrix& y, const SpanningForest& f,
                        const std::optional<Ideal>& dehomogenized = std::nullopt);

}  // namespace slackkit::scale
