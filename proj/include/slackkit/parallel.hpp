#pragma once

#include <cstddef>
#include <functional>

namespace slackkit {

/// Worker count for internal parallel loops: hardware concurrency, capped by
/// the SLACKKIT_THREADS environment variable when set (minimum 1).
std::size_t threadCount();

/// Runs body(i) for i in [0, count) on up to threadCount() threads. Callers
/// write results into per-index slots, so output order never depends on
/// scheduling.
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace slackkit
