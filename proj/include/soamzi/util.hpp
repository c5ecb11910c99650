#pragma once

#include <cstddef>
#include <functional>

namespace soamzi {

/// Minimizes a unimodal f on [a, b] by golden-section search until the
/// bracket is narrower than tol; returns the bracket midpoint.
double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol);

/// Runs body(i) for i in [0, n) on a pool of `workers` threads (0 = hardware
/// concurrency). Exceptions propagate from the first failing index. Indices
/// are handed out atomically; the caller must make body(i) write only to
/// slot i of any shared output.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace soamzi
