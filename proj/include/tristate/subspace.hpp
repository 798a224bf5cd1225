#pragma once

#include <span>
#include <vector>

#include "tristate/matrix.hpp"

namespace tristate {

/// Orthonormal basis of span{vectors} via modified Gram-Schmidt with one
/// re-orthogonalization pass. Vectors whose post-projection norm falls below
/// tol (relative to their own norm) are dropped. Returned vectors have their
/// largest-magnitude coordinate made real positive.
std::vector<Vec> orthonormal_span(std::span<const Vec> vectors, double tol = 1e-10);

/// ||v - sum_i b_i <b_i|v>|| / ||v||, clamped to [0,1]. Zero v gives 0.
/// `basis` must be orthonormal.
double residual_outside_span(std::span<const cx> v, std::span<const Vec> basis);

/// Unit vector in span{x,y} orthogonal to x; phase fixed so the first nonzero
/// coordinate is real positive. Throws std::invalid_argument when x and y are
/// linearly dependent (or zero).
Vec orth_in_2d_span(std::span<const cx> x, std::span<const cx> y);

/// Incrementally grown orthonormal span, for accumulating large vector sets
/// without re-running Gram-Schmidt from scratch.
class SpanAccumulator {
  public:
    explicit SpanAccumulator(double drop_tol = 1e-10) : tol_(drop_tol) {}

    /// Returns true if v enlarged the span.
    bool add(std::span<const cx> v);
    int dim() const { return static_cast<int>(basis_.size()); }
    std::span<const Vec> basis() const { return basis_; }

  private:
    double tol_;
    std::vector<Vec> basis_;
};

}  // namespace tristate
