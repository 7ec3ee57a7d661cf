#pragma once

#include <optional>
#include <vector>

#include "gqg/cyclotomic.hpp"

namespace gqg {

using Vec = std::vector<CycScalar>;

Vec zero_vec(const CycField& f, size_t width);
bool vec_is_zero(const Vec& v);

/// Incremental exact echelon basis over Q(zeta_n) that remembers how each
/// echelon row combines the accepted input rows, so spanning-set coordinates
/// can be recovered. Pivot choice is positional (leftmost nonzero), which
/// keeps results deterministic for a fixed insertion order.
class RowSpace {
  public:
    RowSpace(const CycField& f, size_t width) : field_(&f), width_(width) {}

    size_t dim() const { return rows_.size(); }
    size_t width() const { return width_; }

    /// Insert v; returns true when v was independent of the current span.
    bool add(const Vec& v);
    /// True when v lies in the current span.
    bool contains(const Vec& v) const;
    /// Coordinates of v over the accepted (independent) input rows, or
    /// nullopt when v is outside the span.
    std::optional<Vec> express(const Vec& v) const;

  private:
    const CycField* field_;
    size_t width_;
    std::vector<Vec> rows_;                 // echelon rows, leading coefficient 1
    std::vector<size_t> lead_;              // leading column per echelon row
    std::vector<size_t> order_;             // row ids sorted by lead column
    std::vector<Vec> combo_;                // rows_[r] = sum combo_[r][j] * accepted[j]

    // returns residual and the accumulated echelon-row coefficients
    std::pair<Vec, Vec> reduce(const Vec& v) const;
};

/// Exact dense linear solve A x = b.
/// Returns nullopt when inconsistent; otherwise one particular solution
/// (free variables set to zero) and a basis of the homogeneous nullspace,
/// both deterministic for a fixed row/column order.
struct LinearSolution {
    Vec particular;
    std::vector<Vec> nullspace;
};
std::optional<LinearSolution> solve_linear(const CycField& f, size_t width, std::vector<Vec> rows,
                                           Vec rhs);

/// Rank of a dense matrix.
size_t matrix_rank(const CycField& f, const std::vector<Vec>& rows);

/// Inverse of a square nonsingular matrix; throws when singular.
std::vector<Vec> matrix_inverse(const CycField& f, const std::vector<Vec>& m);

} // namespace gqg
