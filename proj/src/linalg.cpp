#include "gqg/linalg.hpp"

#include <algorithm>

namespace gqg {

Vec zero_vec(const CycField& f, size_t width) { return Vec(width, CycScalar(f)); }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const CycScalar& x) { return x.is_zero(); });
}

std::pair<Vec, Vec> RowSpace::reduce(const Vec& v) const {
    // eliminate in increasing lead-column order; later eliminations only
    // touch columns to the right, so cleared leads stay cleared
    Vec residual = v;
    Vec coeffs(rows_.size(), CycScalar(*field_));
    for (size_t r : order_) {
        const CycScalar& c = residual[lead_[r]];
        if (c.is_zero()) continue;
        coeffs[r] = c;
        for (size_t j = lead_[r]; j < width_; ++j) {
            if (!rows_[r][j].is_zero()) residual[j] -= coeffs[r] * rows_[r][j];
        }
    }
    return {std::move(residual), std::move(coeffs)};
}

bool RowSpace::add(const Vec& v) {
    if (v.size() != width_) throw Error("RowSpace: width mismatch");
    auto [residual, coeffs] = reduce(v);
    size_t lead = width_;
    for (size_t j = 0; j < width_; ++j) {
        if (!residual[j].is_zero()) {
            lead = j;
            break;
        }
    }
    if (lead == width_) return false;

    size_t n_accepted = combo_.empty() ? 0 : combo_[0].size();
    // new echelon row = (v - sum coeffs * rows) / pivot
    CycScalar inv = residual[lead].inverse();
    Vec row = zero_vec(*field_, width_);
    for (size_t j = lead; j < width_; ++j)
        if (!residual[j].is_zero()) row[j] = residual[j] * inv;

    Vec combo(n_accepted + 1, CycScalar(*field_));
    combo[n_accepted] = inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (coeffs[r].is_zero()) continue;
        for (size_t j = 0; j < combo_[r].size(); ++j)
            if (!combo_[r][j].is_zero()) combo[j] -= inv * coeffs[r] * combo_[r][j];
    }
    for (auto& c : combo_) c.resize(n_accepted + 1, CycScalar(*field_));

    rows_.push_back(std::move(row));
    lead_.push_back(lead);
    combo_.push_back(std::move(combo));
    size_t id = rows_.size() - 1;
    auto pos = std::lower_bound(order_.begin(), order_.end(), id,
                                [this](size_t a, size_t b) { return lead_[a] < lead_[b]; });
    order_.insert(pos, id);
    return true;
}

bool RowSpace::contains(const Vec& v) const {
    if (v.size() != width_) throw Error("RowSpace: width mismatch");
    return vec_is_zero(reduce(v).first);
}

std::optional<Vec> RowSpace::express(const Vec& v) const {
    if (v.size() != width_) throw Error("RowSpace: width mismatch");
    auto [residual, coeffs] = reduce(v);
    if (!vec_is_zero(residual)) return std::nullopt;
    Vec out(rows_.size(), CycScalar(*field_));
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (coeffs[r].is_zero()) continue;
        for (size_t j = 0; j < combo_[r].size(); ++j)
            if (!combo_[r][j].is_zero()) out[j] += coeffs[r] * combo_[r][j];
    }
    out.resize(rows_.size(), CycScalar(*field_));
    return out;
}

std::optional<LinearSolution> solve_linear(const CycField& f, size_t width, std::vector<Vec> rows,
                                           Vec rhs) {
    size_t m = rows.size();
    size_t n = width;
    if (rhs.size() != m) throw Error("solve_linear: rhs size mismatch");
    for (const auto& row : rows)
        if (row.size() != n) throw Error("solve_linear: row width mismatch");

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t p = r;
        while (p < m && rows[p][c].is_zero()) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        CycScalar inv = rows[r][c].inverse();
        for (size_t j = c; j < n; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            CycScalar factor = rows[i][c];
            for (size_t j = c; j < n; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= factor * rows[r][j];
            rhs[i] -= factor * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    LinearSolution sol;
    sol.particular = zero_vec(f, n);
    for (size_t k = 0; k < pivot_col.size(); ++k) sol.particular[pivot_col[k]] = rhs[k];

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec basis = zero_vec(f, n);
        basis[c] = CycScalar::one(f);
        for (size_t k = 0; k < pivot_col.size(); ++k) basis[pivot_col[k]] = -rows[k][c];
        sol.nullspace.push_back(std::move(basis));
    }
    return sol;
}

size_t matrix_rank(const CycField& f, const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    RowSpace space(f, rows[0].size());
    for (const auto& row : rows) space.add(row);
    return space.dim();
}

std::vector<Vec> matrix_inverse(const CycField& f, const std::vector<Vec>& m) {
    size_t n = m.size();
    std::vector<Vec> a = m;
    std::vector<Vec> inv(n, zero_vec(f, n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = CycScalar::one(f);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw Error("matrix_inverse: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        CycScalar s = a[c][c].inverse();
        for (size_t j = 0; j < n; ++j) {
            if (!a[c][j].is_zero()) a[c][j] *= s;
            if (!inv[c][j].is_zero()) inv[c][j] *= s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            CycScalar factor = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                if (!a[c][j].is_zero()) a[i][j] -= factor * a[c][j];
                if (!inv[c][j].is_zero()) inv[i][j] -= factor * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace gqg
