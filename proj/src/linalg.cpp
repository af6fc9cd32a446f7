#include "lv/linalg.hpp"

#include <cstddef>

#include "lv/errors.hpp"

namespace lv::linalg {

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Matrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rational inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

Matrix identity(int n) {
    Matrix m(n, Vector(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

Rational det(Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw dimension_error("det of non-square matrix");
    Rational result(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c].is_zero()) ++sel;
        if (sel == n) return Rational(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            result = -result;
        }
        result *= m[c][c];
        const Rational inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return result;
}

std::optional<Matrix> inverse(Matrix m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, Rational(0));
        m[i][n + i] = Rational(1);
    }
    const auto pivots = rref(m);
    // singular input pushes a pivot into the augmented half
    if (pivots.size() < n || pivots[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
    Matrix inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    Vector out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw dimension_error("mat_vec size mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix out(n, Vector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw dimension_error("mat_mul size mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

Solution solve(const Matrix& a, const Vector& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw dimension_error("solve size mismatch");
    const std::size_t cols = rows ? a[0].size() : 0;
    Matrix aug(rows, Vector(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw dimension_error("solve ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    const auto pivots = rref(aug);
    Solution sol;
    // a pivot in the constant column means 0 = 1 somewhere
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return sol;
    sol.consistent = true;
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
    sol.particular.assign(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) sol.particular[c] = aug[pivot_of_col[c]][cols];
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vector dir(cols, Rational(0));
        dir[c] = Rational(1);
        for (std::size_t d = 0; d < cols; ++d)
            if (pivot_of_col[d] >= 0) dir[d] = -aug[pivot_of_col[d]][c];
        sol.nullspace.push_back(std::move(dir));
    }
    return sol;
}

} // namespace lv::linalg
