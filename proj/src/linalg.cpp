#include "kmw/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace kmw {

bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

QVec mat_apply(const QMat& m, const QVec& v) {
    QVec out(m.size(), Rat(0));
    for (size_t r = 0; r < m.size(); ++r) {
        Rat acc(0);
        for (size_t c = 0; c < v.size(); ++c)
            if (sgn(v[c]) != 0 && sgn(m[r][c]) != 0) acc += m[r][c] * v[c];
        out[r] = acc;
    }
    return out;
}

QVec row_times_mat(const QVec& u, const QMat& m) {
    const size_t cols = m.empty() ? 0 : m[0].size();
    QVec out(cols, Rat(0));
    for (size_t r = 0; r < m.size(); ++r) {
        if (sgn(u[r]) == 0) continue;
        for (size_t c = 0; c < cols; ++c)
            if (sgn(m[r][c]) != 0) out[c] += u[r] * m[r][c];
    }
    return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    const size_t rows = a.size();
    const size_t mid = b.size();
    const size_t cols = b.empty() ? 0 : b[0].size();
    QMat out(rows, QVec(cols, Rat(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < mid; ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (size_t j = 0; j < cols; ++j)
                if (sgn(b[k][j]) != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

QMat mat_transpose(const QMat& m) {
    const size_t rows = m.size();
    const size_t cols = m.empty() ? 0 : m[0].size();
    QMat out(cols, QVec(rows, Rat(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
    return out;
}

int rank_of(QMat m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m[r][col]) != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        const Rat inv = 1 / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || sgn(m[r][col]) == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<QVec> kernel_of(const QMat& m, int ncols) {
    // RREF, then back out the free columns.
    QMat a = m;
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < ncols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][col]) != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        const Rat inv = 1 / a[r][col];
        for (int c = col; c < ncols; ++c) a[r][c] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][col]) == 0) continue;
            const Rat f = a[i][col];
            for (int c = col; c < ncols; ++c) a[i][c] -= f * a[r][c];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<QVec> basis;
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(ncols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

QVec RowSpace::reduce(QVec v) const {
    assert(static_cast<int>(v.size()) == width_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = v[pivots_[i]];
        if (sgn(f) == 0) continue;
        const Rat c = f;  // rows are pivot-normalized
        for (int j = pivots_[i]; j < width_; ++j)
            if (sgn(rows_[i][j]) != 0) v[j] -= c * rows_[i][j];
    }
    return v;
}

bool RowSpace::contains(const QVec& v) const { return is_zero_vec(reduce(v)); }

bool RowSpace::insert(QVec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < width_; ++j)
        if (sgn(v[j]) != 0) { piv = j; break; }
    if (piv < 0) return false;
    const Rat inv = 1 / v[piv];
    for (int j = piv; j < width_; ++j) v[j] *= inv;
    // back-substitute into existing rows so that the basis stays reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat f = rows_[i][piv];
        if (sgn(f) == 0) continue;
        for (int j = piv; j < width_; ++j)
            if (sgn(v[j]) != 0) rows_[i][j] -= f * v[j];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    const size_t pos = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

}  // namespace kmw
