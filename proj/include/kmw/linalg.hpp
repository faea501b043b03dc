#pragma once

#include <vector>

#include "kmw/rational.hpp"

namespace kmw {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

bool is_zero_vec(const QVec& v);
QVec mat_apply(const QMat& m, const QVec& v);      // m (r x c) * v (c)
QVec row_times_mat(const QVec& u, const QMat& m);  // u (r) * m (r x c)
QMat mat_mul(const QMat& a, const QMat& b);
QMat mat_transpose(const QMat& m);
int rank_of(QMat m);
// Basis of {x : m x = 0}.
std::vector<QVec> kernel_of(const QMat& m, int ncols);

// Row space kept in reduced echelon form; supports membership tests,
// canonical reduction, and incremental insertion.
class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    // Reduces v and stores it if independent; returns true if dim grew.
    bool insert(QVec v);
    bool contains(const QVec& v) const;
    QVec reduce(QVec v) const;  // canonical representative of v mod the space
    const std::vector<QVec>& rows() const { return rows_; }

private:
    int width_ = 0;
    std::vector<QVec> rows_;    // pivot-normalized, mutually reduced
    std::vector<int> pivots_;   // increasing pivot columns
};

}  // namespace kmw
