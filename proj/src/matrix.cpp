#include "liediag/matrix.hpp"

#include <vector>

namespace liediag {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<Index> rref(RatMatrix& m)
{
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.row(row).swap(m.row(p));
        const Rational inv = Rational(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (Index j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b)
{
    RatMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RatVector x = zeros<Rational>(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Index>(r), a.cols());
    return x;
}

Index rank(const RatMatrix& a)
{
    RatMatrix m = a;
    return static_cast<Index>(rref(m).size());
}

RatMatrix row_basis(const RatMatrix& a)
{
    RatMatrix m = a;
    const auto r = static_cast<Index>(rref(m).size());
    return m.topRows(r);
}

bool is_strictly_lower(const RatMatrix& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

Matrix<Poly> to_poly(const RatMatrix& m)
{
    Matrix<Poly> p(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) p(i, j) = Poly(m(i, j));
    return p;
}

}  // namespace liediag
