#pragma once

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "liediag/poly.hpp"
#include "liediag/rational.hpp"

namespace liediag {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using PolyMatrix = Matrix<Poly>;
using PolyVector = Vector<Poly>;

template <class Scalar>
Matrix<Scalar> zeros(Index rows, Index cols)
{
    return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Vector<Scalar> zeros(Index size)
{
    return Vector<Scalar>::Constant(size, Scalar(0));
}

template <class Scalar>
Matrix<Scalar> identity(Index n)
{
    Matrix<Scalar> m = zeros<Scalar>(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

/// Pivot preference: lower is better. Monomials (which never vanish on the
/// parameter torus) are preferred over genuine polynomials.
inline int pivot_cost(const Rational&) { return 0; }
inline int pivot_cost(const Poly& p)
{
    return static_cast<int>(p.terms().size() - 1) * 1024 + static_cast<int>(p.degree());
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so this works over Q and over Q[c].
template <class Scalar>
Scalar determinant(Matrix<Scalar> m)
{
    const Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    bool negate = false;
    for (Index k = 0; k < n; ++k) {
        Index best = -1;
        for (Index i = k; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            if (best < 0 || pivot_cost(m(i, k)) < pivot_cost(m(best, k))) best = i;
        }
        if (best < 0) return Scalar(0);
        if (best != k) {
            m.row(k).swap(m.row(best));
            negate = !negate;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Exact solve of A·x = b over Q. Returns the solution with all free
/// variables set to zero, or std::nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Rank over Q by exact elimination.
Index rank(const RatMatrix& a);

/// Rows of `a` reduced to an echelon basis of its row space.
RatMatrix row_basis(const RatMatrix& a);

bool is_strictly_lower(const RatMatrix& m);

Matrix<Poly> to_poly(const RatMatrix& m);

}  // namespace liediag
