#pragma once

#include "g2sub/errors.hpp"
#include "g2sub/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace g2sub {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <class Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <class Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using MatrixZ = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
struct Echelon {
    MatrixX<Scalar> reduced;   // reduced row echelon form
    std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

// Exact Gauss-Jordan: the pivot is the first nonzero entry in the column.
template <class Derived>
Echelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = m;
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
        if (p == a.rows()) continue;
        a.row(p).swap(a.row(row));
        const Scalar inv = Scalar(1) / a(row, col);
        for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == Scalar(0)) continue;
            const Scalar f = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
    return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

// Basis of the right null space, one vector per free column.
template <class Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const auto ech = row_reduce(m);
    const Eigen::Index n = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (auto c : ech.pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<VectorX<Scalar>> basis;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
        v(free) = Scalar(1);
        for (size_t r = 0; r < ech.pivots.size(); ++r)
            v(ech.pivots[r]) = -ech.reduced(static_cast<Eigen::Index>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class Derived>
MatrixX<typename Derived::Scalar> invert(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw SingularMatrix("invert: matrix is not square");
    const Eigen::Index n = m.rows();
    MatrixX<Scalar> aug(n, 2 * n);
    aug << m, MatrixX<Scalar>::Identity(n, n);
    const auto ech = row_reduce(aug);
    if (static_cast<Eigen::Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        throw SingularMatrix("invert: determinant is zero");
    return ech.reduced.rightCols(n);
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> a = m;
    const Eigen::Index n = a.rows();
    Scalar det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index p = col;
        while (p < n && a(p, col) == Scalar(0)) ++p;
        if (p == n) return Scalar(0);
        if (p != col) {
            a.row(p).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index i = col + 1; i < n; ++i) {
            if (a(i, col) == Scalar(0)) continue;
            const Scalar f = a(i, col) / a(col, col);
            for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

// Some solution of m x = b, or nullopt when the system is inconsistent.
template <class DerivedA, class DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& m,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
    aug << m, b;
    const auto ech = row_reduce(aug);
    VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
    for (size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == m.cols()) return std::nullopt;
        x(ech.pivots[r]) = ech.reduced(static_cast<Eigen::Index>(r), m.cols());
    }
    return x;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

inline MatrixQ to_rational(const MatrixZ& m) { return m.cast<Rational>(); }

}  // namespace g2sub
