#pragma once

// Exact Gaussian elimination over an ordered field. Works for any Eigen
// scalar with exact arithmetic (Rational in practice); pivots are chosen as
// the first nonzero entry, never by magnitude.

#include "flagdress/rational.hpp"

#include <optional>
#include <vector>

namespace flagdress {

template <class Scalar>
struct EchelonForm {
    Mat<Scalar> reduced;       // reduced row echelon form
    std::vector<int> pivots;   // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

template <class Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    EchelonForm<Scalar> out{m, {}};
    Mat<Scalar>& a = out.reduced;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && a(p, c) == Scalar(0)) ++p;
        if (p == rows) continue;
        if (p != r) a.row(p).swap(a.row(r));
        const Scalar inv = Scalar(1) / a(r, c);
        for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == Scalar(0)) continue;
            const Scalar f = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return out;
}

template <class Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& m) {
    return reduced_row_echelon(m).rank();
}

// Solves a x = b for square a; nullopt when a is singular.
template <class DerivedA, class DerivedB>
std::optional<Vec<typename DerivedA::Scalar>> solve_square(const Eigen::MatrixBase<DerivedA>& a,
                                                           const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    const Eigen::Index n = a.rows();
    Mat<Scalar> aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto ech = reduced_row_echelon(aug);
    if (ech.rank() < n || ech.pivots.back() >= n) return std::nullopt;
    return Vec<Scalar>(ech.reduced.col(n));
}

// Coordinates (column indices) on which the orthogonal projection restricted
// to the affine hull of the rows of `points` is injective. Projecting onto
// them gives a full-dimensional copy of the configuration.
template <class Derived>
std::vector<int> affine_coordinate_basis(const Eigen::MatrixBase<Derived>& points) {
    using Scalar = typename Derived::Scalar;
    if (points.rows() <= 1) return {};
    Mat<Scalar> diffs(points.rows() - 1, points.cols());
    for (Eigen::Index i = 1; i < points.rows(); ++i) diffs.row(i - 1) = points.row(i) - points.row(0);
    return reduced_row_echelon(diffs).pivots;
}

// Affine dimension of the row configuration (-1 for no points).
template <class Derived>
int affine_dimension(const Eigen::MatrixBase<Derived>& points) {
    if (points.rows() == 0) return -1;
    return static_cast<int>(affine_coordinate_basis(points).size());
}

} // namespace flagdress
