#pragma once

// Exact linear programming over free variables:
//
//     maximize  c . x   subject to   a_i . x (<= | >= | =) b_i.
//
// Equalities are eliminated up front by exact substitution. The remaining
// problem is solved in dictionary form: free variables are pivoted into the
// basis and never leave it, then a two-phase simplex (single artificial
// variable for phase one) runs over the slacks with Bland's rule, which
// rules out cycling on degenerate inputs.

#include "flagdress/errors.hpp"
#include "flagdress/rational.hpp"

#include <string>
#include <vector>

namespace flagdress {

enum class LpStatus { optimal, infeasible, unbounded };

enum class Relation { less_equal, greater_equal, equal };

template <class Scalar>
struct LinearConstraint {
    Vec<Scalar> coeffs;
    Relation relation = Relation::less_equal;
    Scalar rhs{};
};

template <class Scalar>
struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Scalar optimum{};      // meaningful when optimal
    Vec<Scalar> optimizer; // feasible point attaining `optimum` when optimal
    int pivots = 0;
};

namespace detail {

template <class Scalar>
class Dictionary {
public:
    // basic_i = d(i,0) + sum_j d(i,j+1) * nonbasic_j; objective rows follow the
    // constraint rows.
    Dictionary(int rows, int nonbasic, int objectives)
        : d_(Mat<Scalar>::Zero(rows + objectives, nonbasic + 1)), rows_(rows) {}

    Mat<Scalar>& table() { return d_; }
    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(d_.cols()) - 1; }

    void pivot(int r, int c) {
        const int width = static_cast<int>(d_.cols());
        const Scalar inv = Scalar(1) / d_(r, c + 1);
        // Row r now expresses the entering variable.
        for (int j = 0; j < width; ++j) {
            if (j == c + 1)
                d_(r, j) = inv;
            else if (d_(r, j) != Scalar(0))
                d_(r, j) = -(d_(r, j) * inv);
        }
        for (int i = 0; i < d_.rows(); ++i) {
            if (i == r) continue;
            const Scalar f = d_(i, c + 1);
            if (f == Scalar(0)) continue;
            for (int j = 0; j < width; ++j) {
                if (j == c + 1)
                    d_(i, j) = f * d_(r, j);
                else if (d_(r, j) != Scalar(0))
                    d_(i, j) += f * d_(r, j);
            }
        }
    }

    void drop_column(int c) {
        Mat<Scalar> next(d_.rows(), d_.cols() - 1);
        next.leftCols(c + 1) = d_.leftCols(c + 1);
        next.rightCols(d_.cols() - c - 2) = d_.rightCols(d_.cols() - c - 2);
        d_ = std::move(next);
    }

    void drop_row(int r) {
        Mat<Scalar> next(d_.rows() - 1, d_.cols());
        next.topRows(r) = d_.topRows(r);
        next.bottomRows(d_.rows() - r - 1) = d_.bottomRows(d_.rows() - r - 1);
        d_ = std::move(next);
        --rows_;
    }

private:
    Mat<Scalar> d_;
    int rows_;
};

} // namespace detail

template <class Scalar>
LpResult<Scalar> lp_max(const Vec<Scalar>& objective, const std::vector<LinearConstraint<Scalar>>& constraints) {
    const int dim = static_cast<int>(objective.size());
    for (const auto& con : constraints) {
        if (con.coeffs.size() != dim)
            throw DomainError("constraint has " + std::to_string(con.coeffs.size()) + " coefficients, objective has " +
                              std::to_string(dim));
    }

    LpResult<Scalar> result;

    // x = origin + basis * y after eliminating equalities.
    Vec<Scalar> origin = Vec<Scalar>::Zero(dim);
    Mat<Scalar> basis = Mat<Scalar>::Identity(dim, dim);
    for (const auto& con : constraints) {
        if (con.relation != Relation::equal) continue;
        Vec<Scalar> g = basis.transpose() * con.coeffs;
        Scalar h = con.rhs - con.coeffs.dot(origin);
        int j = 0;
        while (j < g.size() && g(j) == Scalar(0)) ++j;
        if (j == g.size()) {
            if (h != Scalar(0)) return result; // infeasible
            continue;
        }
        const Vec<Scalar> zj = basis.col(j);
        origin += zj * (h / g(j));
        Mat<Scalar> next(dim, basis.cols() - 1);
        for (int l = 0, out = 0; l < basis.cols(); ++l) {
            if (l == j) continue;
            next.col(out++) = basis.col(l) - zj * (g(l) / g(j));
        }
        basis = std::move(next);
    }

    const int k = static_cast<int>(basis.cols());
    std::vector<const LinearConstraint<Scalar>*> ineqs;
    for (const auto& con : constraints)
        if (con.relation != Relation::equal) ineqs.push_back(&con);
    const int m = static_cast<int>(ineqs.size());

    // Variable ids: y_l -> l, slack_i -> k + i, artificial -> k + m.
    const int artificial = k + m;
    std::vector<int> basic(m), nonbasic(k);
    auto is_free = [k](int id) { return id < k; };

    detail::Dictionary<Scalar> dict(m, k, 2);
    auto& d = dict.table();
    for (int i = 0; i < m; ++i) {
        const auto& con = *ineqs[i];
        Vec<Scalar> a = basis.transpose() * con.coeffs;
        Scalar r = con.rhs - con.coeffs.dot(origin);
        if (con.relation == Relation::greater_equal) {
            a = -a;
            r = -r;
        }
        d(i, 0) = r;
        for (int l = 0; l < k; ++l) d(i, l + 1) = -a(l);
        basic[i] = k + i;
    }
    const Vec<Scalar> reduced_obj = basis.transpose() * objective;
    d(m, 0) = objective.dot(origin);
    for (int l = 0; l < k; ++l) {
        d(m, l + 1) = reduced_obj(l);
        nonbasic[l] = l;
    }
    // Objective rows sit below the constraint rows, which may shrink.
    auto obj_row = [&dict] { return dict.rows(); };
    auto aux_row = [&dict] { return dict.rows() + 1; };

    auto do_pivot = [&](int r, int c) {
        dict.pivot(r, c);
        std::swap(basic[r], nonbasic[c]);
        ++result.pivots;
    };

    // Free variables enter the basis through any slack row that mentions them.
    for (int c = 0; c < k; ++c) {
        for (int r = 0; r < dict.rows(); ++r) {
            if (!is_free(basic[r]) && d(r, c + 1) != Scalar(0)) {
                do_pivot(r, c);
                break;
            }
        }
    }

    // Bland order with the artificial variable ranked first.
    auto order = [artificial](int id) { return id == artificial ? -1 : id; };

    // Runs the simplex on `row`; returns false if unbounded.
    auto simplex = [&](int row) {
        while (true) {
            int enter = -1;
            for (int c = 0; c < dict.cols(); ++c) {
                if (is_free(nonbasic[c])) continue;
                if (d(row, c + 1) > Scalar(0) && (enter < 0 || order(nonbasic[c]) < order(nonbasic[enter])))
                    enter = c;
            }
            if (enter < 0) return true;
            int leave = -1;
            Scalar best;
            for (int r = 0; r < dict.rows(); ++r) {
                if (is_free(basic[r]) || d(r, enter + 1) >= Scalar(0)) continue;
                Scalar ratio = d(r, 0) / -d(r, enter + 1);
                if (leave < 0 || ratio < best || (ratio == best && order(basic[r]) < order(basic[leave]))) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (leave < 0) return false;
            do_pivot(leave, enter);
        }
    };

    // Phase one.
    int worst = -1;
    for (int r = 0; r < dict.rows(); ++r) {
        if (is_free(basic[r]) || d(r, 0) >= Scalar(0)) continue;
        if (worst < 0 || d(r, 0) < d(worst, 0)) worst = r;
    }
    if (worst >= 0) {
        // Append the artificial column: +1 in every slack row.
        Mat<Scalar> grown(d.rows(), d.cols() + 1);
        grown.leftCols(d.cols()) = d;
        grown.col(d.cols()).setZero();
        for (int r = 0; r < dict.rows(); ++r)
            if (!is_free(basic[r])) grown(r, d.cols()) = Scalar(1);
        grown(aux_row(), d.cols()) = Scalar(-1);
        d = std::move(grown);
        nonbasic.push_back(artificial);
        do_pivot(worst, dict.cols() - 1);
        simplex(aux_row());
        if (d(aux_row(), 0) < Scalar(0)) return result; // infeasible

        for (int r = 0; r < dict.rows(); ++r) {
            if (basic[r] != artificial) continue;
            int c = 0;
            while (c < dict.cols() && (nonbasic[c] == artificial || d(r, c + 1) == Scalar(0))) ++c;
            if (c == dict.cols()) {
                dict.drop_row(r);
                basic.erase(basic.begin() + r);
            } else {
                do_pivot(r, c);
            }
            break;
        }
        for (int c = 0; c < dict.cols(); ++c) {
            if (nonbasic[c] == artificial) {
                dict.drop_column(c);
                nonbasic.erase(nonbasic.begin() + c);
                break;
            }
        }
    }

    // A free variable left nonbasic appears in no slack row; any objective
    // weight on it is an unbounded direction.
    for (int c = 0; c < dict.cols(); ++c) {
        if (is_free(nonbasic[c]) && d(obj_row(), c + 1) != Scalar(0)) {
            result.status = LpStatus::unbounded;
            return result;
        }
    }
    if (!simplex(obj_row())) {
        result.status = LpStatus::unbounded;
        return result;
    }

    Vec<Scalar> y = Vec<Scalar>::Zero(k);
    for (int r = 0; r < dict.rows(); ++r)
        if (is_free(basic[r])) y(basic[r]) = d(r, 0);
    result.status = LpStatus::optimal;
    result.optimum = d(obj_row(), 0);
    result.optimizer = origin + basis * y;
    return result;
}

} // namespace flagdress
