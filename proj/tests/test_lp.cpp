#include <doctest.h>

#include "flagdress/errors.hpp"
#include "flagdress/linalg.hpp"
#include "flagdress/lp.hpp"

#include <optional>
#include <random>

using namespace flagdress;

namespace {

using Con = LinearConstraint<Rational>;

QVector vec(std::initializer_list<long> xs) {
    QVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v(i++) = Rational(x);
    return v;
}

Con le(QVector a, long b) { return {std::move(a), Relation::less_equal, Rational(b)}; }
Con ge(QVector a, long b) { return {std::move(a), Relation::greater_equal, Rational(b)}; }
Con eq(QVector a, long b) { return {std::move(a), Relation::equal, Rational(b)}; }

bool satisfies(const std::vector<Con>& cons, const QVector& x) {
    for (const auto& c : cons) {
        const Rational v = c.coeffs.dot(x);
        if (c.relation == Relation::less_equal && v > c.rhs) return false;
        if (c.relation == Relation::greater_equal && v < c.rhs) return false;
        if (c.relation == Relation::equal && v != c.rhs) return false;
    }
    return true;
}

// Best objective over all basic solutions: every d-subset of constraints
// solved as equalities. Valid when the feasible region is a nonempty
// polytope (the generator below always adds a bounding box).
std::optional<Rational> vertex_oracle(const QVector& obj, const std::vector<Con>& cons) {
    const int d = static_cast<int>(obj.size());
    const int m = static_cast<int>(cons.size());
    std::optional<Rational> best;
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        QMatrix a(d, d);
        QVector b(d);
        for (int i = 0; i < d; ++i) {
            a.row(i) = cons[pick[i]].coeffs.transpose();
            b(i) = cons[pick[i]].rhs;
        }
        if (auto x = solve_square(a, b); x && satisfies(cons, *x)) {
            const Rational v = obj.dot(*x);
            if (!best || v > *best) best = v;
        }
        int i = d - 1;
        while (i >= 0 && pick[i] == m - d + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

} // namespace

TEST_CASE("margin LP examples") {
    auto r = lp_max<Rational>(vec({1}), {le(vec({1}), 1), le(vec({1}), 3)});
    CHECK(r.status == LpStatus::optimal);
    CHECK(r.optimum == Rational(1));
    CHECK(lp_max<Rational>(vec({1}), {le(vec({1}), 1), ge(vec({1}), 2)}).status == LpStatus::infeasible);
    CHECK(lp_max<Rational>(vec({1}), {}).status == LpStatus::unbounded);
}

TEST_CASE("free variables and equalities") {
    // max -x - y  s.t. x + y >= -3, x - y = 1  ->  x = -1, y = -2, value 3.
    auto r = lp_max<Rational>(vec({-1, -1}), {ge(vec({1, 1}), -3), eq(vec({1, -1}), 1)});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.optimum == Rational(3));
    CHECK(r.optimizer(0) - r.optimizer(1) == Rational(1));
    // Inconsistent equalities.
    CHECK(lp_max<Rational>(vec({0, 0}), {eq(vec({1, 1}), 1), eq(vec({2, 2}), 3)}).status == LpStatus::infeasible);
    // Redundant equalities are fine.
    auto red = lp_max<Rational>(vec({1, 0}), {eq(vec({1, 1}), 1), eq(vec({2, 2}), 2), le(vec({1, 0}), 5)});
    CHECK(red.status == LpStatus::optimal);
    CHECK(red.optimum == Rational(5));
    CHECK_THROWS_AS(lp_max<Rational>(vec({1, 0}), {le(vec({1}), 1)}), DomainError);
}

TEST_CASE("degenerate LP terminates (Bland)") {
    // Many constraints through the optimal vertex.
    std::vector<Con> cons;
    for (int k = 1; k <= 6; ++k) cons.push_back(le(vec({k, 1}), k));
    cons.push_back(ge(vec({1, 0}), 0));
    cons.push_back(ge(vec({0, 1}), 0));
    auto r = lp_max<Rational>(vec({1, 1}), cons);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.optimum == Rational(1));
}

TEST_CASE("random bounded LPs agree with vertex enumeration") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-4, 4);
    std::uniform_int_distribution<int> rel(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 2 + trial % 2;
        std::vector<Con> cons;
        for (int i = 0; i < d; ++i) {
            QVector e = QVector::Zero(d);
            e(i) = Rational(1);
            cons.push_back(le(e, 5));
            cons.push_back(ge(e, -5));
        }
        const int extra = 2 + trial % 4;
        for (int k = 0; k < extra; ++k) {
            QVector a(d);
            for (int i = 0; i < d; ++i) a(i) = Rational(coef(rng));
            const long b = coef(rng);
            const int r = rel(rng);
            cons.push_back(r == 0 ? eq(a, b) : r < 3 ? le(a, b) : ge(a, b));
        }
        QVector obj(d);
        for (int i = 0; i < d; ++i) obj(i) = Rational(coef(rng));
        const auto res = lp_max<Rational>(obj, cons);
        const auto oracle = vertex_oracle(obj, cons);
        if (!oracle) {
            CHECK(res.status == LpStatus::infeasible);
            continue;
        }
        REQUIRE(res.status == LpStatus::optimal);
        CHECK(res.optimum == *oracle);
        CHECK(satisfies(cons, res.optimizer));
        CHECK(obj.dot(res.optimizer) == res.optimum);
    }
}

TEST_CASE("exact elimination") {
    QMatrix m(3, 3);
    m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6), Rational(0), Rational(1), Rational(1);
    CHECK(exact_rank(m) == 2);
    QMatrix pts(3, 3);
    pts << Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(1);
    CHECK(affine_dimension(pts) == 2);
}
