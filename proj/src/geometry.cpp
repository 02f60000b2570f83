#include "flagdress/geometry.hpp"

#include "flagdress/errors.hpp"
#include "flagdress/linalg.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

namespace flagdress {

namespace {

// Fixed-capacity-free bitset over constraint indices.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size) : words_((size + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool contains(const Bits& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((other.words_[i] & ~words_[i]) != 0) return false;
        return true;
    }

    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r = a;
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
        return r;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    QVector v;
    Bits zero; // processed constraints tight at v
};

void normalize_ray(QVector& v) {
    const Eigen::Index t = v.size() - 1;
    Rational scale;
    if (v(t).sign() > 0) {
        scale = v(t);
    } else {
        Eigen::Index i = 0;
        while (i < v.size() && v(i).is_zero()) ++i;
        if (i == v.size()) return;
        scale = abs(v(i));
    }
    if (scale == Rational(1)) return;
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= scale;
}

// Extreme rays of the pointed cone {y : h y >= 0} by the double description
// method with the combinatorial adjacency test. Rows are inserted starting
// from `first`.
std::vector<Ray> cone_extreme_rays(const QMatrix& h, int first) {
    const int rows = static_cast<int>(h.rows());
    const int dim = static_cast<int>(h.cols());

    std::vector<int> order;
    order.push_back(first);
    for (int r = 0; r < rows; ++r)
        if (r != first) order.push_back(r);

    std::vector<int> initial;
    QMatrix basis(0, dim);
    for (int r : order) {
        if (static_cast<int>(initial.size()) == dim) break;
        QMatrix trial(basis.rows() + 1, dim);
        trial.topRows(basis.rows()) = basis;
        trial.row(basis.rows()) = h.row(r);
        if (exact_rank(trial) == trial.rows()) {
            basis = std::move(trial);
            initial.push_back(r);
        }
    }
    if (static_cast<int>(initial.size()) < dim) throw std::logic_error("dual cone is not pointed");

    QMatrix aug(dim, 2 * dim);
    aug.leftCols(dim) = basis;
    aug.rightCols(dim) = QMatrix::Identity(dim, dim);
    const QMatrix inverse = reduced_row_echelon(aug).reduced.rightCols(dim);

    std::vector<Ray> rays;
    for (int i = 0; i < dim; ++i) {
        Ray ray{inverse.col(i), Bits(rows)};
        for (int j = 0; j < dim; ++j)
            if (j != i) ray.zero.set(initial[j]);
        normalize_ray(ray.v);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> done(rows, false);
    for (int r : initial) done[r] = true;

    for (int r : order) {
        if (done[r]) continue;
        std::vector<Rational> s(rays.size());
        std::vector<int> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = h.row(r).dot(rays[i].v);
            int sg = s[i].sign();
            (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(static_cast<int>(i));
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + zero.size());
        for (int i : pos) next.push_back(rays[i]);
        for (int i : zero) {
            next.push_back(rays[i]);
            next.back().zero.set(r);
        }
        for (int i : pos) {
            for (int j : neg) {
                Bits common = rays[i].zero & rays[j].zero;
                if (common.count() < dim - 2) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
                    if (rays[k].zero.contains(common)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray ray{rays[j].v * s[i] - rays[i].v * s[j], std::move(common)};
                ray.zero.set(r);
                normalize_ray(ray.v);
                next.push_back(std::move(ray));
            }
        }
        rays = std::move(next);
        done[r] = true;
    }
    return rays;
}

QMatrix project_columns(const QMatrix& points, const std::vector<int>& coords) {
    QMatrix out(points.rows(), static_cast<Eigen::Index>(coords.size()));
    for (std::size_t c = 0; c < coords.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = points.col(coords[c]);
    return out;
}

QMatrix select_rows(const QMatrix& points, std::span<const int> rows) {
    QMatrix out(static_cast<Eigen::Index>(rows.size()), points.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = points.row(rows[i]);
    return out;
}

void finish_cells(const QMatrix& points, std::span<const Rational> weights, std::vector<Cell>& cells) {
    (void)points;
    (void)weights;
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.vertices < b.vertices; });
    cells.erase(std::unique(cells.begin(), cells.end(),
                            [](const Cell& a, const Cell& b) { return a.vertices == b.vertices; }),
                cells.end());
}

std::vector<int> tight_set(const QMatrix& proj, std::span<const Rational> weights, const QVector& a, const Rational& b,
                           bool& feasible) {
    std::vector<int> tight;
    feasible = true;
    for (Eigen::Index j = 0; j < proj.rows(); ++j) {
        Rational value = proj.row(j).dot(a) + b;
        auto c = value <=> weights[j];
        if (c > 0) {
            feasible = false;
            return {};
        }
        if (c == 0) tight.push_back(static_cast<int>(j));
    }
    return tight;
}

AffineFunctional lift_functional(const QVector& a, const Rational& b, const std::vector<int>& coords, Eigen::Index dim) {
    AffineFunctional f{QVector::Zero(dim), b};
    for (std::size_t c = 0; c < coords.size(); ++c) f.a(coords[c]) = a(static_cast<Eigen::Index>(c));
    return f;
}

EdgeList sorted_difference(const EdgeList& a, const EdgeList& b) {
    EdgeList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_config_sizes(int n) {
    if (n < 2 || n > kMaxGroundSet) throw DomainError("ground set size " + std::to_string(n) + " out of range");
}

} // namespace

QVector LatticeVertex::coordinates() const {
    QVector v = QVector::Zero(subset.n());
    for (int e : subset.members()) v(e - 1) = Rational(1);
    return v;
}

std::vector<LatticeVertex> delta_vertices(int p, int q, int n) {
    check_config_sizes(n);
    if (p < 1 || q > n - 1 || p >= q)
        throw DomainError("Δ(p,q;n) needs 1 <= p < q <= n-1, got p=" + std::to_string(p) + " q=" + std::to_string(q) +
                          " n=" + std::to_string(n));
    std::vector<LatticeVertex> out;
    for (const Subset& s : enumerate_subsets(n, p)) out.push_back({0, s});
    for (const Subset& s : enumerate_subsets(n, q)) out.push_back({1, s});
    return out;
}

std::vector<LatticeVertex> hypersimplex_vertices(int d, int n) {
    check_config_sizes(n);
    if (d < 1 || d > n - 1) throw DomainError("Δ(d,n) needs 1 <= d <= n-1");
    std::vector<LatticeVertex> out;
    for (const Subset& s : enumerate_subsets(n, d)) out.push_back({0, s});
    return out;
}

WeightedConfig WeightedConfig::from_layers(const PluckerVector& x, const PluckerVector& y) {
    if (x.n() != y.n()) throw DomainError("layers live on different ground sets");
    WeightedConfig cfg;
    cfg.n_ = x.n();
    cfg.p_ = x.d();
    cfg.q_ = y.d();
    cfg.vertices_ = delta_vertices(cfg.p_, cfg.q_, cfg.n_);
    cfg.weights_ = x.weights();
    cfg.weights_.insert(cfg.weights_.end(), y.weights().begin(), y.weights().end());
    return cfg;
}

WeightedConfig WeightedConfig::from_flag(const FlagInstance& flag) {
    flag.validate();
    if (flag.layers.size() != 2)
        throw DomainError("two-layer configuration needs exactly 2 layers, got " + std::to_string(flag.layers.size()));
    return from_layers(flag.layers[0], flag.layers[1]);
}

WeightedConfig WeightedConfig::single_layer(const PluckerVector& x) {
    WeightedConfig cfg;
    cfg.n_ = x.n();
    cfg.p_ = cfg.q_ = x.d();
    cfg.vertices_ = hypersimplex_vertices(x.d(), x.n());
    cfg.weights_ = x.weights();
    return cfg;
}

QMatrix WeightedConfig::points() const {
    QMatrix out(static_cast<Eigen::Index>(vertices_.size()), n_);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = vertices_[i].coordinates().transpose();
    return out;
}

int WeightedConfig::index_of(const Subset& s) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].subset == s) return static_cast<int>(i);
    return -1;
}

PluckerVector WeightedConfig::layer_p() const {
    const auto count = static_cast<std::ptrdiff_t>(binomial(n_, p_));
    return PluckerVector(n_, p_, std::vector<Rational>(weights_.begin(), weights_.begin() + count));
}

PluckerVector WeightedConfig::layer_q() const {
    if (is_single_layer()) return layer_p();
    const auto count = static_cast<std::ptrdiff_t>(binomial(n_, p_));
    return PluckerVector(n_, q_, std::vector<Rational>(weights_.begin() + count, weights_.end()));
}

LpResult<Rational> lp_max(const QVector& objective, const std::vector<LinearConstraint<Rational>>& constraints) {
    return flagdress::lp_max<Rational>(objective, constraints);
}

bool is_lower_face(const QMatrix& points, std::span<const Rational> weights, std::span<const int> candidate) {
    if (candidate.empty()) throw DomainError("face test on an empty candidate");
    if (static_cast<Eigen::Index>(weights.size()) != points.rows())
        throw DomainError("weight count does not match point count");
    const Eigen::Index dim = points.cols();
    const Eigen::Index vars = dim + 2; // a, b, eps
    std::vector<bool> in_candidate(points.rows(), false);
    for (int c : candidate) {
        if (c < 0 || c >= points.rows()) throw DomainError("candidate index out of range");
        in_candidate[c] = true;
    }

    std::vector<LinearConstraint<Rational>> cons;
    cons.reserve(points.rows() + 1);
    for (Eigen::Index j = 0; j < points.rows(); ++j) {
        LinearConstraint<Rational> con;
        con.coeffs = QVector::Zero(vars);
        con.coeffs.head(dim) = points.row(j).transpose();
        con.coeffs(dim) = Rational(1);
        con.rhs = weights[j];
        if (in_candidate[j]) {
            con.relation = Relation::equal;
        } else {
            con.relation = Relation::less_equal;
            con.coeffs(dim + 1) = Rational(1);
        }
        cons.push_back(std::move(con));
    }
    LinearConstraint<Rational> cap;
    cap.coeffs = QVector::Zero(vars);
    cap.coeffs(dim + 1) = Rational(1);
    cap.rhs = Rational(1);
    cons.push_back(std::move(cap));

    QVector objective = QVector::Zero(vars);
    objective(dim + 1) = Rational(1);
    auto res = lp_max(objective, cons);
    return res.status == LpStatus::optimal && res.optimum.sign() > 0;
}

bool is_face(const QMatrix& points, std::span<const int> candidate) {
    std::vector<Rational> zeros(points.rows(), Rational(0));
    return is_lower_face(points, zeros, candidate);
}

EdgeList lower_edges(const QMatrix& points, std::span<const Rational> weights) {
    EdgeList out;
    const int count = static_cast<int>(points.rows());
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            const int pair[2] = {i, j};
            if (is_lower_face(points, weights, pair)) out.emplace_back(i, j);
        }
    return out;
}

EdgeList edges_of_polytope(const QMatrix& points) {
    std::vector<Rational> zeros(points.rows(), Rational(0));
    return lower_edges(points, zeros);
}

Subdivision regular_subdivision(const QMatrix& points, std::span<const Rational> weights, CellMethod method) {
    if (static_cast<Eigen::Index>(weights.size()) != points.rows())
        throw DomainError("weight count does not match point count");
    Subdivision sub;
    const int count = static_cast<int>(points.rows());
    if (count == 0) return sub;
    const std::vector<int> coords = affine_coordinate_basis(points);
    const QMatrix proj = project_columns(points, coords);
    const int k = static_cast<int>(coords.size());

    if (method == CellMethod::double_description) {
        // Homogenized dual: y = (a, b, t), rows -v.a - b + w t >= 0 and t >= 0.
        QMatrix h(count + 1, k + 2);
        for (int j = 0; j < count; ++j) {
            for (int c = 0; c < k; ++c) h(j, c) = -proj(j, c);
            h(j, k) = Rational(-1);
            h(j, k + 1) = weights[j];
        }
        h.row(count).setZero();
        h(count, k + 1) = Rational(1);
        for (const Ray& ray : cone_extreme_rays(h, count)) {
            if (ray.v(k + 1).sign() <= 0) continue;
            const Rational& t = ray.v(k + 1);
            QVector a(k);
            for (int c = 0; c < k; ++c) a(c) = ray.v(c) / t;
            Rational b = ray.v(k) / t;
            Cell cell;
            for (int j = 0; j < count; ++j)
                if (ray.zero.test(j)) cell.vertices.push_back(j);
            cell.functional = lift_functional(a, b, coords, points.cols());
            sub.cells.push_back(std::move(cell));
        }
    } else {
        std::map<std::vector<Rational>, std::vector<int>> seen;
        std::vector<int> combo(k + 1);
        for (int i = 0; i <= k; ++i) combo[i] = i;
        QMatrix system(k + 1, k + 1);
        QVector rhs(k + 1);
        while (true) {
            for (int i = 0; i <= k; ++i) {
                system.row(i).head(k) = proj.row(combo[i]);
                system(i, k) = Rational(1);
                rhs(i) = weights[combo[i]];
            }
            if (auto sol = solve_square(system, rhs)) {
                QVector a = sol->head(k);
                bool feasible = false;
                auto tight = tight_set(proj, weights, a, (*sol)(k), feasible);
                if (feasible) {
                    std::vector<Rational> key(sol->data(), sol->data() + sol->size());
                    seen.emplace(std::move(key), std::move(tight));
                }
            }
            int i = k;
            while (i >= 0 && combo[i] == count - (k + 1) + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j <= k; ++j) combo[j] = combo[j - 1] + 1;
        }
        for (auto& [key, tight] : seen) {
            QVector a(k);
            for (int c = 0; c < k; ++c) a(c) = key[c];
            sub.cells.push_back({tight, lift_functional(a, key[k], coords, points.cols())});
        }
    }
    finish_cells(points, weights, sub.cells);
    return sub;
}

EdgeList cell_edges(const QMatrix& points, const Subdivision& sub) {
    EdgeList out;
    for (const Cell& cell : sub.cells) {
        const QMatrix local = select_rows(points, cell.vertices);
        for (auto [a, b] : edges_of_polytope(local)) out.emplace_back(cell.vertices[a], cell.vertices[b]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_polyhedral_complex(const QMatrix& points, std::span<const Rational> weights, const Subdivision& sub) {
    std::vector<bool> covered(points.rows(), false);
    for (const Cell& cell : sub.cells) {
        std::vector<bool> in_cell(points.rows(), false);
        for (int v : cell.vertices) {
            covered[v] = true;
            in_cell[v] = true;
        }
        for (Eigen::Index j = 0; j < points.rows(); ++j) {
            QVector pt = points.row(j).transpose();
            auto c = cell.functional(pt) <=> weights[j];
            if (in_cell[j] ? c != 0 : c >= 0) return false;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;

    for (std::size_t i = 0; i < sub.cells.size(); ++i) {
        for (std::size_t j = i + 1; j < sub.cells.size(); ++j) {
            const auto& a = sub.cells[i].vertices;
            const auto& b = sub.cells[j].vertices;
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.empty()) continue;
            for (const auto* cell : {&a, &b}) {
                std::vector<int> local;
                for (int v : common)
                    local.push_back(static_cast<int>(std::lower_bound(cell->begin(), cell->end(), v) - cell->begin()));
                if (!is_face(select_rows(points, *cell), local)) return false;
            }
        }
    }
    return true;
}

EdgeList DeltaEdges::all() const {
    EdgeList out = same_layer;
    out.insert(out.end(), mixed.begin(), mixed.end());
    std::sort(out.begin(), out.end());
    return out;
}

DeltaEdges delta_edges(int p, int q, int n) {
    const auto verts = delta_vertices(p, q, n);
    QMatrix points(static_cast<Eigen::Index>(verts.size()), n);
    for (std::size_t i = 0; i < verts.size(); ++i) points.row(static_cast<Eigen::Index>(i)) = verts[i].coordinates().transpose();

    DeltaEdges out;
    EdgeList lp_mixed;
    for (auto e : edges_of_polytope(points)) {
        if (verts[e.first].layer == verts[e.second].layer)
            out.same_layer.push_back(e);
        else
            lp_mixed.push_back(e);
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].layer != 0) continue;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (verts[j].layer == 1 && verts[i].subset.is_subset_of(verts[j].subset))
                out.mixed.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    std::sort(out.mixed.begin(), out.mixed.end());
    if (out.mixed != lp_mixed)
        throw std::logic_error("containment edges of Δ(" + std::to_string(p) + "," + std::to_string(q) + ";" +
                               std::to_string(n) + ") disagree with the LP edges");
    return out;
}

EdgeList hypersimplex_edges(int d, int n) {
    const auto verts = hypersimplex_vertices(d, n);
    QMatrix points(static_cast<Eigen::Index>(verts.size()), n);
    for (std::size_t i = 0; i < verts.size(); ++i) points.row(static_cast<Eigen::Index>(i)) = verts[i].coordinates().transpose();
    return edges_of_polytope(points);
}

EdgeList base_edges(const WeightedConfig& cfg) {
    if (cfg.is_single_layer()) return hypersimplex_edges(cfg.p(), cfg.n());
    return delta_edges(cfg.p(), cfg.q(), cfg.n()).all();
}

Subdivision subdivision_cells(const WeightedConfig& cfg, CellMethod method) {
    return regular_subdivision(cfg.points(), cfg.weights(), method);
}

EdgeList subdivision_edges(const WeightedConfig& cfg) { return lower_edges(cfg.points(), cfg.weights()); }

SkeletonComparison skeleton_equal(const WeightedConfig& cfg, const EdgeList* base) {
    EdgeList computed;
    if (!base) computed = base_edges(cfg);
    const EdgeList& reference = base ? *base : computed;
    const EdgeList edges = subdivision_edges(cfg);
    SkeletonComparison out;
    out.new_edges = sorted_difference(edges, reference);
    out.missing_edges = sorted_difference(reference, edges);
    out.equal = out.new_edges.empty();
    return out;
}

FaceST face_ST(const Subset& s, const Subset& t, int p, int q, int n) {
    if (s.n() != n || t.n() != n) throw DomainError("S and T must live on [" + std::to_string(n) + "]");
    if (s.size() != p - 1 || t.size() != q + 1)
        throw DomainError("face_ST needs |S| = p-1 = " + std::to_string(p - 1) + " and |T| = q+1 = " +
                          std::to_string(q + 1));
    const auto verts = delta_vertices(p, q, n);

    FaceST face;
    const std::vector<int> free = (t - s).members();
    for (int i : free) face.vertices.push_back(s.with(i));
    for (int i : free) face.vertices.push_back(t.without(i));

    face.functional = QVector::Zero(n);
    for (int j = 1; j <= n; ++j) {
        if (s.contains(j)) face.functional(j - 1) += Rational(1);
        if (!t.contains(j)) face.functional(j - 1) -= Rational(1);
    }
    face.tight_value = Rational((s & t).size());
    bool below = true;
    for (const auto& v : verts) {
        Rational value = face.functional.dot(v.coordinates());
        auto c = value <=> face.tight_value;
        if (c == 0)
            face.tight.push_back(v.subset);
        else if (c > 0)
            below = false;
    }
    std::vector<Subset> expected = face.vertices;
    std::sort(expected.begin(), expected.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Subset> got = face.tight;
    std::sort(got.begin(), got.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    face.verified = below && expected == got;
    return face;
}

PnTransform pn_transform(const Subset& s, const Subset& t) {
    if (s.n() != t.n()) throw DomainError("S and T live on different ground sets");
    PnTransform out;
    out.labels = (t - s).members();
    out.m = static_cast<int>(out.labels.size());
    if (out.m < 2) throw DomainError("pn_transform needs |T \\ S| >= 2, got " + std::to_string(out.m));
    for (int r = 0; r < out.m; ++r) {
        out.vertices.push_back(s.with(out.labels[r]));
        out.images.push_back(r + 1);
    }
    for (int r = 0; r < out.m; ++r) {
        out.vertices.push_back(t.without(out.labels[r]));
        out.images.push_back(-(r + 1));
    }
    if (out.m == 2) return out;

    out.affine = true;
    const int m = out.m;
    const Rational shrink = Rational(1) / Rational(m - 2);
    bool ok = true;
    for (std::size_t k = 0; k < out.vertices.size(); ++k) {
        // Zero the S coordinates and keep T\S (all other coordinates of
        // Δ_{S,T}'s vertices vanish or lie in S).
        QVector y(m);
        for (int r = 0; r < m; ++r) y(r) = out.vertices[k].contains(out.labels[r]) ? Rational(1) : Rational(0);
        const Rational total = y.sum();
        // A y + b = y - (sum y)/(m-2) 1 + 1/(m-2) 1.
        QVector z(m);
        for (int r = 0; r < m; ++r) z(r) = y(r) + (Rational(1) - total) * shrink;
        QVector expected = QVector::Zero(m);
        const int img = out.images[k];
        expected(std::abs(img) - 1) = Rational(img > 0 ? 1 : -1);
        if (z != expected) ok = false;
        out.mapped.push_back(std::move(z));
    }
    out.verified = ok;
    return out;
}

std::vector<int> pn_edge_profile(std::span<const Rational> psi_plus, std::span<const Rational> psi_minus) {
    if (psi_plus.size() != psi_minus.size()) throw DomainError("psi+ and psi- differ in length");
    if (psi_plus.size() < 2) throw DomainError("pn_edge_profile needs m >= 2");
    std::vector<Rational> w;
    for (std::size_t i = 0; i < psi_plus.size(); ++i) w.push_back(psi_plus[i] + psi_minus[i]);
    auto lowest = std::min_element(w.begin(), w.end());
    if (std::count(w.begin(), w.end(), *lowest) != 1) return {};
    return {static_cast<int>(lowest - w.begin()) + 1};
}

QMatrix cross_polytope(int m) {
    if (m < 1) throw DomainError("cross polytope needs m >= 1");
    QMatrix out = QMatrix::Zero(2 * m, m);
    for (int i = 0; i < m; ++i) {
        out(i, i) = Rational(1);
        out(m + i, i) = Rational(-1);
    }
    return out;
}

} // namespace flagdress
