#include "flagdress/matroid.hpp"

#include "flagdress/errors.hpp"

#include <algorithm>
#include <set>

namespace flagdress {

namespace {

std::vector<Subset> normalized(int n, int rank, std::span<const Subset> bases) {
    if (bases.empty()) throw DomainError("basis family is empty");
    std::vector<Subset> out(bases.begin(), bases.end());
    for (const Subset& b : out) {
        if (b.n() != n) throw DomainError("basis '" + format_subset(b) + "' is not a subset of [" + std::to_string(n) + "]");
        if (b.size() != rank)
            throw DomainError("basis '" + format_subset(b) + "' has cardinality " + std::to_string(b.size()) +
                              ", expected " + std::to_string(rank));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> sorted_masks(const std::vector<Subset>& bases) {
    std::vector<std::uint64_t> masks;
    masks.reserve(bases.size());
    for (const Subset& b : bases) masks.push_back(b.mask());
    std::sort(masks.begin(), masks.end());
    return masks;
}

bool has(const std::vector<std::uint64_t>& masks, std::uint64_t m) {
    return std::binary_search(masks.begin(), masks.end(), m);
}

// First (B1, B2, x) failing exchange, scanning `order` (lex) with masks.
std::optional<ExchangeWitness> exchange_failure(int n, const std::vector<Subset>& order,
                                                const std::vector<std::uint64_t>& masks) {
    for (const Subset& b1 : order) {
        for (const Subset& b2 : order) {
            const std::uint64_t only1 = b1.mask() & ~b2.mask();
            const std::uint64_t only2 = b2.mask() & ~b1.mask();
            for (std::uint64_t xs = only1; xs; xs &= xs - 1) {
                const std::uint64_t xbit = xs & -xs;
                bool repaired = false;
                for (std::uint64_t ys = only2; ys && !repaired; ys &= ys - 1)
                    repaired = has(masks, (b1.mask() & ~xbit) | (ys & -ys));
                if (!repaired) return ExchangeWitness{b1, b2, __builtin_ctzll(xbit) + 1};
            }
        }
    }
    (void)n;
    return std::nullopt;
}

std::string describe(const ExchangeWitness& w) {
    return "(B1=" + format_subset(w.b1) + ", B2=" + format_subset(w.b2) + ", x=" + std::to_string(w.x) + ")";
}

void check_pair(const Matroid& low, const Matroid& high) {
    if (low.n() != high.n())
        throw DomainError("matroids on different ground sets (" + std::to_string(low.n()) + " vs " +
                          std::to_string(high.n()) + ")");
    if (low.rank() > high.rank())
        throw DomainError("quotient candidate has rank " + std::to_string(low.rank()) + " > " +
                          std::to_string(high.rank()));
}

// {j in B+i : B+i-j a basis}.
Subset exchange_set(const Matroid& m, const Subset& b, int i) {
    const Subset bi = b.with(i);
    Subset out = Subset::empty(m.n());
    for (int j : bi.members())
        if (m.is_basis(bi.without(j))) out = out.with(j);
    return out;
}

std::vector<Subset> layer_of(std::span<const Subset> vertices, int d) {
    std::vector<Subset> out;
    for (const Subset& v : vertices)
        if (v.size() == d) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

bool subset_edge_less(const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

} // namespace

MatroidCheck is_matroid(int n, int rank, std::span<const Subset> bases) {
    const auto order = normalized(n, rank, bases);
    MatroidCheck out;
    out.witness = exchange_failure(n, order, sorted_masks(order));
    out.ok = !out.witness;
    return out;
}

Matroid::Matroid(int n, int rank, std::vector<Subset> bases) : n_(n), rank_(rank) {
    if (n < 1 || n > kMaxGroundSet) throw DomainError("ground set size " + std::to_string(n) + " out of range");
    if (rank < 0 || rank > n) throw DomainError("rank " + std::to_string(rank) + " outside 0.." + std::to_string(n));
    bases_ = normalized(n, rank, bases);
    masks_ = sorted_masks(bases_);
    if (auto w = exchange_failure(n, bases_, masks_))
        throw DomainError("bases violate the exchange axiom at " + describe(*w));
}

bool Matroid::is_basis(const Subset& s) const { return s.n() == n_ && has(masks_, s.mask()); }

int Matroid::rank_of(const Subset& a) const {
    int best = 0;
    for (std::uint64_t m : masks_) best = std::max(best, __builtin_popcountll(m & a.mask()));
    return best;
}

Subset Matroid::closure(const Subset& a) const {
    const int r = rank_of(a);
    Subset out = a;
    for (int e = 1; e <= n_; ++e)
        if (!a.contains(e) && rank_of(a.with(e)) == r) out = out.with(e);
    return out;
}

Matroid uniform_matroid(int rank, int n) {
    if (n < 1 || rank < 0 || rank > n) throw DomainError("uniform matroid needs 0 <= rank <= n");
    return Matroid(n, rank, enumerate_subsets(n, rank));
}

QuotientResult is_quotient(const Matroid& low, const Matroid& high) {
    check_pair(low, high);
    const int n = high.n();
    for (const Subset& b : high.bases()) {
        for (int i = 1; i <= n; ++i) {
            if (b.contains(i)) continue;
            const Subset high_set = exchange_set(high, b, i);
            QuotientWitness w{b, i, high_set, {}};
            bool repaired = false;
            for (const Subset& bp : low.bases()) {
                if (!bp.is_subset_of(b)) continue;
                const Subset low_set = exchange_set(low, bp, i);
                if (low_set.is_subset_of(high_set)) {
                    repaired = true;
                    break;
                }
                w.candidates.emplace_back(bp, low_set);
            }
            if (!repaired) return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

std::vector<Subset> flats(const Matroid& m) {
    const int n = m.n();
    if (n > 20) throw BudgetError("flats enumeration limited to n <= 20, got " + std::to_string(n));
    std::vector<Subset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Subset a(n, mask);
        if (m.closure(a) == a) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), subset_edge_less);
    return out;
}

FlatsResult is_quotient_via_flats(const Matroid& low, const Matroid& high) {
    check_pair(low, high);
    for (const Subset& f : flats(low))
        if (high.closure(f) != f) return {false, f};
    return {true, std::nullopt};
}

QuotientResult is_concordant_polytope(std::span<const Subset> vertices, int p, int q) {
    const auto lp = layer_of(vertices, p);
    const auto lq = layer_of(vertices, q);
    if (lp.size() + lq.size() != vertices.size())
        throw DomainError("vertex set has subsets outside layers " + std::to_string(p) + " and " + std::to_string(q));
    if (lp.empty()) throw DomainError("layer p=" + std::to_string(p) + " is empty");
    if (lq.empty()) throw DomainError("layer q=" + std::to_string(q) + " is empty");
    const int n = lp.front().n();
    auto build = [&](const std::vector<Subset>& layer, char name, int d) {
        auto check = is_matroid(n, d, layer);
        if (!check.ok)
            throw DomainError(std::string("layer ") + name + "=" + std::to_string(d) +
                              " is not matroidal: exchange fails at " + describe(*check.witness));
        return Matroid(n, d, layer);
    };
    return is_quotient(build(lp, 'p', p), build(lq, 'q', q));
}

std::vector<SubsetEdge> internal_edges(std::span<const Subset> vertices, int p, int q, int n, const DeltaEdges* base) {
    std::vector<Subset> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end(), subset_edge_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() < 2) return {};

    std::set<std::pair<std::uint64_t, std::uint64_t>> known;
    {
        std::vector<LatticeVertex> lattice;
        EdgeList edges;
        if (p == q) {
            lattice = hypersimplex_vertices(p, n);
            edges = hypersimplex_edges(p, n);
        } else {
            lattice = delta_vertices(p, q, n);
            edges = base ? base->all() : delta_edges(p, q, n).all();
        }
        for (auto [a, b] : edges) {
            known.emplace(lattice[a].subset.mask(), lattice[b].subset.mask());
            known.emplace(lattice[b].subset.mask(), lattice[a].subset.mask());
        }
    }

    QMatrix points(static_cast<Eigen::Index>(verts.size()), n);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].n() != n || (verts[i].size() != p && verts[i].size() != q))
            throw DomainError("'" + format_subset(verts[i]) + "' is not a vertex of the weight polytope");
        points.row(static_cast<Eigen::Index>(i)) = LatticeVertex{0, verts[i]}.coordinates().transpose();
    }
    std::vector<SubsetEdge> out;
    for (auto [a, b] : edges_of_polytope(points))
        if (!known.count({verts[a].mask(), verts[b].mask()})) out.emplace_back(verts[a], verts[b]);
    return out;
}

std::vector<CellAnalysis> analyze_cells(const WeightedConfig& cfg, const Subdivision& sub, const DeltaEdges* base) {
    std::optional<DeltaEdges> own;
    if (!base && !cfg.is_single_layer()) base = &own.emplace(delta_edges(cfg.p(), cfg.q(), cfg.n()));

    std::vector<CellAnalysis> out;
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
        CellAnalysis a;
        a.cell = static_cast<int>(c);
        a.vertices = sub.cells[c].vertices;
        std::vector<Subset> all;
        for (int v : a.vertices) {
            const LatticeVertex& lv = cfg.vertices()[v];
            (lv.layer == 0 ? a.layer_p : a.layer_q).push_back(lv.subset);
            all.push_back(lv.subset);
        }
        if (!a.layer_p.empty()) a.matroid_p = is_matroid(cfg.n(), cfg.p(), a.layer_p);
        if (!a.layer_q.empty()) a.matroid_q = is_matroid(cfg.n(), cfg.q(), a.layer_q);
        if (a.matroid_p.ok && a.matroid_q.ok) {
            Matroid low(cfg.n(), cfg.p(), a.layer_p);
            Matroid high(cfg.n(), cfg.q(), a.layer_q);
            a.concordance = is_quotient(low, high);
            a.flats_oracle = is_quotient_via_flats(low, high);
        }
        a.internal = internal_edges(all, cfg.p(), cfg.q(), cfg.n(), base);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<CellAnalysis> analyze_cells(const WeightedConfig& cfg, const DeltaEdges* base) {
    return analyze_cells(cfg, subdivision_cells(cfg), base);
}

std::vector<Matroid> enumerate_matroids(int n, int rank, bool allow_large) {
    if (n < 1 || rank < 0 || rank > n)
        throw DomainError("enumerate_matroids needs 0 <= rank <= n and n >= 1");
    if (n > 5 && !allow_large)
        throw BudgetError("matroid enumeration limited to n <= 5 (got " + std::to_string(n) + "); use --allow-large");
    const auto candidates = enumerate_subsets(n, rank);
    if (candidates.size() > 20)
        throw BudgetError("matroid enumeration over " + std::to_string(candidates.size()) +
                          " candidate bases exceeds the hard limit of 20");
    std::vector<Matroid> out;
    const std::uint64_t families = std::uint64_t{1} << candidates.size();
    std::vector<Subset> bases;
    for (std::uint64_t f = 1; f < families; ++f) {
        bases.clear();
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if ((f >> k) & 1U) bases.push_back(candidates[k]);
        if (!exchange_failure(n, bases, sorted_masks(bases))) out.emplace_back(n, rank, bases);
    }
    return out;
}

} // namespace flagdress
