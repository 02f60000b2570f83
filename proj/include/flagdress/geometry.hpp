#pragma once

// Regular subdivisions of 0/1 point configurations, chiefly the weight
// polytope Δ(p,q;n) = Conv(Δ(p,n), Δ(q,n)) lifted by a pair of Plücker
// vectors, and the face/edge machinery used to compare 1-skeleta.
//
// Every geometric decision is exact: faces are certified by margin LPs
// (tight on the candidate, at least ε below elsewhere, ε <= 1) and cells by
// the vertices of the dual polyhedron {(a,b) : a.v + b <= w(v)}.

#include "flagdress/lp.hpp"
#include "flagdress/rational.hpp"
#include "flagdress/subset.hpp"
#include "flagdress/tropical.hpp"

#include <span>
#include <utility>
#include <vector>

namespace flagdress {

// Vertex e_I of a hypersimplex layer; `layer` is 0 for the p-layer and 1 for
// the q-layer.
struct LatticeVertex {
    int layer = 0;
    Subset subset;

    QVector coordinates() const;
    friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
};

// Index pairs (a < b), sorted.
using EdgeList = std::vector<std::pair<int, int>>;

// Vertices of Δ(p,q;n): layer p in lexicographic order, then layer q.
// Throws DomainError unless 1 <= p < q <= n-1.
std::vector<LatticeVertex> delta_vertices(int p, int q, int n);
// Vertices of the hypersimplex Δ(d,n), lexicographic.
std::vector<LatticeVertex> hypersimplex_vertices(int d, int n);

// One or two lifted hypersimplex layers.
class WeightedConfig {
public:
    // Two-layer configuration on Δ(x.d, y.d; n). Throws DomainError unless
    // x.d < y.d on a common ground set.
    static WeightedConfig from_layers(const PluckerVector& x, const PluckerVector& y);
    // Requires exactly two layers.
    static WeightedConfig from_flag(const FlagInstance& flag);
    // Single-layer configuration on Δ(d,n).
    static WeightedConfig single_layer(const PluckerVector& x);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; } // equals p() for single-layer configs
    bool is_single_layer() const noexcept { return p_ == q_; }

    const std::vector<LatticeVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    // One row per vertex.
    QMatrix points() const;
    // Index of the vertex with this subset, or -1.
    int index_of(const Subset& s) const;

    // The Plücker vectors this configuration was built from.
    PluckerVector layer_p() const;
    PluckerVector layer_q() const;

private:
    int n_ = 0;
    int p_ = 0;
    int q_ = 0;
    std::vector<LatticeVertex> vertices_;
    std::vector<Rational> weights_;
};

// The affine functional v -> a.v + b.
struct AffineFunctional {
    QVector a;
    Rational b;

    Rational operator()(const QVector& v) const { return a.dot(v) + b; }
};

struct Cell {
    std::vector<int> vertices; // sorted configuration indices
    AffineFunctional functional;
};

struct Subdivision {
    std::vector<Cell> cells; // maximal cells, sorted by vertex list
};

enum class CellMethod {
    double_description, // incremental vertex enumeration of the dual polyhedron
    brute_force         // every (dim+1)-subset of constraints, solved and filtered
};

// --- generic point configurations (rows of `points`) ---------------------

LpResult<Rational> lp_max(const QVector& objective, const std::vector<LinearConstraint<Rational>>& constraints);

// An affine functional equals `weights` on `candidate` and lies strictly
// below it on every other point. With all-zero weights this is the ordinary
// face test. Throws DomainError on an empty candidate.
bool is_lower_face(const QMatrix& points, std::span<const Rational> weights, std::span<const int> candidate);
bool is_face(const QMatrix& points, std::span<const int> candidate);

// All pairs passing is_face. Points must be distinct; for 0/1 points no
// three are collinear, so these are exactly the polytope's edges.
EdgeList edges_of_polytope(const QMatrix& points);
// All pairs passing is_lower_face: the edges of the regular subdivision.
EdgeList lower_edges(const QMatrix& points, std::span<const Rational> weights);

// Maximal cells of the regular subdivision induced by `weights`. Works in
// the affine hull of the points, so lower-dimensional configurations are
// fine; functionals are returned in the original coordinates.
Subdivision regular_subdivision(const QMatrix& points, std::span<const Rational> weights,
                                CellMethod method = CellMethod::double_description);

// Union of edges_of_polytope over the cells, in configuration indices.
EdgeList cell_edges(const QMatrix& points, const Subdivision& sub);

// Every point lies in a cell, each functional is tight exactly on its cell
// and below elsewhere, and any two cells meet in a common face of both.
bool is_polyhedral_complex(const QMatrix& points, std::span<const Rational> weights, const Subdivision& sub);

// --- the weight polytope --------------------------------------------------

struct DeltaEdges {
    EdgeList same_layer; // LP-computed
    EdgeList mixed;      // containment pairs I ⊂ J, checked against the LP
    EdgeList all() const;
};

// Edges of Δ(p,q;n) in delta_vertices order. Mixed edges are computed both by
// containment and by margin LPs; a mismatch throws std::logic_error.
DeltaEdges delta_edges(int p, int q, int n);
// Edges of Δ(d,n) in hypersimplex_vertices order (margin LPs).
EdgeList hypersimplex_edges(int d, int n);
// delta_edges(...).all() or hypersimplex_edges(...) to match the configuration.
EdgeList base_edges(const WeightedConfig& cfg);

Subdivision subdivision_cells(const WeightedConfig& cfg, CellMethod method = CellMethod::double_description);
EdgeList subdivision_edges(const WeightedConfig& cfg);

struct SkeletonComparison {
    bool equal = false;
    EdgeList new_edges;     // subdivision edges that are not edges of the base polytope
    EdgeList missing_edges; // base edges absent from the subdivision (never expected)
};

// Compares the subdivision's 1-skeleton with the base polytope's.
// `base` may carry a precomputed base_edges(cfg).
SkeletonComparison skeleton_equal(const WeightedConfig& cfg, const EdgeList* base = nullptr);

// --- the faces Δ_{S,T} and the cross-polytopes P_m ------------------------

struct FaceST {
    std::vector<Subset> vertices; // S+i for i in T\S, then T-i for i in T\S
    QVector functional;           // L = sum_{S} x_i - sum_{not T} x_j
    Rational tight_value;         // |T ∩ S|
    std::vector<Subset> tight;    // Δ vertices where L equals tight_value
    bool verified = false;        // tight == vertices (and L below elsewhere)
};

// |S| = p-1, |T| = q+1, all on [n]; throws DomainError otherwise.
FaceST face_ST(const Subset& s, const Subset& t, int p, int q, int n);

struct PnTransform {
    int m = 0;
    std::vector<int> labels;          // T\S in increasing order; label r+1 at position r
    std::vector<Subset> vertices;     // as in FaceST::vertices
    std::vector<int> images;          // +r for e_r, -r for -e_r (1-based)
    std::vector<QVector> mapped;      // exact affine images (m >= 3)
    bool affine = false;              // false for the direct m = 2 identification
    bool verified = false;            // mapped[k] == sign(images[k]) e_|images[k]| for all k
};

// Affine map Δ_{S,T} -> P_m, m = |T\S|: zero the S coordinates, restrict to
// T\S, then x -> A x + b with A e_i = e_i - (1/(m-2)) sum e_j and
// b = (1/(m-2)) sum e_j. m = 2 uses the direct antipodal labeling. Throws
// DomainError when m < 2 or the sets live on different ground sets.
PnTransform pn_transform(const Subset& s, const Subset& t);

// Indices (1-based) i whose w_i = psi_plus_i + psi_minus_i is the unique
// minimum: the antipodal edge (e_i, -e_i) appears. Throws DomainError if
// m < 2 or the lengths differ.
std::vector<int> pn_edge_profile(std::span<const Rational> psi_plus, std::span<const Rational> psi_minus);

// P_m = Conv(±e_i): rows e_1..e_m then -e_1..-e_m.
QMatrix cross_polytope(int m);

} // namespace flagdress
