#pragma once

// Matroids given by their bases, the basis-level quotient relation used for
// concordance, a flats-based oracle for it, and the per-cell analysis of a
// two-layer subdivision.

#include "flagdress/geometry.hpp"
#include "flagdress/subset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagdress {

// B1 - x + y is not a basis for any y in B2 \ B1.
struct ExchangeWitness {
    Subset b1;
    Subset b2;
    int x = 0;
};

struct MatroidCheck {
    bool ok = false;
    std::optional<ExchangeWitness> witness;
};

// Bases are deduplicated and sorted lexicographically before checking, so
// the witness is the first failure in (B1, B2, x) lex order. Throws
// DomainError on an empty family, mixed cardinalities or a foreign ground set.
MatroidCheck is_matroid(int n, int rank, std::span<const Subset> bases);

class Matroid {
public:
    // Throws DomainError if the bases violate the exchange axiom (the
    // message carries the witness) or fail is_matroid's preconditions.
    Matroid(int n, int rank, std::vector<Subset> bases);

    int n() const noexcept { return n_; }
    int rank() const noexcept { return rank_; }
    const std::vector<Subset>& bases() const noexcept { return bases_; } // sorted lex
    bool is_basis(const Subset& s) const;

    // max |A ∩ B| over bases.
    int rank_of(const Subset& a) const;
    Subset closure(const Subset& a) const;

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
    }

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<Subset> bases_;
    std::vector<std::uint64_t> masks_; // sorted, for membership
};

Matroid uniform_matroid(int rank, int n);

// The failing pair (B, i): C_high = {j : B+i-j a basis of Mhigh}; for each
// candidate B' ⊆ B of Mlow, C_low = {j : B'+i-j a basis of Mlow}, none of
// which is contained in C_high.
struct QuotientWitness {
    Subset basis;
    int element = 0;
    Subset high_set;
    std::vector<std::pair<Subset, Subset>> candidates; // (B', C_low)
};

struct QuotientResult {
    bool ok = false;
    std::optional<QuotientWitness> witness;
};

// Concordance of (low, high) with subset symbols read as ⊆/⊇: for every
// basis B of high and i not in B, some basis B' ⊆ B of low has
// C_low(i, B') ⊆ C_high(i, B). Witness is the first failure in (B lex, i
// ascending) order. Throws DomainError on a ground-set mismatch or
// low.rank() > high.rank().
QuotientResult is_quotient(const Matroid& low, const Matroid& high);

// Closed sets, sorted by cardinality then lexicographically. Throws
// BudgetError for n > 20.
std::vector<Subset> flats(const Matroid& m);

struct FlatsResult {
    bool ok = false;
    std::optional<Subset> missing; // first flat of low that is not a flat of high
};

// flats(low) ⊆ flats(high). Same preconditions as is_quotient.
FlatsResult is_quotient_via_flats(const Matroid& low, const Matroid& high);

// Conv of `vertices`, split into its p- and q-subsets, is concordant.
// Throws DomainError when a layer is empty or not matroidal, naming the
// layer (and the exchange witness).
QuotientResult is_concordant_polytope(std::span<const Subset> vertices, int p, int q);

using SubsetEdge = std::pair<Subset, Subset>;

// Edges of Conv(vertices) that are not edges of Δ(p,q;n) (or of Δ(p,n) when
// p == q). `base` may carry precomputed delta_edges(p,q,n).
std::vector<SubsetEdge> internal_edges(std::span<const Subset> vertices, int p, int q, int n,
                                       const DeltaEdges* base = nullptr);

struct CellAnalysis {
    int cell = 0;               // index into subdivision_cells(cfg)
    std::vector<int> vertices;  // configuration indices
    std::vector<Subset> layer_p;
    std::vector<Subset> layer_q; // empty for single-layer configurations
    MatroidCheck matroid_p;      // ok=false, no witness when the layer is empty
    MatroidCheck matroid_q;
    // Unset when a layer is empty or non-matroidal ("n/a").
    std::optional<QuotientResult> concordance;
    // The flats oracle's verdict whenever `concordance` is set.
    std::optional<FlatsResult> flats_oracle;
    std::vector<SubsetEdge> internal;
};

std::vector<CellAnalysis> analyze_cells(const WeightedConfig& cfg, const Subdivision& sub,
                                        const DeltaEdges* base = nullptr);
std::vector<CellAnalysis> analyze_cells(const WeightedConfig& cfg, const DeltaEdges* base = nullptr);

// All matroids of the given rank on [n], in increasing order of the basis
// family's lex-rank bitmask. n > 5 throws BudgetError unless allow_large;
// more than 20 candidate subsets always throws.
std::vector<Matroid> enumerate_matroids(int n, int rank, bool allow_large = false);

} // namespace flagdress
