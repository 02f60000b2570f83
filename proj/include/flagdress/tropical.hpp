#pragma once

// Tropical Plücker vectors (min-plus convention), tropical linear spaces,
// duality, and the incidence relations between nested tropical linear spaces.

#include "flagdress/rational.hpp"
#include "flagdress/subset.hpp"

#include <span>
#include <vector>

namespace flagdress {

// Finite weights on every d-subset of [n], stored in lexicographic subset
// order. 1 <= d <= n-1.
class PluckerVector {
public:
    PluckerVector() = default;
    // All-zero vector. Throws DomainError unless 1 <= d <= n-1.
    PluckerVector(int n, int d);
    // `weights` in enumerate_subsets(n, d) order.
    PluckerVector(int n, int d, std::vector<Rational> weights);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    std::size_t size() const noexcept { return weights_.size(); }

    const Rational& operator[](const Subset& s) const { return weights_[index_of(s)]; }
    Rational& operator[](const Subset& s) { return weights_[index_of(s)]; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    std::vector<Subset> subsets() const { return enumerate_subsets(n_, d_); }

    friend bool operator==(const PluckerVector&, const PluckerVector&) = default;

private:
    std::size_t index_of(const Subset& s) const;

    int n_ = 0;
    int d_ = 0;
    std::vector<Rational> weights_;
};

// A point of tropical projective space: coordinates modulo adding a common
// finite constant. Stored in canonical form (minimum finite coordinate 0).
class TropPoint {
public:
    // Throws DomainError if every coordinate is +inf.
    explicit TropPoint(std::vector<ExtRational> coords);

    int n() const noexcept { return static_cast<int>(coords_.size()); }
    // 1-based.
    const ExtRational& operator[](int j) const { return coords_.at(j - 1); }
    const std::vector<ExtRational>& coords() const noexcept { return coords_; }

    friend bool operator==(const TropPoint&, const TropPoint&) = default;

private:
    std::vector<ExtRational> coords_;
};

enum class RelationKind { plucker, incidence };

struct RelationViolation {
    RelationKind kind = RelationKind::plucker;
    Subset s;                 // the (d-2)-set (plucker) or (p-1)-set (incidence)
    Subset t;                 // the (q+1)-set; incidence only
    std::vector<int> indices; // i<j<k<l (plucker) or T\S in increasing order (incidence)
    std::vector<ExtRational> terms;

    friend bool operator==(const RelationViolation&, const RelationViolation&) = default;
};

// True iff the minimum is attained at least twice, or the minimum is +inf.
// Throws DomainError on an empty list.
bool trop_vanishes(std::span<const ExtRational> terms);

// Every three-term relation failing trop_vanishes, in lexicographic (S, ijkl)
// order. Empty iff p is a tropical Plücker vector.
std::vector<RelationViolation> check_plucker(const PluckerVector& p);

// Q with Q.d = n - d and Q[J] = P[[n] \ J].
PluckerVector dualize(const PluckerVector& p);

// Membership in the tropical linear space of p. Throws PreconditionError if
// p violates the Plücker relations, DomainError on a dimension mismatch.
bool point_in_space(const PluckerVector& p, const TropPoint& x);

// The cocircuit point c_j = p[K+j] (j not in K), +inf on K. |K| = d-1.
TropPoint cocircuit(const PluckerVector& p, const Subset& k);

// All (S, T) incidence relations between x (d = p) and y (d = q >= p) that
// fail trop_vanishes, in lexicographic (S, T) order.
std::vector<RelationViolation> check_incidence(const PluckerVector& x, const PluckerVector& y);

struct FlagInstance {
    int n = 0;
    std::vector<PluckerVector> layers; // strictly increasing d

    // Throws DomainError on an empty list, mismatched n or non-increasing d.
    void validate() const;
    std::vector<int> dims() const;
};

struct FlagReport {
    std::vector<std::vector<RelationViolation>> plucker;          // per layer
    std::vector<std::vector<RelationViolation>> incidence;        // per consecutive pair
    std::vector<std::vector<RelationViolation>> incidence_all;    // all pairs (i<j), row-major; empty unless requested

    bool valid() const;
    bool all_pairs_valid() const;
};

FlagReport check_flag(const FlagInstance& flag, bool all_pairs = false);

} // namespace flagdress
