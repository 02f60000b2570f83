#include "flagdress/tropical.hpp"

#include "flagdress/errors.hpp"

#include <algorithm>

namespace flagdress {

namespace {

void check_dims(int n, int d) {
    if (n < 2 || n > kMaxGroundSet)
        throw DomainError("ground set size " + std::to_string(n) + " outside 2.." + std::to_string(kMaxGroundSet));
    if (d < 1 || d > n - 1)
        throw DomainError("Plücker vector rank " + std::to_string(d) + " outside 1.." + std::to_string(n - 1));
}

ExtRational finite(const Rational& r) { return ExtRational(r); }

} // namespace

PluckerVector::PluckerVector(int n, int d) : n_(n), d_(d) {
    check_dims(n, d);
    weights_.assign(binomial(n, d), Rational(0));
}

PluckerVector::PluckerVector(int n, int d, std::vector<Rational> weights) : n_(n), d_(d), weights_(std::move(weights)) {
    check_dims(n, d);
    if (weights_.size() != binomial(n, d))
        throw DomainError("expected " + std::to_string(binomial(n, d)) + " weights, got " +
                          std::to_string(weights_.size()));
}

std::size_t PluckerVector::index_of(const Subset& s) const {
    if (s.n() != n_ || s.size() != d_)
        throw DomainError("subset '" + format_subset(s) + "' is not a " + std::to_string(d_) + "-subset of [" +
                          std::to_string(n_) + "]");
    return lex_rank(s);
}

TropPoint::TropPoint(std::vector<ExtRational> coords) : coords_(std::move(coords)) {
    const ExtRational* lowest = nullptr;
    for (const auto& c : coords_)
        if (c.is_finite() && (!lowest || c < *lowest)) lowest = &c;
    if (!lowest) throw DomainError("tropical point needs at least one finite coordinate");
    const Rational shift = lowest->value();
    for (auto& c : coords_)
        if (c.is_finite()) c = ExtRational(c.value() - shift);
}

bool trop_vanishes(std::span<const ExtRational> terms) {
    if (terms.empty()) throw DomainError("trop_vanishes on an empty term list");
    const ExtRational* lowest = &terms[0];
    int count = 1;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        auto c = terms[i] <=> *lowest;
        if (c < 0) {
            lowest = &terms[i];
            count = 1;
        } else if (c == 0) {
            ++count;
        }
    }
    return lowest->is_infinite() || count >= 2;
}

std::vector<RelationViolation> check_plucker(const PluckerVector& p) {
    std::vector<RelationViolation> out;
    const int n = p.n();
    const int d = p.d();
    if (d < 2 || n - d < 2) return out;
    for (const Subset& s : enumerate_subsets(n, d - 2)) {
        const std::vector<int> rest = complement(s).members();
        const int m = static_cast<int>(rest.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c)
                    for (int e = c + 1; e < m; ++e) {
                        const int i = rest[a], j = rest[b], k = rest[c], l = rest[e];
                        auto w = [&](int u, int v) -> const Rational& { return p[s.with(u).with(v)]; };
                        std::vector<ExtRational> terms{finite(w(i, j) + w(k, l)), finite(w(i, k) + w(j, l)),
                                                       finite(w(i, l) + w(j, k))};
                        if (!trop_vanishes(terms))
                            out.push_back({RelationKind::plucker, s, Subset::empty(n), {i, j, k, l}, std::move(terms)});
                    }
    }
    return out;
}

PluckerVector dualize(const PluckerVector& p) {
    PluckerVector q(p.n(), p.n() - p.d());
    for (const Subset& j : q.subsets()) q[j] = p[complement(j)];
    return q;
}

namespace {

void require_valid(const PluckerVector& p) {
    auto violations = check_plucker(p);
    if (!violations.empty()) {
        const auto& v = violations.front();
        std::string where = "S=" + format_subset(v.s) + " ijkl=";
        for (int e : v.indices) where += std::to_string(e);
        throw PreconditionError("not a tropical Plücker vector: " + std::to_string(violations.size()) +
                                " violated relation(s), first at " + where);
    }
}

} // namespace

bool point_in_space(const PluckerVector& p, const TropPoint& x) {
    if (x.n() != p.n())
        throw DomainError("point has " + std::to_string(x.n()) + " coordinates, space lives in n=" + std::to_string(p.n()));
    require_valid(p);
    std::vector<ExtRational> terms;
    for (const Subset& j : enumerate_subsets(p.n(), p.d() + 1)) {
        terms.clear();
        for (int e : j.members()) terms.push_back(finite(p[j.without(e)]) + x[e]);
        if (!trop_vanishes(terms)) return false;
    }
    return true;
}

TropPoint cocircuit(const PluckerVector& p, const Subset& k) {
    if (k.n() != p.n() || k.size() != p.d() - 1)
        throw DomainError("cocircuit needs a " + std::to_string(p.d() - 1) + "-subset of [" + std::to_string(p.n()) + "]");
    require_valid(p);
    std::vector<ExtRational> coords;
    coords.reserve(p.n());
    for (int j = 1; j <= p.n(); ++j)
        coords.push_back(k.contains(j) ? ExtRational::infinity() : finite(p[k.with(j)]));
    return TropPoint(std::move(coords));
}

std::vector<RelationViolation> check_incidence(const PluckerVector& x, const PluckerVector& y) {
    if (x.n() != y.n())
        throw DomainError("incidence check on different ground sets (" + std::to_string(x.n()) + " vs " +
                          std::to_string(y.n()) + ")");
    if (x.d() > y.d())
        throw DomainError("incidence check needs d(x) <= d(y), got " + std::to_string(x.d()) + " > " +
                          std::to_string(y.d()));
    const int n = x.n();
    std::vector<RelationViolation> out;
    const auto ts = enumerate_subsets(n, y.d() + 1);
    std::vector<ExtRational> terms;
    for (const Subset& s : enumerate_subsets(n, x.d() - 1)) {
        for (const Subset& t : ts) {
            const std::vector<int> free = (t - s).members();
            terms.clear();
            for (int i : free) terms.push_back(finite(x[s.with(i)] + y[t.without(i)]));
            if (!trop_vanishes(terms)) out.push_back({RelationKind::incidence, s, t, free, terms});
        }
    }
    return out;
}

void FlagInstance::validate() const {
    if (layers.empty()) throw DomainError("flag has no layers");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].n() != n)
            throw DomainError("layer " + std::to_string(i) + " lives on n=" + std::to_string(layers[i].n()) +
                              ", flag on n=" + std::to_string(n));
        if (i > 0 && layers[i].d() <= layers[i - 1].d())
            throw DomainError("flag dims must increase strictly (layer " + std::to_string(i) + ")");
    }
}

std::vector<int> FlagInstance::dims() const {
    std::vector<int> out;
    for (const auto& l : layers) out.push_back(l.d());
    return out;
}

bool FlagReport::valid() const {
    auto empty = [](const auto& v) { return v.empty(); };
    return std::all_of(plucker.begin(), plucker.end(), empty) && std::all_of(incidence.begin(), incidence.end(), empty);
}

bool FlagReport::all_pairs_valid() const {
    auto empty = [](const auto& v) { return v.empty(); };
    return std::all_of(plucker.begin(), plucker.end(), empty) &&
           std::all_of(incidence_all.begin(), incidence_all.end(), empty);
}

FlagReport check_flag(const FlagInstance& flag, bool all_pairs) {
    flag.validate();
    FlagReport report;
    for (const auto& layer : flag.layers) report.plucker.push_back(check_plucker(layer));
    for (std::size_t i = 0; i + 1 < flag.layers.size(); ++i)
        report.incidence.push_back(check_incidence(flag.layers[i], flag.layers[i + 1]));
    if (all_pairs) {
        for (std::size_t i = 0; i < flag.layers.size(); ++i)
            for (std::size_t j = i + 1; j < flag.layers.size(); ++j)
                report.incidence_all.push_back(check_incidence(flag.layers[i], flag.layers[j]));
    }
    return report;
}

} // namespace flagdress
